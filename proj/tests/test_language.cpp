#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "rauzylab/errors.hpp"
#include "rauzylab/language.hpp"

using namespace rauzylab;

namespace {

  oracle::Words as_set(WordSet const& s) {
    return {s.begin(), s.end()};
  }

  LanguageOracle& fib_oracle() {
    static LanguageOracle oracle(fibonacci_rule());
    return oracle;
  }

}  // namespace

TEST_CASE("FibonacciConvention") {
  FibonacciConvention const f;
  CHECK(f(1) == 1);
  CHECK(f(2) == 1);
  CHECK(f(3) == 2);
  CHECK(f(4) == 3);
  CHECK(f(7) == 13);
  CHECK(f(10) == 55);
  FibonacciConvention const shifted{1, 2};
  CHECK(shifted(4) == 5);
  CHECK_THROWS_AS((void) f(0), DomainError);
}

TEST_CASE("generation_set") {
  auto const rule = fibonacci_rule();
  CHECK(generation_set(rule, 0).empty());
  CHECK(generation_set(rule, 1) == WordSet{"b"});
  CHECK(generation_set(rule, 2) == WordSet{"a"});
  CHECK(generation_set(rule, 3) == WordSet{"ab", "ba"});
  CHECK(generation_set(rule, 4) == WordSet{"aba", "aab", "baa"});
  CHECK(generation_set(rule, 5).contains("aabba"));
  CHECK_THROWS_AS(generation_set(noble_means_rule(2), 3), DomainError);

  auto const A = oracle::generations(8);
  for (std::size_t k = 1; k <= 8; ++k) {
    CHECK(as_set(generation_set(rule, k)) == A[k]);
  }
  CHECK(generation_set(rule, 8).size() == 10080);
  // A_{k+1} is A_k inflated once.
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(all_inflations(rule, "b", k) == generation_set(rule, k + 1));
  }
}

TEST_CASE("generation factors grow with k") {
  auto const rule = fibonacci_rule();
  // A_k is a factor of every word of A_{k+2}.
  for (std::size_t k = 1; k + 2 <= 8; ++k) {
    for (std::size_t m = 1; m <= 8; ++m) {
      auto const here = subwords(generation_set(rule, k), m);
      auto const next = subwords(generation_set(rule, k + 2), m);
      CHECK(here.is_subset_of(next));
    }
  }
}

TEST_CASE("generation_factors matches materialized generations") {
  auto const rule = fibonacci_rule();
  for (std::size_t k = 1; k <= 8; ++k) {
    for (std::size_t m = 1; m <= 14; ++m) {
      CHECK(generation_factors(rule, k, m)
            == subwords(generation_set(rule, k), m));
    }
  }
}

TEST_CASE("legal_subwords small lengths") {
  auto const rule = fibonacci_rule();
  CHECK(legal_subwords(rule, 1) == WordSet{"a", "b"});
  CHECK(legal_subwords(rule, 2) == WordSet{"aa", "ab", "ba", "bb"});
  CHECK(legal_subwords(rule, 3).size() == 7);
  CHECK(legal_subwords(rule, 3)
        == WordSet{"aaa", "aab", "aba", "abb", "baa", "bab", "bba"});
  CHECK(subwords(generation_set(rule, 5), 2)
        == WordSet{"aa", "ab", "ba", "bb"});
  CHECK_THROWS_AS(legal_subwords(rule, 0), DomainError);
}

TEST_CASE("legal_subwords agrees with brute-force generations") {
  auto const rule = fibonacci_rule();
  for (std::size_t m = 1; m <= 13; ++m) {
    CAPTURE(m);
    CHECK(as_set(legal_subwords(rule, m)) == oracle::fibonacci_language(m));
  }
}

TEST_CASE("recursion and closure routes agree") {
  auto const rule   = fibonacci_rule();
  auto const layers = legal_subwords_by_closure(rule, 11);
  REQUIRE(layers.size() == 11);
  for (std::size_t m = 1; m <= 11; ++m) {
    CAPTURE(m);
    CHECK(layers[m - 1] == legal_subwords_by_generations(rule, m));
  }
  CHECK_THROWS_AS(legal_subwords_by_generations(noble_means_rule(2), 3),
                  DomainError);
}

TEST_CASE("generation cap") {
  LanguageOptions tiny;
  tiny.generation_cap = 4;
  CHECK_THROWS_AS(legal_subwords(fibonacci_rule(), 8, tiny), NonConvergence);
  tiny.generation_cap = 1;
  CHECK_THROWS_AS(legal_subwords(noble_means_rule(2), 8, tiny),
                  NonConvergence);
}

TEST_CASE("is_legal") {
  auto const rule = fibonacci_rule();
  CHECK(is_legal(rule, "bb"));
  CHECK(generation_set(rule, 5).contains("aabba"));
  CHECK_FALSE(is_legal(rule, "bbb"));
  CHECK(is_legal(rule, "a"));
  CHECK_THROWS_AS(is_legal(rule, "abc"), InvalidWord);
  CHECK_THROWS_AS(is_legal(rule, ""), InvalidWord);

  auto const& oracle = fib_oracle();
  CHECK(oracle.is_legal("aabba"));
  CHECK_FALSE(oracle.is_legal("bbb"));
  // bbb never occurs, so no word containing it does.
  for (auto const& w : oracle.factors(8)) {
    CHECK(w.find("bbb") == Word::npos);
  }
}

TEST_CASE("Fibonacci generation identity") {
  auto const& oracle = fib_oracle();
  for (std::size_t n = 4; n <= 7; ++n) {
    auto const c = verify_fibonacci_identity(oracle, n);
    CAPTURE(n);
    CHECK(c.holds);
    CHECK(c.generation == n + 1);
    CHECK(c.generation_count == c.oracle_count);
  }
  auto const c4 = verify_fibonacci_identity(oracle, 4);
  CHECK(c4.length == 3);
  CHECK(c4.oracle_count == 7);

  // n = 3 is too small: F(A_4, 2) misses bb.
  auto const c3 = verify_fibonacci_identity(oracle, 3);
  CHECK_FALSE(c3.holds);
  CHECK(c3.generation_count == 3);
  CHECK(c3.oracle_count == 4);

  // A_4 in place of A_5 gives a strictly smaller set.
  auto const early = verify_fibonacci_identity(oracle, 4, {}, 4);
  CHECK_FALSE(early.holds);
  CHECK(early.generation_count == 3);
  CHECK(early.generation_count < early.oracle_count);

  // The index convention matters: with f_n = 5 at n = 4 the identity fails.
  auto const shifted = verify_fibonacci_identity(oracle, 4, {1, 2});
  CHECK_FALSE(shifted.holds);
  CHECK(shifted.generation_count == 8);
  CHECK(shifted.oracle_count == 22);

  // Past the materialization limit the summary route takes over.
  auto const c8 = verify_fibonacci_identity(oracle, 5, {}, 9);
  CHECK(c8.holds);

  LanguageOracle noble(noble_means_rule(2));
  CHECK_THROWS_AS(verify_fibonacci_identity(noble, 4), DomainError);
  CHECK_THROWS_AS(verify_fibonacci_identity(oracle, 0), DomainError);
}

TEST_CASE("the legal language is factorial and extendable") {
  auto const& oracle = fib_oracle();
  for (std::size_t m = 2; m <= 10; ++m) {
    CHECK(subwords(oracle.factors(m), m - 1) == oracle.factors(m - 1));
    for (auto const& v : oracle.factors(m)) {
      CHECK((oracle.is_legal(v + 'a') || oracle.is_legal(v + 'b')));
      bool two_sided = false;
      for (Letter x : {'a', 'b'}) {
        for (Letter y : {'a', 'b'}) {
          two_sided = two_sided || oracle.is_legal(x + v + y);
        }
      }
      CHECK(two_sided);
    }
  }
}

TEST_CASE("noble means language through the closure route") {
  LanguageOracle noble(noble_means_rule(2));
  auto const     A = all_inflations(noble.rule(), "b", 4);
  // F(zeta^4(b), m) is part of the language, and the language of length m
  // is nondecreasing in m.
  for (std::size_t m = 1; m <= 6; ++m) {
    CHECK(subwords(A, m).is_subset_of(noble.factors(m)));
    CHECK(noble.complexity(m + 1) >= noble.complexity(m));
  }
  CHECK(noble.factors(1) == WordSet{"a", "b"});
  CHECK(noble.is_legal("bb"));
  CHECK_FALSE(noble.is_legal("bbb"));
  CHECK(noble.is_legal("aaa"));
}

TEST_CASE("LanguageOracle is safe for concurrent readers") {
  LanguageOracle           oracle(fibonacci_rule());
  std::vector<std::size_t> counts(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    threads.emplace_back([&, t] { counts[t] = oracle.complexity(9 + t % 3); });
  }
  for (auto& th : threads) {
    th.join();
  }
  for (std::size_t t = 0; t < counts.size(); ++t) {
    CHECK(counts[t] == oracle::fibonacci_language(9 + t % 3).size());
  }
}
