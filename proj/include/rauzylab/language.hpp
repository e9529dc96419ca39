// Generation sets and the legal factor language of a random substitution.

#ifndef RAUZYLAB_LANGUAGE_HPP_
#define RAUZYLAB_LANGUAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string_view>

#include "rauzylab/substitution.hpp"
#include "rauzylab/word_set.hpp"

namespace rauzylab {

  struct LanguageOptions {
    //! Generations tried before a factor set must have stabilized.
    std::size_t generation_cap = 64;
    //! generation_set memoizes A_n for n up to this value.
    std::size_t memo_cap = 22;
  };

  //! Fibonacci numbers with configurable seeds f_1 and f_2 and
  //! f_n = f_{n-1} + f_{n-2}. The default is f_1 = f_2 = 1.
  struct FibonacciConvention {
    std::uint64_t f1 = 1;
    std::uint64_t f2 = 1;

    [[nodiscard]] std::uint64_t operator()(std::size_t n) const;
  };

  //! The generation set A_n of the random Fibonacci rule: A_0 is empty,
  //! A_1 = {b}, A_2 = {a} and A_n = A_{n-1}A_{n-2} u A_{n-2}A_{n-1}.
  //!
  //! |A_n| grows very quickly (A_9 already has 3 317 760 words), so this is
  //! meant for small n only. Results for n <= options.memo_cap are cached in
  //! a process-wide table. Throws DomainError if rule is not the random
  //! Fibonacci rule.
  WordSet generation_set(RandomSubstitution const& rule,
                         std::size_t               n,
                         LanguageOptions const&    options = {});

  //! F(Sigma, m): the length-m words occurring in some realization of some
  //! k-fold inflation of b.
  //!
  //! For the random Fibonacci rule the value is the stabilized F(A_k, m),
  //! computed from the prefixes, suffixes and length-m factors of A_k
  //! without materializing A_k. For any other rule it is the least set of
  //! words of length <= m that contains the factors of b and is closed under
  //! taking factors of inflations. Throws NonConvergence if
  //! options.generation_cap is reached first.
  WordSet legal_subwords(RandomSubstitution const& rule,
                         std::size_t               m,
                         LanguageOptions const&    options = {});

  //! The closure route of legal_subwords, for any rule. Returns all legal
  //! words of length 1..m, by length.
  std::vector<WordSet> legal_subwords_by_closure(RandomSubstitution const& rule,
                                                 std::size_t               m,
                                                 LanguageOptions const& options
                                                 = {});

  //! F(A_k, m) for the random Fibonacci rule, from prefix, suffix and factor
  //! summaries of the generations, without materializing A_k.
  WordSet generation_factors(RandomSubstitution const& rule,
                             std::size_t               k,
                             std::size_t               m);

  //! The recursion route of legal_subwords; Fibonacci rule only.
  WordSet legal_subwords_by_generations(RandomSubstitution const& rule,
                                        std::size_t               m,
                                        LanguageOptions const&    options = {});

  //! Memoized access to the legal factors of one rule.
  //!
  //! Safe for concurrent use: lookups take a shared lock, and a missing
  //! entry is computed outside the lock and published once.
  class LanguageOracle {
   public:
    explicit LanguageOracle(RandomSubstitution rule,
                            LanguageOptions    options = {});

    LanguageOracle(LanguageOracle const&)            = delete;
    LanguageOracle& operator=(LanguageOracle const&) = delete;

    [[nodiscard]] RandomSubstitution const& rule() const noexcept {
      return _rule;
    }
    [[nodiscard]] LanguageOptions const& options() const noexcept {
      return _options;
    }

    //! F_m. The reference stays valid for the lifetime of the oracle.
    [[nodiscard]] WordSet const& factors(std::size_t m) const;

    //! p(m) = |F_m|.
    [[nodiscard]] std::size_t complexity(std::size_t m) const {
      return factors(m).size();
    }

    //! Throws InvalidWord if w is empty or uses letters outside the alphabet.
    [[nodiscard]] bool is_legal(std::string_view w) const;

   private:
    RandomSubstitution                                   _rule;
    LanguageOptions                                      _options;
    mutable std::shared_mutex                            _mutex;
    mutable std::map<std::size_t, std::unique_ptr<WordSet>> _factors;
  };

  //! true iff w is in legal_subwords(rule, |w|).
  bool is_legal(RandomSubstitution const& rule, std::string_view w);

  struct IdentityCheck {
    std::size_t   n;
    std::uint64_t length;      // f_n
    std::size_t   generation;  // k in F(A_k, f_n)
    std::size_t   generation_count;
    std::size_t   oracle_count;
    bool          holds;
  };

  //! Compare F(A_k, f_n) with F(Sigma, f_n) as sets, where k = n + 1 unless
  //! generation is given. A_k is materialized for k <= 8 and summarized
  //! (see generation_factors) beyond that. Throws DomainError if n < 1 or the rule is not
  //! the random Fibonacci rule.
  IdentityCheck verify_fibonacci_identity(LanguageOracle const&      oracle,
                                          std::size_t                n,
                                          FibonacciConvention const& convention
                                          = {},
                                          std::size_t generation = 0);

}  // namespace rauzylab

#endif  // RAUZYLAB_LANGUAGE_HPP_
