#include "rauzylab/language.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>
#include <vector>

#include "rauzylab/errors.hpp"

namespace rauzylab {

  namespace {

    using HashedWords = std::unordered_set<Word>;

    void require_fibonacci(RandomSubstitution const& rule,
                           std::string_view          what) {
      if (!rule.is_random_fibonacci()) {
        throw DomainError(std::string(what)
                          + " is defined for the random Fibonacci rule only");
      }
    }

    Letter seed_letter(RandomSubstitution const& rule) {
      return rule.in_alphabet('b') ? 'b' : rule.alphabet().front();
    }

    // What F(A_k, m) and its concatenations depend on: the length-m factors
    // of A_k together with the prefixes and suffixes of length
    // min(|A_k|, m - 1). All words of A_k have the same length.
    struct GenerationSummary {
      std::size_t length = 0;  // capped at m - 1
      HashedWords prefixes;
      HashedWords suffixes;
      HashedWords factors;

      friend bool operator==(GenerationSummary const&,
                             GenerationSummary const&)
          = default;
    };

    GenerationSummary summarize(Word const& w, std::size_t m) {
      GenerationSummary s;
      s.length = std::min(w.size(), m - 1);
      s.prefixes.insert(w.substr(0, s.length));
      s.suffixes.insert(w.substr(w.size() - s.length));
      for (std::size_t i = 0; i + m <= w.size(); ++i) {
        s.factors.insert(w.substr(i, m));
      }
      return s;
    }

    // Summary of the product XY, merged into out.
    void concatenate_into(GenerationSummary const& x,
                          GenerationSummary const& y,
                          std::size_t              m,
                          GenerationSummary&       out) {
      std::size_t const cap = m - 1;
      out.length            = std::min(x.length + y.length, cap);
      out.factors.insert(x.factors.begin(), x.factors.end());
      out.factors.insert(y.factors.begin(), y.factors.end());

      // Factors straddling the junction: t letters from the end of the left
      // word, m - t from the start of the right one.
      for (std::size_t t = 1; t < m; ++t) {
        if (x.length < t || y.length < m - t) {
          continue;
        }
        HashedWords tails, heads;
        for (auto const& s : x.suffixes) {
          tails.insert(s.substr(s.size() - t));
        }
        for (auto const& p : y.prefixes) {
          heads.insert(p.substr(0, m - t));
        }
        for (auto const& tail : tails) {
          for (auto const& head : heads) {
            out.factors.insert(tail + head);
          }
        }
      }

      if (x.length >= cap) {
        out.prefixes.insert(x.prefixes.begin(), x.prefixes.end());
      } else {
        for (auto const& p : x.prefixes) {
          for (auto const& q : y.prefixes) {
            out.prefixes.insert((p + q).substr(0, out.length));
          }
        }
      }
      if (y.length >= cap) {
        out.suffixes.insert(y.suffixes.begin(), y.suffixes.end());
      } else {
        for (auto const& p : x.suffixes) {
          for (auto const& q : y.suffixes) {
            auto w = p + q;
            out.suffixes.insert(w.substr(w.size() - out.length));
          }
        }
      }
    }

    struct GenerationMemo {
      std::mutex                     mutex;
      std::map<std::size_t, WordSet> sets;
    };

    GenerationMemo& generation_memo() {
      static GenerationMemo memo;
      return memo;
    }

    WordSet concatenate_both_ways(WordSet const& x, WordSet const& y) {
      std::vector<Word> out;
      out.reserve(2 * x.size() * y.size());
      for (auto const& u : x) {
        for (auto const& v : y) {
          out.push_back(u + v);
          out.push_back(v + u);
        }
      }
      return WordSet(std::move(out));
    }

  }  // namespace

  std::uint64_t FibonacciConvention::operator()(std::size_t n) const {
    if (n == 0) {
      throw DomainError("Fibonacci numbers are indexed from 1");
    }
    std::uint64_t prev = f1, cur = f2;
    if (n == 1) {
      return f1;
    }
    for (std::size_t i = 2; i < n; ++i) {
      std::uint64_t next = prev + cur;
      prev               = cur;
      cur                = next;
    }
    return cur;
  }

  WordSet generation_set(RandomSubstitution const& rule,
                         std::size_t               n,
                         LanguageOptions const&    options) {
    require_fibonacci(rule, "generation_set");
    if (n == 0) {
      return WordSet();
    }
    if (n == 1) {
      return WordSet{"b"};
    }
    if (n == 2) {
      return WordSet{"a"};
    }
    auto& memo = generation_memo();
    {
      std::lock_guard lock(memo.mutex);
      auto            it = memo.sets.find(n);
      if (it != memo.sets.end()) {
        return it->second;
      }
    }
    WordSet result = concatenate_both_ways(generation_set(rule, n - 1, options),
                                           generation_set(rule, n - 2, options));
    if (n <= options.memo_cap) {
      std::lock_guard lock(memo.mutex);
      memo.sets.emplace(n, result);
    }
    return result;
  }

  WordSet generation_factors(RandomSubstitution const& rule,
                             std::size_t               k,
                             std::size_t               m) {
    require_fibonacci(rule, "generation_factors");
    if (m == 0) {
      throw DomainError("factor length must be at least 1");
    }
    if (k == 0) {
      return WordSet();
    }
    GenerationSummary older = summarize("b", m);
    GenerationSummary newer = summarize("a", m);
    if (k == 1) {
      return WordSet(older.factors.begin(), older.factors.end());
    }
    for (std::size_t j = 3; j <= k; ++j) {
      GenerationSummary next;
      concatenate_into(newer, older, m, next);
      concatenate_into(older, newer, m, next);
      older = std::move(newer);
      newer = std::move(next);
    }
    return WordSet(newer.factors.begin(), newer.factors.end());
  }

  WordSet legal_subwords_by_generations(RandomSubstitution const& rule,
                                        std::size_t               m,
                                        LanguageOptions const&    options) {
    require_fibonacci(rule, "the generation recursion");
    if (m == 0) {
      throw DomainError("factor length must be at least 1");
    }
    // history holds the summaries of A_{k-2}, A_{k-1}, A_k.
    std::deque<GenerationSummary> history;
    history.push_back(summarize("b", m));
    history.push_back(summarize("a", m));
    HashedWords all(history[0].factors.begin(), history[0].factors.end());
    all.insert(history[1].factors.begin(), history[1].factors.end());

    for (std::size_t k = 3;; ++k) {
      if (k > options.generation_cap) {
        throw NonConvergence("factors of length " + std::to_string(m)
                             + " did not stabilize within "
                             + std::to_string(options.generation_cap)
                             + " generations");
      }
      auto const&       older = history[history.size() - 2];
      auto const&       newer = history.back();
      GenerationSummary next;
      concatenate_into(newer, older, m, next);
      concatenate_into(older, newer, m, next);
      all.insert(next.factors.begin(), next.factors.end());
      history.push_back(std::move(next));
      if (history.size() > 3) {
        history.pop_front();
      }
      // Three equal summaries in a row pin every later generation.
      if (history.size() == 3 && history[0] == history[1]
          && history[1] == history[2]) {
        break;
      }
    }
    return WordSet(all.begin(), all.end());
  }

  std::vector<WordSet>
  legal_subwords_by_closure(RandomSubstitution const& rule,
                            std::size_t               m,
                            LanguageOptions const&    options) {
    if (m == 0) {
      throw DomainError("factor length must be at least 1");
    }
    // Every factor of length <= m of an inflated word lies in the inflation
    // of one of its factors of length <= m, so the legal words of length
    // <= m form the least set containing b that is closed under that step.
    HashedWords       seen;
    std::vector<Word> layer = {Word(1, seed_letter(rule))};
    seen.insert(layer.front());
    for (std::size_t round = 0; !layer.empty(); ++round) {
      if (round > options.generation_cap) {
        throw NonConvergence("factor closure did not stabilize within "
                             + std::to_string(options.generation_cap)
                             + " rounds");
      }
      std::vector<Word> next;
      for (auto const& u : layer) {
        for (auto const& w : all_inflations(rule, u)) {
          for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t len = 1; len <= m && i + len <= w.size(); ++len) {
              auto [it, inserted] = seen.insert(w.substr(i, len));
              if (inserted) {
                next.push_back(*it);
              }
            }
          }
        }
      }
      layer = std::move(next);
    }
    std::vector<std::vector<Word>> by_length(m);
    for (auto const& w : seen) {
      by_length[w.size() - 1].push_back(w);
    }
    std::vector<WordSet> result;
    result.reserve(m);
    for (auto& words : by_length) {
      result.emplace_back(std::move(words));
    }
    return result;
  }

  WordSet legal_subwords(RandomSubstitution const& rule,
                         std::size_t               m,
                         LanguageOptions const&    options) {
    if (rule.is_random_fibonacci()) {
      return legal_subwords_by_generations(rule, m, options);
    }
    return legal_subwords_by_closure(rule, m, options).back();
  }

  ////////////////////////////////////////////////////////////////////////
  // LanguageOracle
  ////////////////////////////////////////////////////////////////////////

  LanguageOracle::LanguageOracle(RandomSubstitution rule,
                                 LanguageOptions    options)
      : _rule(std::move(rule)), _options(options) {}

  WordSet const& LanguageOracle::factors(std::size_t m) const {
    if (m == 0) {
      throw DomainError("factor length must be at least 1");
    }
    {
      std::shared_lock lock(_mutex);
      auto             it = _factors.find(m);
      if (it != _factors.end()) {
        return *it->second;
      }
    }
    if (_rule.is_random_fibonacci()) {
      auto             computed = std::make_unique<WordSet>(
          legal_subwords_by_generations(_rule, m, _options));
      std::unique_lock lock(_mutex);
      return *_factors.try_emplace(m, std::move(computed)).first->second;
    }
    auto             layers = legal_subwords_by_closure(_rule, m, _options);
    std::unique_lock lock(_mutex);
    for (std::size_t len = 1; len <= m; ++len) {
      _factors.try_emplace(len,
                           std::make_unique<WordSet>(std::move(layers[len - 1])));
    }
    return *_factors.at(m);
  }

  bool LanguageOracle::is_legal(std::string_view w) const {
    _rule.validate(w);
    return factors(w.size()).contains(w);
  }

  bool is_legal(RandomSubstitution const& rule, std::string_view w) {
    rule.validate(w);
    return legal_subwords(rule, w.size()).contains(w);
  }

  IdentityCheck verify_fibonacci_identity(LanguageOracle const&      oracle,
                                          std::size_t                n,
                                          FibonacciConvention const& convention,
                                          std::size_t generation) {
    require_fibonacci(oracle.rule(), "the Fibonacci identity");
    if (n == 0) {
      throw DomainError("the Fibonacci identity is indexed from n = 1");
    }
    IdentityCheck check{};
    check.n          = n;
    check.length     = convention(n);
    check.generation = generation == 0 ? n + 1 : generation;
    constexpr std::size_t materialize_limit = 8;
    auto                  from_generation
        = check.generation <= materialize_limit
              ? subwords(generation_set(oracle.rule(),
                                        check.generation,
                                        oracle.options()),
                         check.length)
              : generation_factors(oracle.rule(),
                                   check.generation,
                                   check.length);
    auto const& from_oracle = oracle.factors(check.length);
    check.generation_count  = from_generation.size();
    check.oracle_count      = from_oracle.size();
    check.holds             = from_generation == from_oracle;
    return check;
  }

}  // namespace rauzylab
