// Random substitution rules, exhaustive inflation and seeded sampling.

#ifndef RAUZYLAB_SUBSTITUTION_HPP_
#define RAUZYLAB_SUBSTITUTION_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "rauzylab/word_set.hpp"

namespace rauzylab {

  using Rational = mpq_class;

  //! A random substitution: every letter maps to a nonempty list of
  //! realization words, optionally weighted by an exact probability vector.
  //!
  //! Values are immutable after construction. The realization list keeps the
  //! order it was given in; that order fixes the meaning of the probability
  //! vector and of sampling draws.
  class RandomSubstitution {
   public:
    using Realizations = std::map<Letter, std::vector<Word>>;
    using Probabilities = std::map<Letter, std::vector<Rational>>;

    //! Throws InvalidRule if an image is empty, uses a letter outside the
    //! alphabet, or a probability vector is malformed.
    RandomSubstitution(std::vector<Letter>         alphabet,
                       Realizations                realizations,
                       std::optional<Probabilities> probabilities
                       = std::nullopt);

    [[nodiscard]] std::vector<Letter> const& alphabet() const noexcept {
      return _alphabet;
    }

    [[nodiscard]] bool in_alphabet(Letter x) const noexcept;

    //! The realization list of x. Throws InvalidWord if x is not a letter.
    [[nodiscard]] std::vector<Word> const& realizations(Letter x) const;

    [[nodiscard]] bool has_probabilities() const noexcept {
      return _probabilities.has_value();
    }

    //! Throws ConfigurationError if the rule carries no probabilities.
    [[nodiscard]] std::vector<Rational> const& probabilities(Letter x) const;

    //! Throws InvalidWord if w is empty or has a letter outside the alphabet.
    void validate(std::string_view w) const;

    //! Shortest image length over all realizations.
    [[nodiscard]] std::size_t min_image_length() const noexcept;

    //! true iff the support sets are those of the random Fibonacci rule
    //! a -> {ba, ab}, b -> {a}; probabilities are ignored.
    [[nodiscard]] bool is_random_fibonacci() const;

    //! Same supports as other (probabilities ignored).
    [[nodiscard]] bool same_support(RandomSubstitution const& other) const;

   private:
    std::vector<Letter>          _alphabet;
    Realizations                 _realizations;
    std::optional<Probabilities> _probabilities;
  };

  //! a -> ba with probability p, ab with probability 1 - p; b -> a.
  RandomSubstitution fibonacci_rule(Rational p = Rational(1, 2));

  //! The random noble means rule: a -> b inserted at each of the m + 1
  //! positions of a^m (ba^m first, a^m b last), b -> a. Throws InvalidRule
  //! if m == 0 or the probability vector does not have m + 1 entries.
  RandomSubstitution
  noble_means_rule(std::size_t                          m,
                   std::optional<std::vector<Rational>> probabilities
                   = std::nullopt);

  //! The deterministic Fibonacci rule a -> ab, b -> a.
  RandomSubstitution deterministic_fibonacci_rule();

  //! The Thue-Morse rule a -> ab, b -> ba.
  RandomSubstitution thue_morse_rule();

  //! Every realization of the image of w, one choice per letter occurrence.
  WordSet all_inflations(RandomSubstitution const& rule, std::string_view w);

  //! All realizations of k-fold inflation of w.
  WordSet all_inflations(RandomSubstitution const& rule,
                         std::string_view          w,
                         std::size_t               k);

  //! The words after 0, 1, ..., k rounds of local random inflation of w.
  //!
  //! The generator is std::mt19937_64 seeded with seed; one 64-bit draw is
  //! consumed per occurrence of a letter with two or more realizations, in
  //! left-to-right order, and turned into a double in [0, 1) from its top 53
  //! bits. The probability vector is converted to a cumulative double table
  //! once per call. Throws ConfigurationError if the rule has no
  //! probabilities.
  std::vector<Word> sample_inflation_rounds(RandomSubstitution const& rule,
                                            std::string_view          w,
                                            std::size_t               k,
                                            std::uint64_t             seed);

  //! The last entry of sample_inflation_rounds.
  Word sample_inflation(RandomSubstitution const& rule,
                        std::string_view          w,
                        std::size_t               k,
                        std::uint64_t             seed);

  //! Parse a rule from its JSON text form:
  //! {"alphabet": ["a","b"],
  //!  "rules": {"a": [["b","a"],["a","b"]], "b": [["a"]]},
  //!  "probabilities": {"a": ["1/2","1/2"], "b": ["1"]}}
  //! The "probabilities" member is optional. Throws InvalidRule.
  RandomSubstitution parse_rule(std::string_view json_text);

  //! Read and parse a rule file. Throws IoError or InvalidRule.
  RandomSubstitution load_rule_file(std::filesystem::path const& path);

  //! Built-in rules by name: "fib", "noble:m" (uniform probabilities),
  //! "fib-det", "thue-morse". Throws InvalidRule for unknown names.
  RandomSubstitution rule_from_name(std::string_view name);

  //! JSON text form accepted by parse_rule.
  std::string to_json(RandomSubstitution const& rule);

}  // namespace rauzylab

#endif  // RAUZYLAB_SUBSTITUTION_HPP_
