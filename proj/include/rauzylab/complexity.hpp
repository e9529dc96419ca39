// Subword complexity, special factors and bispecial classification.

#ifndef RAUZYLAB_COMPLEXITY_HPP_
#define RAUZYLAB_COMPLEXITY_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "rauzylab/language.hpp"
#include "rauzylab/word_set.hpp"

namespace rauzylab {

  //! p(n) = |F_n|.
  std::size_t complexity(LanguageOracle const& oracle, std::size_t n);

  //! s(n) = p(n + 1) - p(n). Signed, although it is never negative for the
  //! random Fibonacci language.
  std::int64_t first_difference(LanguageOracle const& oracle, std::size_t n);

  //! The legal one-letter extensions of a legal word v.
  struct ExtensionTable {
    Word                                 word;
    std::vector<Letter>                  left;     // x with xv legal
    std::vector<Letter>                  right;    // y with vy legal
    std::vector<std::pair<Letter, Letter>> corners;  // (x, y) with xvy legal

    [[nodiscard]] bool is_right_special() const noexcept {
      return right.size() >= 2;
    }
    [[nodiscard]] bool is_left_special() const noexcept {
      return left.size() >= 2;
    }
    [[nodiscard]] bool is_bispecial() const noexcept {
      return is_left_special() && is_right_special();
    }

    //! |corners| - |left| - |right| + 1. On a binary alphabet a bispecial
    //! word is strong (|corners| = 4) iff this is 1, neutral (3) iff 0 and
    //! weak (2) iff -1.
    [[nodiscard]] std::int64_t multiplicity() const noexcept {
      return static_cast<std::int64_t>(corners.size())
             - static_cast<std::int64_t>(left.size())
             - static_cast<std::int64_t>(right.size()) + 1;
    }
  };

  //! Throws DomainError if v is not legal.
  ExtensionTable extension_table(LanguageOracle const& oracle,
                                 std::string_view      v);

  struct SpecialsReport {
    std::size_t  n;
    std::size_t  p;
    std::size_t  p_next;
    std::int64_t s;
    WordSet      right_specials;
    WordSet      left_specials;
    WordSet      bispecials;
    std::size_t  strong_count;
    std::size_t  weak_count;
    std::size_t  neutral_count;
    //! Sum over F_n of (number of right extensions - 1). Equals s on any
    //! alphabet; reported for rules with more than two letters.
    std::int64_t right_excess;
  };

  //! Classify every word of F_n. Throws InvariantViolation if the counts
  //! are inconsistent: s != right_excess, |right_specials| != s or
  //! |left_specials| != s on a binary alphabet, or a bispecial word that is
  //! none of strong, weak, neutral.
  SpecialsReport specials_report(LanguageOracle const& oracle, std::size_t n);

  struct BispecialIdentityCheck {
    std::size_t  n;
    std::int64_t lhs;  // s(n + 1) - s(n)
    std::int64_t rhs;  // sb(n) - wb(n)
    bool         holds;
  };

  //! s(n + 1) - s(n) = sb(n) - wb(n), with all counts enumerated directly.
  BispecialIdentityCheck verify_bispecial_identity(LanguageOracle const& oracle,
                                                   std::size_t           n);

  struct NoWeakBispecialsCheck {
    std::size_t n;
    std::size_t weak_bispecials;
    //! Right specials v with no letter x such that xva and xvb are legal.
    std::vector<Word> right_without_common_left;
    //! Left specials v with no letter y such that avy and bvy are legal.
    std::vector<Word> left_without_common_right;

    [[nodiscard]] bool holds() const noexcept {
      return weak_bispecials == 0 && right_without_common_left.empty()
             && left_without_common_right.empty();
    }
  };

  //! Checks that no bispecial of length n is weak, and that every right
  //! (left) special of length n has all its right (left) extensions sharing
  //! a common left (right) extension letter.
  NoWeakBispecialsCheck verify_no_weak_bispecials(LanguageOracle const& oracle,
                                                  std::size_t           n);

}  // namespace rauzylab

#endif  // RAUZYLAB_COMPLEXITY_HPP_
