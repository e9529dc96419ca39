#include "rauzylab/complexity.hpp"

#include <string>

#include "rauzylab/errors.hpp"

namespace rauzylab {

  std::size_t complexity(LanguageOracle const& oracle, std::size_t n) {
    return oracle.complexity(n);
  }

  std::int64_t first_difference(LanguageOracle const& oracle, std::size_t n) {
    return static_cast<std::int64_t>(oracle.complexity(n + 1))
           - static_cast<std::int64_t>(oracle.complexity(n));
  }

  ExtensionTable extension_table(LanguageOracle const& oracle,
                                 std::string_view      v) {
    if (!oracle.is_legal(v)) {
      throw DomainError("\"" + std::string(v) + "\" is not a legal word");
    }
    ExtensionTable table;
    table.word    = Word(v);
    auto const& A = oracle.rule().alphabet();
    for (Letter x : A) {
      if (oracle.is_legal(x + table.word)) {
        table.left.push_back(x);
      }
      if (oracle.is_legal(table.word + x)) {
        table.right.push_back(x);
      }
    }
    for (Letter x : table.left) {
      for (Letter y : table.right) {
        if (oracle.is_legal(x + table.word + y)) {
          table.corners.emplace_back(x, y);
        }
      }
    }
    return table;
  }

  SpecialsReport specials_report(LanguageOracle const& oracle, std::size_t n) {
    SpecialsReport report{};
    report.n      = n;
    report.p      = oracle.complexity(n);
    report.p_next = oracle.complexity(n + 1);
    report.s      = first_difference(oracle, n);

    std::vector<Word> right, left, bi;
    for (auto const& v : oracle.factors(n)) {
      auto table = extension_table(oracle, v);
      report.right_excess += static_cast<std::int64_t>(table.right.size()) - 1;
      if (table.is_right_special()) {
        right.push_back(v);
      }
      if (table.is_left_special()) {
        left.push_back(v);
      }
      if (table.is_bispecial()) {
        bi.push_back(v);
        auto const mult = table.multiplicity();
        if (mult > 0) {
          ++report.strong_count;
        } else if (mult < 0) {
          ++report.weak_count;
        } else {
          ++report.neutral_count;
        }
      }
    }
    report.right_specials = WordSet(std::move(right));
    report.left_specials  = WordSet(std::move(left));
    report.bispecials     = WordSet(std::move(bi));

    auto fail = [n](std::string const& what) {
      throw InvariantViolation("specials at length " + std::to_string(n) + ": "
                               + what);
    };
    if (report.right_excess != report.s) {
      fail("s(n) differs from the sum of right extension excesses");
    }
    if (oracle.rule().alphabet().size() == 2) {
      auto const s = static_cast<std::size_t>(report.s);
      if (report.right_specials.size() != s) {
        fail("number of right specials differs from s(n)");
      }
      if (report.left_specials.size() != s) {
        fail("number of left specials differs from s(n)");
      }
    }
    if (report.strong_count + report.weak_count + report.neutral_count
        != report.bispecials.size()) {
      fail("bispecial classes do not add up");
    }
    return report;
  }

  BispecialIdentityCheck verify_bispecial_identity(LanguageOracle const& oracle,
                                                   std::size_t           n) {
    auto const report = specials_report(oracle, n);
    BispecialIdentityCheck check{};
    check.n   = n;
    check.lhs = first_difference(oracle, n + 1) - report.s;
    check.rhs = static_cast<std::int64_t>(report.strong_count)
                - static_cast<std::int64_t>(report.weak_count);
    check.holds = check.lhs == check.rhs;
    return check;
  }

  NoWeakBispecialsCheck verify_no_weak_bispecials(LanguageOracle const& oracle,
                                                  std::size_t           n) {
    NoWeakBispecialsCheck check{};
    check.n       = n;
    auto const& A = oracle.rule().alphabet();
    for (auto const& v : oracle.factors(n)) {
      auto table = extension_table(oracle, v);
      if (table.is_bispecial() && table.multiplicity() < 0) {
        ++check.weak_bispecials;
      }
      if (table.is_right_special()) {
        bool found = false;
        for (Letter x : A) {
          bool all = true;
          for (Letter y : table.right) {
            all = all && oracle.is_legal(x + v + y);
          }
          found = found || all;
        }
        if (!found) {
          check.right_without_common_left.push_back(v);
        }
      }
      if (table.is_left_special()) {
        bool found = false;
        for (Letter y : A) {
          bool all = true;
          for (Letter x : table.left) {
            all = all && oracle.is_legal(x + v + y);
          }
          found = found || all;
        }
        if (!found) {
          check.left_without_common_right.push_back(v);
        }
      }
    }
    return check;
  }

}  // namespace rauzylab
