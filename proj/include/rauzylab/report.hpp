// Orchestration behind the rauzylab command line tool: run configuration,
// tabular outputs, the verification suite and the report writer.

#ifndef RAUZYLAB_REPORT_HPP_
#define RAUZYLAB_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rauzylab/cohomology.hpp"
#include "rauzylab/language.hpp"
#include "rauzylab/substitution.hpp"

namespace rauzylab {

  enum class Format { csv, json, dot };

  //! Throws ConfigurationError for anything other than csv, json or dot.
  Format parse_format(std::string_view name);

  struct RunConfig {
    std::string                          rule = "fib";
    std::optional<std::filesystem::path> rule_file;
    std::size_t                          max_n  = 10;
    Format                               format = Format::csv;
    std::optional<std::uint64_t>         seed;
    std::filesystem::path                output_dir     = ".";
    std::size_t                          generation_cap = 64;

    //! Throws ConfigurationError if max_n == 0 or
    //! generation_cap < max_n + 2.
    void validate() const;

    //! The rule file if one is set, otherwise the built-in rule by name.
    [[nodiscard]] RandomSubstitution load_rule() const;

    [[nodiscard]] LanguageOptions language_options() const {
      return LanguageOptions{generation_cap, LanguageOptions{}.memo_cap};
    }
  };

  //! m,p[,words] for m = 1, ..., max_len.
  std::string language_table(LanguageOracle const& oracle,
                             std::size_t           max_len,
                             Format                format,
                             bool                  with_words);

  //! n,p,s,sb,wb,rs,ls for n = 1, ..., max_n.
  std::string complexity_table(LanguageOracle const& oracle,
                               std::size_t           max_n,
                               Format                format);

  //! n,vertices,edges,h1_rank,s_plus_1,injective,h0_quotient,h1_quotient
  //! for n = 1, ..., max_n.
  std::string cohomology_table(LanguageOracle const& oracle,
                               std::size_t           max_n,
                               Format                format);

  //! The same table from precomputed stage reports.
  std::string cohomology_table(std::span<CohomologyReport const> stages,
                               Format                            format);

  enum class CheckStatus { pass, fail, skip };

  struct CheckResult {
    std::size_t n;  // 0 for checks not tied to a stage
    std::string name;
    CheckStatus status;
    std::string detail;
  };

  struct VerifyResult {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool all_passed() const;
    //! The first failed check, if any.
    [[nodiscard]] CheckResult const* first_failure() const;
  };

  //! Run every structural check for n = 1, ..., config.max_n. Checks that
  //! only make sense for the random Fibonacci rule are recorded as skipped
  //! for other rules.
  VerifyResult run_verify(RunConfig const& config);

  //! Fixed-width pass/fail table.
  void print_verify_table(VerifyResult const& result, std::ostream& out);

  //! Write complexity and cohomology tables (complexity.csv and
  //! cohomology.csv, or one report.json) and rauzy_<n>.dot for
  //! n = 1, ..., max_n into config.output_dir. Returns the paths written,
  //! in order. Throws IoError if a file cannot be written.
  std::vector<std::filesystem::path> write_report(RunConfig const& config);

  //! A sampled realization of the k-fold inflation of b, after checking that
  //! all its factors of length <= check_len are legal. Throws
  //! ConfigurationError if config.seed is unset or k == 0, and
  //! InvariantViolation if an illegal factor turns up.
  Word run_sample(RunConfig const& config, std::size_t k, std::size_t check_len);

}  // namespace rauzylab

#endif  // RAUZYLAB_REPORT_HPP_
