#include "rauzylab/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "rauzylab/cohomology.hpp"
#include "rauzylab/complexity.hpp"
#include "rauzylab/errors.hpp"
#include "rauzylab/rauzy.hpp"

namespace rauzylab {

  namespace {

    using nlohmann::ordered_json;

    // Longest factor length for which the Fibonacci identity is checked by
    // verify; F_{f_n} grows exponentially in f_n.
    constexpr std::uint64_t identity_length_limit = 16;

    constexpr std::uint64_t default_verify_seed = 1;

    std::string bool_str(bool b) {
      return b ? "true" : "false";
    }

    ordered_json complexity_row(SpecialsReport const& r) {
      return ordered_json{{"n", r.n},
                          {"p", r.p},
                          {"s", r.s},
                          {"sb", r.strong_count},
                          {"wb", r.weak_count},
                          {"rs", r.right_specials.size()},
                          {"ls", r.left_specials.size()}};
    }

    ordered_json cohomology_row(CohomologyReport const& r) {
      return ordered_json{{"n", r.n},
                          {"vertices", r.vertices},
                          {"edges", r.edges},
                          {"h1_rank", r.h1_rank},
                          {"s_plus_1", r.s_plus_1},
                          {"injective", r.induced_injective},
                          {"h0_quotient", r.h0_quotient_dim},
                          {"h1_quotient", r.h1_quotient_dim}};
    }

    std::string csv_line(ordered_json const& row) {
      std::string line;
      bool        first = true;
      for (auto const& [key, value] : row.items()) {
        if (!first) {
          line += ',';
        }
        first = false;
        line += value.is_string() ? value.get<std::string>() : value.dump();
      }
      return line + '\n';
    }

    std::string csv_header(ordered_json const& row) {
      std::string line;
      bool        first = true;
      for (auto const& [key, value] : row.items()) {
        if (!first) {
          line += ',';
        }
        first = false;
        line += key;
      }
      return line + '\n';
    }

    std::string render(ordered_json const& rows, Format format) {
      if (format == Format::json) {
        return rows.dump(2) + '\n';
      }
      if (format != Format::csv) {
        throw ConfigurationError("tables can only be written as csv or json");
      }
      std::string out;
      if (!rows.empty()) {
        out += csv_header(rows.front());
      }
      for (auto const& row : rows) {
        out += csv_line(row);
      }
      return out;
    }

    void write_file(std::filesystem::path const& path,
                    std::string const&           text) {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw IoError("cannot write " + path.string());
      }
      out << text;
      if (!out) {
        throw IoError("error while writing " + path.string());
      }
    }

    // Collects check outcomes in canonical order.
    class Checklist {
     public:
      void record(std::size_t n, std::string name, bool ok, std::string detail) {
        _result.checks.push_back({n,
                                  std::move(name),
                                  ok ? CheckStatus::pass : CheckStatus::fail,
                                  std::move(detail)});
      }

      void skip(std::size_t n, std::string name, std::string why) {
        _result.checks.push_back(
            {n, std::move(name), CheckStatus::skip, std::move(why)});
      }

      // Runs f, turning a library exception into a failed check.
      template <typename F>
      void guard(std::size_t n, std::string const& name, F&& f) {
        try {
          f();
        } catch (Error const& e) {
          record(n, name, false, e.what());
        }
      }

      VerifyResult take() {
        return std::move(_result);
      }

     private:
      VerifyResult _result;
    };

  }  // namespace

  Format parse_format(std::string_view name) {
    if (name == "csv") {
      return Format::csv;
    }
    if (name == "json") {
      return Format::json;
    }
    if (name == "dot") {
      return Format::dot;
    }
    throw ConfigurationError("unknown format \"" + std::string(name) + "\"");
  }

  void RunConfig::validate() const {
    if (max_n == 0) {
      throw ConfigurationError("max_n must be at least 1");
    }
    if (generation_cap < max_n + 2) {
      throw ConfigurationError("generation cap must be at least max_n + 2");
    }
  }

  RandomSubstitution RunConfig::load_rule() const {
    return rule_file ? load_rule_file(*rule_file) : rule_from_name(rule);
  }

  std::string language_table(LanguageOracle const& oracle,
                             std::size_t           max_len,
                             Format                format,
                             bool                  with_words) {
    ordered_json rows = ordered_json::array();
    for (std::size_t m = 1; m <= max_len; ++m) {
      auto const&  words = oracle.factors(m);
      ordered_json row{{"m", m}, {"p", words.size()}};
      if (with_words) {
        if (format == Format::json) {
          row["words"] = words.words();
        } else {
          row["words"] = join(words);
        }
      }
      rows.push_back(std::move(row));
    }
    return render(rows, format);
  }

  std::string complexity_table(LanguageOracle const& oracle,
                               std::size_t           max_n,
                               Format                format) {
    ordered_json rows = ordered_json::array();
    for (std::size_t n = 1; n <= max_n; ++n) {
      rows.push_back(complexity_row(specials_report(oracle, n)));
    }
    return render(rows, format);
  }

  std::string cohomology_table(LanguageOracle const& oracle,
                               std::size_t           max_n,
                               Format                format) {
    ordered_json rows = ordered_json::array();
    for (std::size_t n = 1; n <= max_n; ++n) {
      rows.push_back(cohomology_row(stage_report(oracle, n)));
    }
    return render(rows, format);
  }

  std::string cohomology_table(std::span<CohomologyReport const> stages,
                               Format                            format) {
    ordered_json rows = ordered_json::array();
    for (auto const& stage : stages) {
      rows.push_back(cohomology_row(stage));
    }
    return render(rows, format);
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  bool VerifyResult::all_passed() const {
    return first_failure() == nullptr;
  }

  CheckResult const* VerifyResult::first_failure() const {
    auto it = std::find_if(checks.begin(), checks.end(), [](auto const& c) {
      return c.status == CheckStatus::fail;
    });
    return it == checks.end() ? nullptr : &*it;
  }

  VerifyResult run_verify(RunConfig const& config) {
    config.validate();
    LanguageOracle oracle(config.load_rule(), config.language_options());
    bool const     fibonacci = oracle.rule().is_random_fibonacci();
    bool const     binary    = oracle.rule().alphabet().size() == 2;
    Checklist      list;

    for (std::size_t n = 1; n <= config.max_n; ++n) {
      // Language
      if (n >= 4) {
        std::string const name = "fibonacci_identity";
        FibonacciConvention const f;
        if (!fibonacci) {
          list.skip(n, name, "random Fibonacci rule only");
        } else if (f(n) > identity_length_limit) {
          list.skip(n, name, "f_n = " + std::to_string(f(n)) + " too long");
        } else {
          list.guard(n, name, [&] {
            auto c = verify_fibonacci_identity(oracle, n, f);
            list.record(n,
                        name,
                        c.holds,
                        "|F(A_" + std::to_string(c.generation) + ","
                            + std::to_string(c.length)
                            + ")|=" + std::to_string(c.generation_count)
                            + " |F_" + std::to_string(c.length)
                            + "|=" + std::to_string(c.oracle_count));
          });
        }
      }

      // Rauzy graph
      list.guard(n, "rauzy_counts", [&] {
        auto const g = build_rauzy(oracle, n);
        auto const p = oracle.complexity(n);
        auto const s = first_difference(oracle, n);
        list.record(n,
                    "rauzy_counts",
                    g.vertex_count() == p
                        && static_cast<std::int64_t>(g.edge_count())
                               == static_cast<std::int64_t>(p) + s,
                    "|V|=" + std::to_string(g.vertex_count())
                        + " |E|=" + std::to_string(g.edge_count()));
        list.record(
            n, "strongly_connected", strongly_connected(g), "");

        auto const report = specials_report(oracle, n);
        std::size_t out2 = 0, in2 = 0;
        bool        degrees_match = true;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
          bool rs = g.out_degree(v) >= 2, ls = g.in_degree(v) >= 2;
          out2 += rs;
          in2 += ls;
          degrees_match
              = degrees_match
                && rs == report.right_specials.contains(g.vertices()[v])
                && ls == report.left_specials.contains(g.vertices()[v]);
        }
        list.record(n,
                    "specials",
                    degrees_match,
                    "p=" + std::to_string(report.p)
                        + " s=" + std::to_string(report.s)
                        + " rs=" + std::to_string(out2)
                        + " ls=" + std::to_string(in2));
      });

      list.guard(n, "bispecial_identity", [&] {
        auto c = verify_bispecial_identity(oracle, n);
        list.record(n,
                    "bispecial_identity",
                    c.holds,
                    "s(n+1)-s(n)=" + std::to_string(c.lhs)
                        + " sb-wb=" + std::to_string(c.rhs));
      });

      if (!binary) {
        list.skip(n, "no_weak_bispecials", "binary alphabets only");
      } else {
        list.guard(n, "no_weak_bispecials", [&] {
          auto c = verify_no_weak_bispecials(oracle, n);
          list.record(n,
                      "no_weak_bispecials",
                      c.holds(),
                      "wb=" + std::to_string(c.weak_bispecials));
        });
      }

      // Cohomology
      list.guard(n, "cohomology", [&] {
        auto const r  = stage_report(oracle, n);
        auto const sb = specials_report(oracle, n).strong_count;
        list.record(n,
                    "h1_rank",
                    r.h1_rank == r.s_plus_1,
                    "h1=" + std::to_string(r.h1_rank)
                        + " s+1=" + std::to_string(r.s_plus_1));
        list.record(n,
                    "pullback",
                    r.commutes && r.pullback_injective_on_cochains,
                    "commutes=" + bool_str(r.commutes) + " injective="
                        + bool_str(r.pullback_injective_on_cochains));
        list.record(n,
                    "induced_injective",
                    r.induced_injective,
                    "rank=" + std::to_string(r.induced_map_rank));
        list.record(n,
                    "h0_quotient",
                    r.h0_quotient_dim == 0,
                    "dim=" + std::to_string(r.h0_quotient_dim));
        list.record(n,
                    "h1_quotient",
                    r.h1_quotient_dim == sb
                        && r.h1_quotient_dim + r.h1_rank
                               == r.upper_h1_rank + r.h0_quotient_dim,
                    "dim=" + std::to_string(r.h1_quotient_dim)
                        + " sb=" + std::to_string(sb));
      });
    }

    // Checks not tied to one stage.
    std::size_t const check_len = std::min<std::size_t>(config.max_n, 6);
    if (!oracle.rule().has_probabilities()) {
      list.skip(0, "sample_legal", "rule has no probabilities");
    } else {
      list.guard(0, "sample_legal", [&] {
        auto const seed = config.seed.value_or(default_verify_seed);
        auto const w    = sample_inflation(oracle.rule(), "b", 10, seed);
        std::size_t bad = 0;
        for (std::size_t len = 1; len <= check_len; ++len) {
          for (auto const& u : subwords(w, len)) {
            bad += !oracle.is_legal(u);
          }
        }
        list.record(0,
                    "sample_legal",
                    bad == 0,
                    "|w|=" + std::to_string(w.size())
                        + " illegal=" + std::to_string(bad));
        auto const depth = std::min<std::size_t>(config.max_n, w.size() / 2);
        list.record(0,
                    "thread_consistency",
                    depth == 0 || thread_consistency(w, w.size() / 2, depth),
                    "depth=" + std::to_string(depth));
      });
    }
    return list.take();
  }

  void print_verify_table(VerifyResult const& result, std::ostream& out) {
    out << std::left << std::setw(4) << "n" << std::setw(22) << "check"
        << std::setw(8) << "status"
        << "detail\n";
    for (auto const& c : result.checks) {
      char const* status = c.status == CheckStatus::pass   ? "pass"
                           : c.status == CheckStatus::fail ? "FAIL"
                                                           : "skip";
      out << std::left << std::setw(4)
          << (c.n == 0 ? std::string("-") : std::to_string(c.n))
          << std::setw(22) << c.name << std::setw(8) << status << c.detail
          << '\n';
    }
    out << (result.all_passed() ? "all checks passed" : "verification FAILED")
        << '\n';
  }

  ////////////////////////////////////////////////////////////////////////
  // Report files and sampling
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::filesystem::path> write_report(RunConfig const& config) {
    config.validate();
    LanguageOracle oracle(config.load_rule(), config.language_options());
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) {
      throw IoError("cannot create " + config.output_dir.string() + ": "
                    + ec.message());
    }
    std::vector<std::filesystem::path> written;
    if (config.format == Format::json) {
      ordered_json doc;
      doc["rule"]       = ordered_json::parse(to_json(oracle.rule()));
      doc["max_n"]      = config.max_n;
      doc["complexity"] = ordered_json::array();
      doc["cohomology"] = ordered_json::array();
      doc["graphs"]     = ordered_json::array();
      for (std::size_t n = 1; n <= config.max_n; ++n) {
        doc["complexity"].push_back(complexity_row(specials_report(oracle, n)));
        doc["cohomology"].push_back(cohomology_row(stage_report(oracle, n)));
        doc["graphs"].push_back(
            ordered_json::parse(to_json(build_rauzy(oracle, n))));
      }
      auto path = config.output_dir / "report.json";
      write_file(path, doc.dump(2) + '\n');
      written.push_back(path);
    } else {
      auto path = config.output_dir / "complexity.csv";
      write_file(path, complexity_table(oracle, config.max_n, Format::csv));
      written.push_back(path);
      path = config.output_dir / "cohomology.csv";
      write_file(path, cohomology_table(oracle, config.max_n, Format::csv));
      written.push_back(path);
    }
    for (std::size_t n = 1; n <= config.max_n; ++n) {
      auto path = config.output_dir / ("rauzy_" + std::to_string(n) + ".dot");
      write_file(path, export_dot(build_rauzy(oracle, n)));
      written.push_back(path);
    }
    return written;
  }

  Word run_sample(RunConfig const& config, std::size_t k, std::size_t check_len) {
    if (!config.seed) {
      throw ConfigurationError("sampling needs a seed");
    }
    if (k == 0) {
      throw ConfigurationError("sampling needs k >= 1");
    }
    LanguageOracle oracle(config.load_rule(), config.language_options());
    auto const     w = sample_inflation(oracle.rule(), "b", k, *config.seed);
    for (std::size_t len = 1; len <= check_len; ++len) {
      for (auto const& u : subwords(w, len)) {
        if (!oracle.is_legal(u)) {
          throw InvariantViolation("sampled word has illegal factor \"" + u
                                   + "\"");
        }
      }
    }
    return w;
  }

}  // namespace rauzylab
