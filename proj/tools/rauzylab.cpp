// rauzylab: complexity, Rauzy graphs and graph cohomology of random
// substitution languages.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rauzylab/cohomology.hpp"
#include "rauzylab/complexity.hpp"
#include "rauzylab/errors.hpp"
#include "rauzylab/language.hpp"
#include "rauzylab/rauzy.hpp"
#include "rauzylab/report.hpp"

namespace {

  using namespace rauzylab;

  struct Options {
    std::string           rule = "fib";
    std::string           rule_file;
    std::size_t           max_n = 10;
    std::size_t           n     = 1;
    std::string           format = "csv";
    std::uint64_t         seed   = 0;
    std::string           out    = ".";
    std::size_t           generation_cap = 64;
    std::string           dot_path;
    bool                  highlight = false;
    bool                  words     = false;
    std::size_t           k         = 1;
    std::size_t           check_len = 6;
  };

  void add_rule_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--rule", opt.rule, "fib, noble:m, fib-det or thue-morse")
        ->capture_default_str();
    cmd->add_option("--rule-file", opt.rule_file, "JSON rule file")
        ->check(CLI::ExistingFile);
    cmd->add_option("--generation-cap",
                    opt.generation_cap,
                    "generations allowed before giving up")
        ->capture_default_str();
  }

  RunConfig make_config(Options const& opt, CLI::App const* cmd) {
    RunConfig config;
    config.rule = opt.rule;
    if (!opt.rule_file.empty()) {
      config.rule_file = opt.rule_file;
    }
    config.max_n          = opt.max_n;
    config.format         = parse_format(opt.format);
    config.generation_cap = opt.generation_cap;
    if (auto const* seed = cmd->get_option_no_throw("--seed");
        seed != nullptr && seed->count() > 0) {
      config.seed = opt.seed;
    }
    config.output_dir = opt.out;
    if (char const* env = std::getenv("RAUZYLAB_OUT"); env && *env) {
      config.output_dir = env;
    }
    return config;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complexity, Rauzy graphs and graph cohomology of random "
               "substitution languages"};
  app.require_subcommand(1);
  Options opt;

  auto* verify = app.add_subcommand("verify", "run every structural check");
  auto* complexity_cmd
      = app.add_subcommand("complexity", "p(n), s(n) and special counts");
  auto* graph      = app.add_subcommand("graph", "build one Rauzy graph");
  auto* cohomology = app.add_subcommand("cohomology", "H^1 ranks and maps");
  auto* language   = app.add_subcommand("language", "legal factor counts");
  auto* sample     = app.add_subcommand("sample", "sample an inflated word");
  auto* report     = app.add_subcommand("report", "write report files");

  for (auto* cmd : {verify, complexity_cmd, cohomology, report}) {
    add_rule_options(cmd, opt);
    cmd->add_option("--max-n", opt.max_n, "largest n")->capture_default_str();
    cmd->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opt.out, "output directory (RAUZYLAB_OUT wins)");
    cmd->add_option("--seed", opt.seed, "sampling seed");
  }
  add_rule_options(language, opt);
  language->add_option("--max-len", opt.max_n, "largest factor length")
      ->capture_default_str();
  language->add_option("--format", opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  language->add_flag("--words", opt.words, "include the factor lists");

  add_rule_options(graph, opt);
  graph->add_option("--n", opt.n, "graph index")->required();
  graph->add_option("--format", opt.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--dot", opt.dot_path, "write DOT to this file");
  graph->add_flag("--highlight-specials",
                  opt.highlight,
                  "fill right special vertices");

  add_rule_options(sample, opt);
  sample->add_option("--k", opt.k, "number of inflation rounds")->required();
  sample->add_option("--seed", opt.seed, "sampling seed")->required();
  sample->add_option("--check-len",
                     opt.check_len,
                     "check factors up to this length")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App const* cmd = app.get_subcommands().front();
    if (cmd == graph) {
      opt.max_n = opt.n;
    }
    auto const config = make_config(opt, cmd);
    config.validate();

    if (cmd == verify) {
      auto const result = run_verify(config);
      print_verify_table(result, std::cout);
      if (auto const* failure = result.first_failure()) {
        std::cerr << "check " << failure->name << " failed at n = "
                  << failure->n << ": " << failure->detail << '\n';
        return 1;
      }
      return 0;
    }
    if (cmd == report) {
      for (auto const& path : write_report(config)) {
        std::cout << path.string() << '\n';
      }
      return 0;
    }
    if (cmd == sample) {
      std::cout << run_sample(config, opt.k, opt.check_len) << '\n';
      return 0;
    }

    LanguageOracle oracle(config.load_rule(), config.language_options());
    if (cmd == complexity_cmd) {
      std::cout << complexity_table(oracle, config.max_n, config.format);
    } else if (cmd == cohomology) {
      std::vector<CohomologyReport> stages;
      if (config.max_n >= 2) {
        stages = direct_limit_report(oracle, config.max_n).stages;
      } else {
        stages.push_back(stage_report(oracle, 1));
      }
      std::cout << cohomology_table(stages, config.format);
      for (auto const& r : stages) {
        if (!r.strongly_connected || r.h1_rank != r.s_plus_1 || !r.commutes
            || !r.pullback_injective_on_cochains || !r.induced_injective
            || r.h0_quotient_dim != 0) {
          std::cerr << "invariant violation at stage " << r.n << '\n';
          return 1;
        }
      }
    } else if (cmd == language) {
      std::cout << language_table(
          oracle, config.max_n, config.format, opt.words);
    } else if (cmd == graph) {
      auto const g = build_rauzy(oracle, opt.n);
      if (!strongly_connected(g)) {
        throw InvariantViolation("R_" + std::to_string(opt.n)
                                 + " is not strongly connected");
      }
      if (!opt.dot_path.empty()) {
        std::ofstream out(opt.dot_path, std::ios::binary | std::ios::trunc);
        if (!(out << export_dot(g, opt.highlight))) {
          throw IoError("cannot write " + opt.dot_path);
        }
      }
      if (config.format == Format::json) {
        std::cout << to_json(g) << '\n';
      } else if (opt.dot_path.empty()) {
        std::cout << export_dot(g, opt.highlight);
      }
    }
    return 0;
  } catch (InvariantViolation const& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 1;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
