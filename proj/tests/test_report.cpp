#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rauzylab/errors.hpp"
#include "rauzylab/report.hpp"

using namespace rauzylab;
namespace fs = std::filesystem;

namespace {

  std::string slurp(fs::path const& path) {
    std::ifstream      in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  fs::path scratch(std::string const& name) {
    auto dir = fs::temp_directory_path()
               / ("rauzylab_test_" + name + "_"
                  + std::to_string(std::random_device{}()));
    fs::remove_all(dir);
    return dir;
  }

  std::string first_line(std::string const& text) {
    return text.substr(0, text.find('\n'));
  }

  int cli(std::string const& args) {
    std::string const command
        = std::string("\"") + RAUZYLAB_CLI + "\" " + args + " > /dev/null 2>&1";
    int const status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::size_t count(CheckStatus status, VerifyResult const& result) {
    std::size_t total = 0;
    for (auto const& c : result.checks) {
      total += c.status == status;
    }
    return total;
  }

}  // namespace

TEST_CASE("formats and configuration") {
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("dot") == Format::dot);
  CHECK_THROWS_AS(parse_format("xml"), ConfigurationError);

  RunConfig config;
  CHECK_NOTHROW(config.validate());
  config.max_n = 0;
  CHECK_THROWS_AS(config.validate(), ConfigurationError);
  config.max_n          = 10;
  config.generation_cap = 11;
  CHECK_THROWS_AS(config.validate(), ConfigurationError);
  config.generation_cap = 12;
  CHECK_NOTHROW(config.validate());

  config.rule = "no-such-rule";
  CHECK_THROWS_AS((void) config.load_rule(), Error);
  config.rule      = "fib";
  config.rule_file = "/nonexistent/rule.json";
  CHECK_THROWS_AS((void) config.load_rule(), Error);
}

TEST_CASE("tables") {
  LanguageOracle oracle(fibonacci_rule());
  auto const     complexity = complexity_table(oracle, 4, Format::csv);
  CHECK(first_line(complexity) == "n,p,s,sb,wb,rs,ls");
  CHECK(complexity.find("\n1,2,2,1,0,2,2\n") != std::string::npos);
  CHECK(complexity.find("\n3,7,6,3,0,6,6\n") != std::string::npos);

  auto const cohomology = cohomology_table(oracle, 3, Format::csv);
  CHECK(first_line(cohomology)
        == "n,vertices,edges,h1_rank,s_plus_1,injective,h0_quotient,"
           "h1_quotient");
  CHECK(cohomology.find("\n1,2,4,3,3,true,0,1\n") != std::string::npos);

  auto const language = language_table(oracle, 3, Format::csv, true);
  CHECK(first_line(language) == "m,p,words");
  CHECK(language.find("\n2,4,aa;ab;ba;bb\n") != std::string::npos);

  auto const doc
      = nlohmann::json::parse(complexity_table(oracle, 4, Format::json));
  REQUIRE(doc.size() == 4);
  CHECK(doc[3]["p"] == 13);
  CHECK(doc[3]["sb"] == 8);
  CHECK_THROWS_AS(complexity_table(oracle, 2, Format::dot), ConfigurationError);
}

TEST_CASE("verify passes on the random Fibonacci rule") {
  RunConfig config;
  config.max_n      = 5;
  auto const result = run_verify(config);
  CHECK(result.all_passed());
  CHECK(result.first_failure() == nullptr);
  CHECK(count(CheckStatus::fail, result) == 0);
  bool identity_ran = false;
  for (auto const& c : result.checks) {
    identity_ran = identity_ran
                   || (c.name == "fibonacci_identity" && c.n == 5
                       && c.status == CheckStatus::pass);
  }
  CHECK(identity_ran);

  std::ostringstream table;
  print_verify_table(result, table);
  CHECK(table.str().find("all checks passed") != std::string::npos);
}

TEST_CASE("verify skips rule-specific checks on a noble mean") {
  RunConfig config;
  config.rule       = "noble:2";
  config.max_n      = 6;
  auto const result = run_verify(config);
  CHECK(result.all_passed());
  CHECK(count(CheckStatus::skip, result) > 0);
}

TEST_CASE("verify fails on Thue-Morse") {
  RunConfig config;
  config.rule       = "thue-morse";
  config.max_n      = 3;
  auto const result = run_verify(config);
  CHECK_FALSE(result.all_passed());
  REQUIRE(result.first_failure() != nullptr);
  CHECK(result.first_failure()->n == 3);

  std::ostringstream table;
  print_verify_table(result, table);
  CHECK(table.str().find("verification FAILED") != std::string::npos);
  CHECK(table.str().find("FAIL") != std::string::npos);
}

TEST_CASE("report files") {
  auto const dir_a = scratch("a"), dir_b = scratch("b");
  RunConfig  config;
  config.max_n      = 4;
  config.output_dir = dir_a;
  auto const first  = write_report(config);
  config.output_dir = dir_b;
  auto const second = write_report(config);
  REQUIRE(first.size() == 6);
  REQUIRE(second.size() == first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].filename() == second[i].filename());
    CHECK(slurp(first[i]) == slurp(second[i]));
  }
  CHECK(first[0].filename() == "complexity.csv");
  CHECK(first[1].filename() == "cohomology.csv");

  std::regex const node(R"(\n  v\d+ \[label)");
  std::size_t      expected[] = {2, 4, 7, 13};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const text = slurp(dir_a / ("rauzy_" + std::to_string(n) + ".dot"));
    CHECK(static_cast<std::size_t>(
              std::distance(std::sregex_iterator(text.begin(), text.end(), node),
                            std::sregex_iterator()))
          == expected[n - 1]);
  }

  auto const dir_j  = scratch("json");
  config.output_dir = dir_j;
  config.format     = Format::json;
  auto const json   = write_report(config);
  CHECK(json.front().filename() == "report.json");
  auto const doc = nlohmann::json::parse(slurp(json.front()));
  CHECK(doc["max_n"] == 4);
  CHECK(doc["complexity"].size() == 4);
  CHECK(doc["cohomology"][2]["h1_rank"] == 7);
  CHECK(doc["graphs"][1]["edges"].size() == 7);

  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
  fs::remove_all(dir_j);
}

TEST_CASE("report into an unwritable location") {
  auto const blocker = scratch("blocker");
  { std::ofstream(blocker) << "file"; }
  RunConfig config;
  config.max_n      = 2;
  config.output_dir = blocker / "sub";
  CHECK_THROWS_AS(write_report(config), IoError);
  fs::remove(blocker);
}

TEST_CASE("sampling") {
  RunConfig config;
  CHECK_THROWS_AS(run_sample(config, 3, 3), ConfigurationError);
  config.seed = 7;
  CHECK(run_sample(config, 1, 1) == "a");
  CHECK_THROWS_AS(run_sample(config, 0, 1), ConfigurationError);
  auto const w = run_sample(config, 10, 6);
  CHECK(w.size() == 89);
  CHECK(w == run_sample(config, 10, 0));
}

TEST_CASE("command line exit codes") {
  CHECK(cli("verify --max-n 4") == 0);
  CHECK(cli("complexity --max-n 6 --format json") == 0);
  CHECK(cli("cohomology --max-n 5") == 0);
  CHECK(cli("language --max-len 5 --words") == 0);
  CHECK(cli("graph --n 3") == 0);
  CHECK(cli("graph --n 3 --format json") == 0);
  CHECK(cli("sample --k 6 --seed 3") == 0);
  CHECK(cli("verify --rule thue-morse --max-n 4") == 1);
  CHECK(cli("cohomology --rule thue-morse --max-n 4") == 1);
  CHECK(cli("complexity --rule bogus") == 2);
  CHECK(cli("complexity --max-n 0") == 2);
  CHECK(cli("complexity --max-n 10 --generation-cap 5") == 2);
  CHECK(cli("nonsense") != 0);
}

TEST_CASE("RAUZYLAB_OUT overrides the output directory") {
  auto const env = scratch("env"), flag = scratch("flag");
  std::string const args = "report --max-n 2 --out \"" + flag.string() + "\"";
  std::string const command = "RAUZYLAB_OUT=\"" + env.string() + "\" \""
                              + RAUZYLAB_CLI + "\" " + args + " > /dev/null";
  CHECK(std::system(command.c_str()) == 0);
  CHECK(fs::exists(env / "complexity.csv"));
  CHECK(fs::exists(env / "rauzy_2.dot"));
  CHECK_FALSE(fs::exists(flag));
  fs::remove_all(env);
}
