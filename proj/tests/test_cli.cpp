#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "trigapprox/cli.hpp"

using namespace trigapprox;
using namespace trigapprox::cli;
using trigapprox::testing::kPi;

namespace {

std::vector<std::string> argv_of(std::initializer_list<std::string> args) {
  std::vector<std::string> v{"trigapprox"};
  v.insert(v.end(), args);
  return v;
}

struct Outcome {
  int status;
  std::string out, err;
};

Outcome invoke(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  const int status = main_entry(argv_of(args), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("parsing converge", "[cli]") {
  const auto cfg = parse_args(argv_of({"converge", "--fn", "sinc:sigma=1", "--p", "2", "--tau", "10,20,40,80"}));
  CHECK(cfg.subcommand == Subcommand::Converge);
  CHECK(cfg.function_ids == std::vector<std::string>{"sinc:sigma=1"});
  CHECK(cfg.p == 2.0);
  CHECK(cfg.taus == std::vector<double>{10.0, 20.0, 40.0, 80.0});
  CHECK(cfg.format == Format::Csv);
  CHECK(cfg.quad.abs_tol == 1e-10);
  CHECK(cfg.quad.rel_tol == 1e-10);
  CHECK(cfg.quad.max_depth == 50);

  const auto d = parse_args(argv_of({"converge", "--fn", "fejer:sigma=2"}));
  CHECK(d.taus == std::vector<double>{10.0, 20.0, 40.0, 80.0});
  CHECK(d.p == 2.0);
}

TEST_CASE("parsing counterexample ranges", "[cli]") {
  CHECK(parse_args(argv_of({"counterexample", "--m", "1..5"})).ms == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(parse_args(argv_of({"counterexample", "--m", "2,7..8"})).ms == std::vector<int>{2, 7, 8});
  CHECK(parse_args(argv_of({"counterexample"})).ms.size() == 10);
  CHECK_THROWS_AS(parse_args(argv_of({"counterexample", "--m", "5..1"})), UsageError);
  CHECK_THROWS_AS(parse_args(argv_of({"counterexample", "--m", "a"})), UsageError);
}

TEST_CASE("usage errors name the flag", "[cli]") {
  try {
    parse_args(argv_of({"converge", "--fn", "sinc:sigma=1", "--p", "1"}));
    FAIL("expected a UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()) == "--p: p must satisfy 1 < p < ∞");
  }
  CHECK_THROWS_AS(parse_args(argv_of({"converge", "--p", "2"})), UsageError);
  CHECK_THROWS_AS(parse_args(argv_of({"converge", "--fn", "nope:sigma=1"})), UsageError);
  CHECK_THROWS_AS(parse_args(argv_of({"converge", "--fn", "sinc:sigma=1", "--tau", "20,10"})), UsageError);
  CHECK_THROWS_AS(parse_args(argv_of({"converge", "--fn", "sinc:sigma=1", "--format", "xml"})), UsageError);
  CHECK_THROWS_AS(parse_args(argv_of({"converge", "--fn", "sinc:sigma=1", "--abs-tol", "1e-20"})), UsageError);
  CHECK_THROWS_AS(parse_args(argv_of({"lemma2", "--delta", "1.0"})), UsageError);
  CHECK_THROWS_AS(parse_args(argv_of({"lemma2", "--n-points", "10"})), UsageError);
  CHECK_THROWS_AS(parse_args(argv_of({"frobnicate"})), UsageError);
  CHECK_THROWS_AS(parse_args(argv_of({})), UsageError);
  CHECK_THROWS_AS(parse_args(argv_of({"lewitan", "--fn", "sinc:sigma=1", "--tau", "10", "--x", "0", "--mode", "x"})),
                  UsageError);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(invoke({"counterexample", "--m", "1..2"}).status == 0);
  const auto usage = invoke({"converge", "--fn", "sinc:sigma=1", "--p", "1"});
  CHECK(usage.status == 2);
  CHECK(usage.err.find("--p") != std::string::npos);
  CHECK(usage.out.empty());
  const auto help = invoke({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("converge") != std::string::npos);
  const auto failed = invoke({"counterexample", "--output", "/nonexistent/dir/out.csv"});
  CHECK(failed.status == 1);
  CHECK_FALSE(failed.err.empty());
  CHECK(invoke({"converge", "--fn", "cexp:omega=1"}).status == 2);
  const auto quad = invoke({"inequalities", "--fn", "sinc:sigma=1", "--max-depth", "1", "--abs-tol", "1e-14",
                            "--rel-tol", "1e-14"});
  CHECK(quad.status == 1);
  CHECK(quad.err.find("did not converge") != std::string::npos);
  CHECK(quad.out.empty());
}

TEST_CASE("counterexample output", "[cli]") {
  const auto r = invoke({"counterexample", "--m", "1..3"});
  REQUIRE(r.status == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"m", "tau", "imag_gap"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stoi(rows[i][0]) == static_cast<int>(i));
    CHECK(std::abs(std::stod(rows[i][2]) - 1.0) <= 1e-9);
  }
}

TEST_CASE("lemma2 default matrix", "[cli]") {
  const auto r = invoke({"lemma2"});
  REQUIRE(r.status == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 65);
  CHECK(rows[0].back() == "ratio");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i].back()) < 1.0);
}

TEST_CASE("coeffs of e^{ix} at tau = pi", "[cli]") {
  const auto r = invoke({"coeffs", "--fn", "cexp:omega=1", "--tau", "3.141592653589793"});
  REQUIRE(r.status == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"k", "re", "im", "abs_error"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int k = std::stoi(rows[i][0]);
    CHECK(std::abs(std::stod(rows[i][1]) - (k == 1 ? 1.0 : 0.0)) <= 1e-10);
    CHECK(std::abs(std::stod(rows[i][2])) <= 1e-10);
  }
  const auto j = invoke({"coeffs", "--fn", "cexp:omega=1", "--tau", "3.141592653589793", "--format", "json"});
  REQUIRE(j.status == 0);
  const auto a = TrigApproximant::from_json(j.out);
  CHECK(std::abs(a.coefficient(1) - cplx(1.0)) <= 1e-10);
}

TEST_CASE("JSON tables", "[cli]") {
  const auto r = invoke({"counterexample", "--m", "1,2", "--format", "json"});
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "counterexample");
  CHECK(doc["columns"].size() == 3);
  CHECK(doc["rows"].size() == 2);
}

TEST_CASE("output is deterministic", "[cli]") {
  const auto dir = std::filesystem::temp_directory_path() / fmt::format("trigapprox-cli-{}", Catch::getSeed());
  std::filesystem::create_directories(dir);
  auto read = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"inequalities", "--fn", "fejer:sigma=2"},
           {"lewitan", "--fn", "sinc:sigma=1", "--tau", "20", "--x", "0,0.37,3"},
           {"coeffs", "--fn", "fejer:sigma=2", "--tau", "10", "--format", "json"}}) {
    std::string first, second;
    for (auto* target : {&first, &second}) {
      const auto path = dir / "out.txt";
      auto argv = argv_of({});
      argv.insert(argv.end(), args.begin(), args.end());
      argv.insert(argv.end(), {"--output", path.string()});
      std::ostringstream out, err;
      REQUIRE(main_entry(argv, out, err) == 0);
      CHECK(out.str().empty());
      *target = read(path);
    }
    CHECK_FALSE(first.empty());
    CHECK(first == second);
  }
  std::filesystem::remove_all(dir);
}
