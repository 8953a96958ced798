#include <catch2/catch_amalgamated.hpp>

#include <liedim/run.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LIEDIM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string fixture_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string write_fixture(const std::string& name, const std::string& content) {
  const std::string path = fixture_path(name);
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("verification run is deterministic and exits zero") {
  const CliResult a = run_cli("verify --g 2 --max-n 4");
  const CliResult b = run_cli("verify --g 2 --max-n 4");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
  const auto lines = lines_of(a.out);
  REQUIRE_FALSE(lines.empty());
  CHECK(lines.back() == "result\tPASS");
}

TEST_CASE("dims: TSV table with frozen first row") {
  const CliResult r = run_cli("dims --g 2 --n 2..5 --tsv");
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);  // header + 4 degrees
  CHECK(lines[0].rfind("g\tn\tdim_free", 0) == 0);
  CHECK(lines[1] == "2\t2\t6\t0\t1\t6\t6\t5\t5\t1\t1\t0\t1\t1");
  CHECK(lines[2].rfind("2\t3\t20\t", 0) == 0);
  // dim_metabelian column.
  std::vector<std::string> expected = {"6", "20", "45", "84"};
  for (int i = 1; i <= 4; ++i) {
    std::istringstream row(lines[static_cast<std::size_t>(i)]);
    std::string field;
    for (int f = 0; f <= 5; ++f) std::getline(row, field, '\t');
    CHECK(field == expected[static_cast<std::size_t>(i - 1)]);
  }
}

TEST_CASE("dims: JSON output round-trips through the record parser") {
  const CliResult r = run_cli("dims --g 2 --n 2..4 --json");
  CHECK(r.code == 0);
  const liedim::Json j = liedim::Json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0].at("dim_metabelian").get<std::string>() == "6");
  CHECK(j[2].at("dim_kernel").get<std::string>() == "15");
  for (const auto& rec : j) {
    const liedim::QuotientDimRecord parsed = liedim::quotient_record_from_json(rec);
    CHECK(liedim::to_json(parsed) == rec);
    CHECK(parsed.lower_bound_ok);
    CHECK(parsed.formula_ok);
  }
}

TEST_CASE("dims: subprocess output matches the in-process engine byte for byte") {
  const CliResult r = run_cli("dims --g 2 --n 2..4 --json");
  liedim::RunConfig cfg;
  cfg.cmd = liedim::Command::dims;
  cfg.format = liedim::OutputFormat::json;
  cfg.g = 2;
  cfg.n_lo = 2;
  cfg.n_hi = 4;
  std::ostringstream os;
  CHECK(liedim::run(cfg, os) == 0);
  CHECK(r.out == os.str());
}

TEST_CASE("hall: TSV listing and JSON counts") {
  const CliResult tsv = run_cli("hall --k 2 --max-degree 3 --tsv");
  CHECK(tsv.code == 0);
  const auto lines = lines_of(tsv.out);
  REQUIRE(lines.size() >= 4);
  CHECK(lines[0] == "level\tdegree\tmonomial");
  CHECK(lines[1] == "0\t1\t1");
  CHECK(lines[2] == "0\t1\t2");
  CHECK(lines[3] == "1\t2\t[1,2]");

  const CliResult json = run_cli("hall --k 4 --max-degree 4 --json");
  CHECK(json.code == 0);
  const liedim::Json j = liedim::Json::parse(json.out);
  bool saw45 = false, saw15 = false;
  for (const auto& c : j.at("counts")) {
    if (c.at("degree") == 4 && c.at("level") == 1) saw45 = c.at("count") == "45";
    if (c.at("degree") == 4 && c.at("level") == 2) saw15 = c.at("count") == "15";
  }
  CHECK(saw45);
  CHECK(saw15);
  CHECK(j.at("elements").size() == 90);
}

TEST_CASE("bounds: per-degree table with frozen rows") {
  const CliResult r = run_cli("bounds --g 2 --n 2..5 --tsv");
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] ==
        "n\tsym_plus\tsym_minus\tminus_span\tremainder_bound\tf0_count\tf0_bound\t"
        "minus_sum_bound\tlocal_lower");
  CHECK(lines[1] == "2\t1\t0\t2\t6\t1\t1\t6\t6");
  CHECK(lines[2] == "3\t2\t2\t6\t18\t2\t2\t30\t20");
}

TEST_CASE("zeros: fiber report in both formats") {
  const std::string matrix =
      write_fixture("liedim_test_d.csv", "1,0\n0,1\n1,0\n0,1\n");
  const CliResult tsv = run_cli("zeros --g 2 --n 5 --matrix " + matrix);
  CHECK(tsv.code == 0);
  const auto lines = lines_of(tsv.out);
  REQUIRE(lines.size() >= 3);
  CHECK(lines[0] == "total\t35");
  CHECK(lines[1] == "max_fiber\t6");
  CHECK(lines[2] == "kernel_box\t49");
  bool saw_fiber = false;
  for (const auto& l : lines) saw_fiber = saw_fiber || l == "fiber\t1,1\t4";
  CHECK(saw_fiber);

  const CliResult json = run_cli("zeros --g 2 --n 5 --matrix " + matrix + " --json");
  CHECK(json.code == 0);
  const liedim::Json j = liedim::Json::parse(json.out);
  CHECK(j.at("total") == "35");
  const liedim::FiberReport parsed = liedim::fiber_report_from_json(j);
  CHECK(liedim::to_json(parsed) == j);
}

TEST_CASE("zeros: JSON matrix input and root profile") {
  const std::string matrix = write_fixture(
      "liedim_test_d.json", R"({"denominator": 1, "entries": [[1,0],[0,1],[1,0],[0,1]]})");
  const std::string profile = write_fixture(
      "liedim_test_profile.json",
      R"({"l": 1, "m": 1, "roots": {"0": [0], "1": [1], "2": [2], "3": [3]}})");
  const CliResult r =
      run_cli("zeros --g 2 --n 5 --matrix " + matrix + " --profile " + profile);
  CHECK(r.code == 0);
  bool saw = false;
  for (const auto& l : lines_of(r.out)) saw = saw || l == "vanishing\t5";
  CHECK(saw);
}

TEST_CASE("crossover: JSON report with the default-parameter degree") {
  const CliResult r = run_cli("crossover --g 2 --B 0 --c0 0 --horizon 200 --json");
  CHECK(r.code == 0);
  const liedim::Json j = liedim::Json::parse(r.out);
  CHECK(j.at("n0") == 31);
  CHECK(j.at("leading_ok") == true);
  CHECK(j.at("trace").size() == 198);
  const liedim::CrossoverReport parsed = liedim::crossover_report_from_json(j);
  CHECK(liedim::to_json(parsed) == j);

  const CliResult tsv = run_cli("crossover --g 2 --horizon 50");
  CHECK(tsv.code == 0);
  bool saw = false;
  for (const auto& l : lines_of(tsv.out)) saw = saw || l == "n0\t31";
  CHECK(saw);
}

TEST_CASE("crossover: rational obstruction coefficients parse") {
  const CliResult r = run_cli("crossover --g 2 --B 1/2 --horizon 60 --json");
  CHECK(r.code == 0);
  const liedim::Json j = liedim::Json::parse(r.out);
  CHECK_FALSE(j.at("n0").is_null());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").code == 2);                          // missing subcommand
  CHECK(run_cli("frobnicate").code == 2);                // unknown subcommand
  CHECK(run_cli("dims --g 2").code == 2);                // missing required flag
  CHECK(run_cli("dims --g 2 --n 5..2").code == 2);       // empty range
  CHECK(run_cli("dims --g 2 --n 1..3").code == 2);       // range below degree 2
  CHECK(run_cli("dims --g 2 --n 2..4 --bogus").code == 2);
  CHECK(run_cli("zeros --g 2 --n 5 --matrix /nonexistent.csv").code == 2);
  CHECK(run_cli("crossover --g 1 --horizon 50").code == 2);  // domain guard
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("degenerate matrix input exits with code 2") {
  const std::string bad = write_fixture("liedim_test_bad.csv", "1,2\n2,4\n3,6\n4,8\n");
  CHECK(run_cli("zeros --g 2 --n 5 --matrix " + bad).code == 2);
}

TEST_CASE("budget refusals exit with code 3 and flush partial rows") {
  CHECK(run_cli("dims --g 4 --n 2..3").code == 3);  // eight generators
  const CliResult partial = run_cli("dims --g 2 --n 2..9 --budget-degree 4 --tsv");
  CHECK(partial.code == 3);
  const auto lines = lines_of(partial.out);
  REQUIRE(lines.size() == 4);  // header + degrees 2..4, then the refusal
  CHECK(lines[3].rfind("2\t4\t60\t", 0) == 0);
  CHECK(run_cli("verify --g 2 --max-n 5 --budget-degree 3").code == 3);
}
