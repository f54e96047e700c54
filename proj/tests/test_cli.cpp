#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "deltafn/report.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(DELTAFN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

TEST_CASE("eval prints tab-separated fields") {
  const Run d = run_cli("eval --fn delta --x 0");
  CHECK(d.code == 0);
  const auto fields = split(d.out.substr(0, d.out.find('\n')), '\t');
  REQUIRE(fields.size() == 4);
  CHECK(std::stod(fields[0]) == doctest::Approx(-0.5772156649015329).epsilon(1e-15));

  const Run m = run_cli("eval --fn deriv --m 1 --x 1");
  CHECK(m.code == 0);
  CHECK(m.out.rfind("0.4227843350984671", 0) == 0);
  CHECK(split(m.out, '\t')[2] == "CLOSED");

  const Run h = run_cli("eval --fn deriv --m 3 --x 2 --route hurwitz --rel-tol 1e-10");
  CHECK(h.code == 0);
  CHECK(split(h.out, '\t')[2] == "HURWITZ");
}

TEST_CASE("eval usage and domain errors exit with 2") {
  CHECK(run_cli("eval --fn deriv --m 1 --x -2").code == 2);
  CHECK(run_cli("eval --fn deriv --m 13 --x 1").code == 2);
  CHECK(run_cli("eval --fn deriv --m 1 --x 1 --route bogus").code == 2);
  CHECK(run_cli("eval --fn deriv --m 1 --x 0 --route closed").code == 2);
  CHECK(run_cli("eval --fn deriv --m 1 --x -0.5 --route laplace").code == 2);
  CHECK(run_cli("eval --fn gamma --x 1").code == 2);
  CHECK(run_cli("eval --x").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("verify exit codes and JSON output") {
  const auto path = std::filesystem::temp_directory_path() / "deltafn_verify_test.json";
  const Run ok = run_cli("verify --suite recurrence --json " + path.string());
  CHECK(ok.code == 0);
  CHECK(ok.out.find("suite recurrence:") != std::string::npos);
  std::ifstream in(path);
  const auto report = deltafn::report_from_json(nlohmann::json::parse(in));
  CHECK(report.suite == "recurrence");
  CHECK(report.n_fail == 0);
  std::filesystem::remove(path);

  CHECK(run_cli("verify --suite appendix").code == 0);
  CHECK(run_cli("verify --suite halfint --tol 0").code == 1);
  CHECK(run_cli("verify --suite nosuch").code == 2);

  const Run js = run_cli("verify --suite asymptotic --json -");
  CHECK(js.code == 0);
  CHECK(nlohmann::json::parse(js.out)["suite"] == "asymptotic");
}

TEST_CASE("table CSV") {
  const Run t = run_cli("table --fn deriv --m 1 --start 0 --stop 10 --count 11 --routes CLOSED,HURWITZ");
  CHECK(t.code == 0);
  const auto lines = split(t.out, '\n');
  REQUIRE(lines.size() == 23);
  CHECK(lines[0] == "x,route,value,abs_err_est");
  for (std::size_t i = 1; i < lines.size(); i += 2) {
    const auto a = split(lines[i], ',');
    const auto b = split(lines[i + 1], ',');
    CHECK(a[0] == b[0]);
    CHECK(a[1] == "CLOSED");
    CHECK(b[1] == "HURWITZ");
    const double va = std::stod(a[2]);
    const double vb = std::stod(b[2]);
    CHECK(std::fabs(va - vb) <= 1e-8 * std::fabs(va));
  }

  const Run one = run_cli("table --fn deriv --m 1 --start 1 --stop 1 --count 1 --routes CLOSED,HYP");
  const auto rows = split(one.out, '\n');
  REQUIRE(rows.size() == 3);
  for (int i = 1; i <= 2; ++i) CHECK(std::stod(split(rows[i], ',')[2]) == doctest::Approx(0.4227843351).epsilon(1e-10));

  CHECK(run_cli("table --fn deriv --m 1 --start 0 --stop 10 --count 3 --log").code == 2);
  CHECK(run_cli("table --fn deriv --m 1 --start -2 --stop 10 --count 3").code == 2);
  CHECK(run_cli("table --fn deriv --m 1 --start 0 --stop 1 --count 0").code == 2);
  CHECK(run_cli("table --fn deriv --m 1 --start -0.5 --stop 1 --count 3 --routes LAPLACE").code == 2);

  const auto path = std::filesystem::temp_directory_path() / "deltafn_table_test.csv";
  CHECK(run_cli("table --fn deriv --m 2 --start 1 --stop 100 --count 5 --log --out " + path.string()).code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,route,value,abs_err_est");
  std::filesystem::remove(path);
}

TEST_CASE("scan") {
  const Run s = run_cli("scan --m-max 8 --start -0.9 --stop 100 --count 40");
  CHECK(s.code == 0);
  CHECK(s.out.find("320 passed, 0 failed") != std::string::npos);
  const Run z = run_cli("scan --m-max 1 --start 0 --stop 0 --count 1 --json -");
  CHECK(z.code == 0);
  const auto j = nlohmann::json::parse(z.out);
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["lhs"].get<double>() == doctest::Approx(0.8224670334241132).epsilon(1e-15));
  CHECK(run_cli("scan --m-max 13").code == 2);
}

TEST_CASE("standard output is byte-identical across runs") {
  for (const char* args : {"eval --fn deriv --m 4 --x 2.5 --route hyp", "verify --suite prop2",
                           "table --fn deriv --m 2 --start -0.5 --stop 3 --count 7 --routes AUTO,HURWITZ",
                           "scan --m-max 3 --start -0.5 --stop 5 --count 6"}) {
    CAPTURE(args);
    CHECK(run_cli(args).out == run_cli(args).out);
  }
}
