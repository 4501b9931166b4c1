#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ZOLOTAREV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json payload(const Run& r) { return nlohmann::json::parse(r.out).at("payload"); }

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("eval") {
  const Run r = run("eval --t -0.05 --format json");
  REQUIRE(r.code == 0);
  CHECK(std::abs(payload(r)["gamma"].get<double>() - 1.24531) <= 1e-5);

  CHECK(run("eval --t 0.5").code == 2);

  const Run csv = run("eval --t -0.01 --format csv");
  REQUIRE(csv.code == 0);
  CHECK(count_lines(csv.out) == 2);
  const std::string header = csv.out.substr(0, csv.out.find('\n'));
  CHECK(std::count(header.begin(), header.end(), ',') == 17);
}

TEST_CASE("eval diagnostic names the interval") {
  const std::string cmd = std::string(ZOLOTAREV_CLI_PATH) + " eval --t 0.5 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 1024> buf{};
  std::string err;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) err.append(buf.data(), n);
  pclose(pipe);
  CHECK(err.find("I6") != std::string::npos);
}

TEST_CASE("solve") {
  const Run r = run("solve --s 1");
  REQUIRE(r.code == 0);
  const auto p = payload(r);
  CHECK(std::abs(p["monic"][5].get<double>() + 6) <= 1e-9);
  CHECK(p["monic"][6].get<double>() == 1.0);
  CHECK(std::abs(p["L"].get<double>() - 0.37758) <= 1e-5);

  CHECK(run("solve --s 0.05").code == 2);
  CHECK(run("solve --s 100000").code == 3);

  const Run back = run("solve --s 0.16625464");
  REQUIRE(back.code == 0);
  CHECK(std::abs(payload(back)["t_star"].get<double>() + 0.05) <= 1e-4);

  const Run csv = run("solve --s 1 --format csv");
  CHECK(csv.code == 0);
  CHECK(count_lines(csv.out) == 2);
}

TEST_CASE("verify") {
  const Run ok = run("verify --t -0.05 --grid 1001");
  REQUIRE(ok.code == 0);
  CHECK(payload(ok)["passed"].get<bool>());

  const Run edge = run("verify --t -0.098");
  REQUIRE(edge.code == 0);
  CHECK(payload(edge)["passed"].get<bool>());
  CHECK(payload(edge).contains("relaxed_tolerances"));

  const Run small = run("verify --t -0.002");
  REQUIRE(small.code == 0);
  CHECK(payload(small)["relaxed_tolerances"].get<bool>());

  CHECK(run("verify --t -0.2").code == 2);
  CHECK(run("verify --t -0.05 --grid 10").code == 2);
}

TEST_CASE("table") {
  const Run r = run("table --t-min -0.09 --t-max -0.01 --steps 9");
  REQUIRE(r.code == 0);
  CHECK(count_lines(r.out) == 10);

  const Run j = run("table --t-min -0.09 --t-max -0.01 --steps 9 --format json");
  REQUIRE(j.code == 0);
  const auto rows = payload(j)["rows"];
  REQUIRE(rows.size() == 9);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i]["s"].get<double>() > rows[i - 1]["s"].get<double>());

  const Run mid = run("table --t-min -0.06 --t-max -0.04 --steps 3 --format json");
  const auto row = payload(mid)["rows"][1];
  const double ratio = row["L"].get<double>() / row["L_inf"].get<double>();
  CHECK(ratio >= 0.999);
  CHECK(ratio <= 1.001);

  CHECK(run("table --t-min -0.09 --t-max -0.01 --steps 1").code == 2);
  CHECK(run("table --t-min -0.5 --t-max -0.01 --steps 3").code == 2);
}

TEST_CASE("oracle") {
  for (const char* s : {"1", "2"}) {
    const Run r = run(std::string("oracle --s ") + s + " --grid 2049");
    REQUIRE(r.code == 0);
    const auto p = payload(r);
    CHECK(std::abs(p["deviation"].get<double>() - p["closed_form_L"].get<double>()) <= 1e-5);
  }
  const Run boundary = run("oracle --s 0.08 --grid 4097");
  REQUIRE(boundary.code == 0);
  CHECK(payload(boundary)["abs_difference"].get<double>() <= 1e-5);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("eval").code == 2);
  CHECK(run("eval --t -0.05 --format xml").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("output is deterministic") {
  CHECK(run("eval --t -0.03").out == run("eval --t -0.03").out);
  CHECK(run("solve --s 0.7 --format csv").out == run("solve --s 0.7 --format csv").out);
}
