#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "zolotarev/output.hpp"

using namespace zolotarev;
using namespace zolotarev::io;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  return out;
}

std::vector<std::string> lines(const std::string& text) { return split(text, '\n'); }

}  // namespace

TEST_CASE("format_number keeps 17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-2.5) == "-2.5");
  CHECK(format_number(1e-20) == "9.9999999999999995e-21");
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 200; ++i) {
    const double v = u(rng);
    CHECK(std::stod(format_number(v)) == v);
  }
}

TEST_CASE("JSON records survive emit and parse") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.098, -0.001);
  for (int i = 0; i < 20; ++i) {
    const OutputRecord rec = construction_record(build(u(rng)));
    CHECK(parse_json(emit_json(rec)) == rec);
  }
  const OutputRecord sol = solution_record(solve(1.0));
  CHECK(parse_json(emit_json(sol)) == sol);
  const OutputRecord ver = verification_record(verify::verify(build(-0.05), 1001));
  CHECK(parse_json(emit_json(ver)) == ver);
}

TEST_CASE("construction payload") {
  const auto rec = construction_record(build(-0.05));
  CHECK(rec.kind == RecordKind::construction);
  CHECK(rec.schema_version == kSchemaVersion);
  CHECK(std::abs(rec.payload["gamma"].get<double>() - 1.24531) <= 1e-5);
  CHECK(rec.payload["b"].size() == 7);
  CHECK(rec.payload["z"].size() == 4);
  const std::string text = emit_json(rec);
  CHECK(text.find("\"kind\": \"construction\"") != std::string::npos);
  CHECK(emit_json(rec) == text);
}

TEST_CASE("construction CSV has one header and one data row of 18 columns") {
  const std::string csv = emit_csv(construction_record(build(-0.01)));
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
  const auto rows = lines(csv);
  REQUIRE(rows.size() == 2);
  const auto header = split(rows[0], ',');
  const auto data = split(rows[1], ',');
  CHECK(header.size() == 18);
  CHECK(data.size() == 18);
  CHECK(header.front() == "t");
  CHECK(header.back() == "schema_version");
  CHECK(std::stod(data[0]) == -0.01);
  CHECK(data.back() == kSchemaVersion);
}

TEST_CASE("table sweep") {
  const auto rows = sweep(-0.09, -0.01, 9);
  REQUIRE(rows.size() == 9);
  CHECK(rows.front().t == -0.09);
  CHECK(rows.back().t == -0.01);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].t > rows[i - 1].t);
    CHECK(rows[i].s > rows[i - 1].s);
  }
  const auto mid = rows[5];
  CHECK(mid.t == doctest::Approx(-0.04));

  const auto at_example = sweep(-0.06, -0.04, 3)[1];
  CHECK(at_example.t == doctest::Approx(-0.05));
  CHECK(at_example.L / at_example.L_inf >= 0.999);
  CHECK(at_example.L / at_example.L_inf <= 1.001);

  CHECK_THROWS_AS(sweep(-0.09, -0.01, 1), std::invalid_argument);
  CHECK_THROWS_AS(sweep(-0.2, -0.01, 3), DomainError);
  CHECK_THROWS_AS(sweep(-0.01, -0.09, 3), std::invalid_argument);

  const std::string csv = emit_csv(table_record(rows));
  CHECK(lines(csv).size() == 10);
  CHECK(lines(csv)[0] == "t,s,L,L_inf,alpha,beta,gamma");
}

TEST_CASE("verification and oracle records have no CSV form") {
  CHECK_THROWS_AS(emit_csv(verification_record(verify::verify(build(-0.05), 201))), std::invalid_argument);
}
