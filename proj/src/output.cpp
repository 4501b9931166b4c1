#include "zolotarev/output.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace zolotarev::io {

using nlohmann::json;

namespace {

template <typename Vec>
json array_of(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json array_of(const std::vector<double>& v) { return json(v); }

void append_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

std::string num(const json& v) { return format_number(v.get<double>()); }

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<TableRow> sweep(double t_min, double t_max, int steps) {
  if (steps < 2) throw std::invalid_argument("sweep: steps must be at least 2");
  if (!(t_min < t_max)) throw std::invalid_argument("sweep: need t_min < t_max");
  const ZParam<double> lo(t_min), hi(t_max);  // domain check on both ends
  std::vector<TableRow> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = (i == steps - 1) ? hi.value() : lo.value() + (hi.value() - lo.value()) * i / (steps - 1);
    const ZParam<double> p(t);
    const auto cp = critical_points(p);
    const double s = s_of_t(p);
    rows.push_back({t, s, L_of_t(p), bernstein_asymptotic(6, s), cp.alpha, cp.beta, cp.gamma});
  }
  return rows;
}

OutputRecord construction_record(const ZolotarevSextic<double>& zs) {
  json p;
  p["t"] = zs.t.value();
  p["b"] = array_of(zs.b);
  p["gamma"] = zs.gamma;
  p["alpha"] = zs.alpha;
  p["beta"] = zs.beta;
  p["z"] = array_of(zs.z);
  p["s"] = zs.s;
  p["L"] = zs.L;
  return {RecordKind::construction, std::move(p)};
}

OutputRecord solution_record(const ZfpSolution& sol) {
  json p;
  p["s"] = sol.s;
  p["t_star"] = sol.t_star.value();
  p["monic"] = array_of(sol.monic.coeffs());
  p["L"] = sol.L;
  p["residual"] = sol.residual;
  p["octic_roots"] = array_of(sol.octic_roots);
  return {RecordKind::solution, std::move(p)};
}

OutputRecord verification_record(const verify::VerificationReport& r) {
  json p;
  p["t"] = r.t;
  p["grid_size"] = r.grid_size;
  p["abel_pell_max_residual"] = r.abel_pell_max_residual;
  p["ps_linear_residual"] = r.ps_linear_residual;
  p["ps_power_residuals"] = r.ps_power_residuals;
  p["product_form_max_diff"] = r.product_form_max_diff;
  p["denominator_identity_rel"] = r.denominator_identity_rel;
  p["alternations_inner"] = r.alternations_inner;
  p["alternations_outer"] = r.alternations_outer;
  p["limits_checked"] = r.limits_checked;
  p["relaxed_tolerances"] = r.relaxed;
  p["tolerances"] = {{"abel_pell", r.tolerances.abel_pell},
                     {"ps", r.tolerances.ps},
                     {"product_form", r.tolerances.product_form},
                     {"alternation", r.tolerances.alternation}};
  p["passed"] = r.passed;
  return {RecordKind::verification, std::move(p)};
}

OutputRecord table_record(const std::vector<TableRow>& rows) {
  json a = json::array();
  for (const auto& r : rows)
    a.push_back({{"t", r.t}, {"s", r.s}, {"L", r.L}, {"L_inf", r.L_inf}, {"alpha", r.alpha}, {"beta", r.beta},
                 {"gamma", r.gamma}});
  return {RecordKind::table, json{{"rows", std::move(a)}}};
}

OutputRecord oracle_record(double s, const oracle::MinimaxResult& m, double closed_form_L) {
  json p;
  p["s"] = s;
  p["grid_size"] = m.grid_size;
  p["iterations"] = m.iterations;
  p["deviation"] = m.deviation;
  p["q"] = array_of(m.q.coeffs());
  p["monic"] = array_of(m.monic(s).coeffs());
  p["reference"] = m.reference;
  p["reference_signs"] = m.reference_signs;
  p["alternations"] = m.alternations;
  p["closed_form_L"] = closed_form_L;
  p["abs_difference"] = std::abs(m.deviation - closed_form_L);
  return {RecordKind::oracle, std::move(p)};
}

std::string emit_json(const OutputRecord& record) {
  const json doc{{"kind", record.kind}, {"schema_version", record.schema_version}, {"payload", record.payload}};
  return doc.dump(2) + "\n";
}

OutputRecord parse_json(std::string_view text) {
  const json doc = json::parse(text);
  return {doc.at("kind").get<RecordKind>(), doc.at("payload"), doc.at("schema_version").get<std::string>()};
}

std::string emit_csv(const OutputRecord& record) {
  const json& p = record.payload;
  std::string out;
  switch (record.kind) {
    case RecordKind::construction: {
      append_row(out, {"t", "b0", "b1", "b2", "b3", "b4", "b5", "b6", "gamma", "alpha", "beta", "z1", "z2", "z3", "z4",
                       "s", "L", "schema_version"});
      std::vector<std::string> row{num(p["t"])};
      for (const auto& b : p["b"]) row.push_back(num(b));
      for (const char* key : {"gamma", "alpha", "beta"}) row.push_back(num(p[key]));
      for (const auto& z : p["z"]) row.push_back(num(z));
      row.push_back(num(p["s"]));
      row.push_back(num(p["L"]));
      row.push_back(record.schema_version);
      append_row(out, row);
      break;
    }
    case RecordKind::solution: {
      append_row(out, {"s", "t_star", "a0", "a1", "a2", "a3", "a4", "a5", "a6", "L", "residual", "schema_version"});
      std::vector<std::string> row{num(p["s"]), num(p["t_star"])};
      for (const auto& a : p["monic"]) row.push_back(num(a));
      row.push_back(num(p["L"]));
      row.push_back(num(p["residual"]));
      row.push_back(record.schema_version);
      append_row(out, row);
      break;
    }
    case RecordKind::table: {
      append_row(out, {"t", "s", "L", "L_inf", "alpha", "beta", "gamma"});
      for (const auto& r : p["rows"])
        append_row(out, {num(r["t"]), num(r["s"]), num(r["L"]), num(r["L_inf"]), num(r["alpha"]), num(r["beta"]),
                         num(r["gamma"])});
      break;
    }
    default:
      throw std::invalid_argument("emit_csv: record kind has no CSV form");
  }
  return out;
}

}  // namespace zolotarev::io
