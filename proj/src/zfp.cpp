#include "zolotarev/zfp.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "zolotarev/errors.hpp"
#include "zolotarev/roots.hpp"

namespace zolotarev {

namespace {

constexpr int kOcticScanIntervals = 2048;
constexpr double kCoarseBracket = 1e-3;
constexpr double kCrossCheckAbscissa = 1e-9;

std::string describe(const char* what, double value) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s (s = %.17g)", what, value);
  return buf;
}

double s_minus(double t, double s) { return s_of_t(ZParam<double>(t)) - s; }

}  // namespace

Poly t_polynomial(double s) {
  const Poly t_minus_1{-1.0, 1.0};
  const Poly t{0.0, 1.0};
  const Poly q7{1.0, 1.0, 7.0};
  const Poly one_minus_4t{1.0, -4.0};
  const Poly cubic{1.0, 6.0, 12.0, 116.0};
  return (432.0 * s * s) * (pow(t_minus_1, 5) * t * q7) - pow(one_minus_4t * cubic, 2);
}

Poly monic_rescaling(const ZolotarevSextic<double>& zs) {
  Poly::Coeffs c = zs.b / zs.b(6);
  c(6) = 1.0;
  return Poly(std::move(c));
}

std::vector<double> admissible_octic_roots(double s) {
  const Poly octic = t_polynomial(s);
  const double lo = ZParam<double>::min_value();
  const double hi = ZParam<double>::max_value();
  auto f = [&](double t) { return eval(octic, t); };
  std::vector<double> out;
  for (double r : roots::scan_roots(f, lo, hi, kOcticScanIntervals + 1, 0.0)) {
    if (std::abs(s_minus(r, s)) <= 1e-6 * std::max(1.0, s)) out.push_back(r);
  }
  return out;
}

ZfpSolution solve(double s, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("solve: tol must be positive");
  if (!(s > proper_threshold<double>())) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "s = %.17g is not above tan^2(pi/12) = %.17g; improper regime not handled", s,
                  proper_threshold<double>());
    throw OutOfRange(buf);
  }

  double lo = ZParam<double>::min_value();
  double hi = ZParam<double>::max_value();
  auto g = [s](double t) { return s_minus(t, s); };
  if (!(g(lo) < 0 && g(hi) > 0)) throw NoConvergence(describe("solve: s(t) - s has no sign change on I6", s));

  // s(t) is increasing on I6
  while (hi - lo > kCoarseBracket) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  const double t_star = roots::brent(g, lo, hi, 0.0);

  const ZParam<double> param(t_star);
  const double residual = std::abs(s_of_t(param) - s);
  if (residual > tol * std::max(1.0, s)) throw NoConvergence(describe("solve: residual above tolerance", s));

  std::vector<double> octic = admissible_octic_roots(s);
  if (octic.empty()) throw NoConvergence(describe("solve: octic cross-check found no root in I6", s));
  for (double r : octic) {
    if (std::abs(r - t_star) > kCrossCheckAbscissa)
      throw NoConvergence(describe("solve: octic cross-check found a second admissible root", s));
  }

  const auto zs = build(param);
  return {s, param, monic_rescaling(zs), zs.L, residual, std::move(octic)};
}

double bernstein_asymptotic(int n, double s) {
  if (n < 2 || !(s >= 0)) throw std::invalid_argument("bernstein_asymptotic: need n >= 2 and s >= 0");
  const double ns = n * s;
  return (ns + std::sqrt(ns * ns + 1.0)) / std::ldexp(1.0, n - 1);
}

}  // namespace zolotarev
