#include "zolotarev/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "zolotarev/errors.hpp"

namespace zolotarev::verify {

namespace {

constexpr double kGammaExclusion = 1e-6;

double sq(double v) { return v * v; }

std::vector<double> uniform_grid(double a, double b, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  xs.back() = b;
  return xs;
}

int safe_count(const Poly& p, double a, double b, double tol) {
  try {
    return alternation_profile(p, a, b, 1.0, tol).count;
  } catch (const DegenerateNorm&) {
    return -1;
  }
}

}  // namespace

Tolerances tolerances_for(double t) {
  Tolerances tol;
  if (std::abs(t) < 5e-3) {
    tol.abel_pell *= 10;
    tol.ps *= 10;
    tol.product_form *= 10;
    tol.alternation *= 10;
  }
  return tol;
}

double abel_pell_residual(const Poly& z, double alpha, double beta, double gamma, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("abel_pell_residual: grid_size must be at least 2");
  const Poly dz = derivative(z);
  double worst = 0;
  for (double x : uniform_grid(-1.0, beta, grid_size)) {
    if (std::abs(x - gamma) < kGammaExclusion) continue;
    const double lhs = (1 - x * x) * (x - alpha) * (x - beta) * sq(eval(dz, x)) / (36 * sq(x - gamma));
    const double rhs = 1 - sq(eval(z, x));
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  // both sides multiplied by (x - gamma)^2 vanish at gamma
  const double at_gamma = (1 - gamma * gamma) * (gamma - alpha) * (gamma - beta) * sq(eval(dz, gamma));
  return std::max(worst, std::abs(at_gamma));
}

double abel_pell_residual(const ZolotarevSextic<double>& zs, int grid_size) {
  return abel_pell_residual(zs.poly(), zs.alpha, zs.beta, zs.gamma, grid_size);
}

double PsResiduals::max() const {
  return std::max(linear, *std::max_element(power.begin(), power.end()));
}

PsResiduals ps_system_residuals(const ZolotarevSextic<double>& zs) {
  const double t = zs.t.value();
  const auto& z = zs.z;
  const double linear_term = (1 - 4 * t) * horner(detail::kCubic, t) / (sqrt3<double>() * sq(t - 1) * omega(zs.t));
  PsResiduals r{};
  r.linear = std::abs(zs.alpha + zs.beta + 2 * z.sum() - linear_term);
  for (int k = 1; k <= 5; ++k) {
    const double alt = -std::pow(z(0), k) + std::pow(z(1), k) - std::pow(z(2), k) + std::pow(z(3), k);
    const double minus_one_k = (k % 2 == 0) ? 1.0 : -1.0;
    r.power[k - 1] = std::abs(-1 + minus_one_k + 2 * alt - std::pow(zs.alpha, k) + std::pow(zs.beta, k));
  }
  return r;
}

double product_form_first(const ZolotarevSextic<double>& zs, double x) {
  const double a = zs.alpha, b = zs.beta, z2 = zs.z(1), z4 = zs.z(3);
  const double den = (a + 1) * (a - b) * sq(a - z2) * sq(a - z4);
  return 1 - 2 * (x + 1) * (x - b) * sq(x - z2) * sq(x - z4) / den;
}

double product_form_second(const ZolotarevSextic<double>& zs, double x) {
  const double a = zs.alpha, z1 = zs.z(0), z3 = zs.z(2);
  const double den = (1 + a) * sq(1 + z1) * sq(1 + z3);
  return -1 + (x - a) * (x - 1) * sq(x - z1) * sq(x - z3) / den;
}

ProductFormDiff product_form_diff(const ZolotarevSextic<double>& zs, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("product_form_diff: grid_size must be at least 2");
  const Poly z = zs.poly();
  ProductFormDiff d{0, 0, 0};
  for (double x : uniform_grid(-1.0, zs.beta, grid_size)) {
    const double zx = eval(z, x);
    const double scale = std::max(1.0, std::abs(zx));
    d.first = std::max(d.first, std::abs(zx - product_form_first(zs, x)) / scale);
    d.second = std::max(d.second, std::abs(zx - product_form_second(zs, x)) / scale);
  }
  const double a = zs.alpha, b = zs.beta, z1 = zs.z(0), z3 = zs.z(2);
  const double den = (1 + a) * sq(1 + z1) * sq(1 + z3);
  const double rewritten = (b - 1) * (b - a) * sq(b - z1) * sq(b - z3) / 2;
  d.denominator_rel = std::abs(den - rewritten) / std::abs(den);
  return d;
}

LimitsReport limits_report(double eps) {
  const double lower = i6_lower<double>();
  if (!(eps > 0) || !(eps < -lower)) throw std::invalid_argument("limits_report: eps must lie in (0, |I6 lower end|)");
  const auto [minus_t5, shifted_t6] = limit_polynomials<double>();

  const ZParam<double> near_zero(-eps);
  const ZParam<double> near_lower(lower + eps);
  const Poly z0(Poly::Coeffs(coefficients(near_zero)));
  const Poly zl(Poly::Coeffs(coefficients(near_lower)));
  const auto cp0 = critical_points(near_zero);
  const auto cpl = critical_points(near_lower);

  LimitsReport r{};
  r.eps = eps;
  r.dist_minus_t5 = sup_norm(z0 - minus_t5, -1.0, 1.0);
  r.dist_shifted_t6 = sup_norm(zl - shifted_t6, -1.0, 1.0);
  r.alpha_near_zero = cp0.alpha;
  r.beta_near_zero = cp0.beta;
  r.alpha_near_lower = cpl.alpha;
  r.beta_near_lower = cpl.beta;

  const double root_eps = std::sqrt(eps);
  r.near_zero_poly = r.dist_minus_t5 <= 4.0 * root_eps;
  r.near_lower_poly = r.dist_shifted_t6 <= 25.0 * eps;
  r.diverging = r.alpha_near_zero >= 1.0 / (4.0 * root_eps) && r.beta_near_zero >= 1.0 / (4.0 * root_eps);
  r.endpoint_values = std::abs(r.alpha_near_lower - 1.0) <= 0.01 &&
                      std::abs(r.beta_near_lower - (15.0 - 8.0 * sqrt3<double>())) <= 0.01;
  r.passed = r.near_zero_poly && r.near_lower_poly && r.diverging && r.endpoint_values;
  return r;
}

bool limits_check(double eps) { return limits_report(eps).passed; }

Poly side_solution_polynomial(double t) {
  if (!(t > 1)) throw DomainError("side_solution_polynomial: t must exceed 1");
  const double t2 = t * t, t3 = t2 * t;
  const Poly inner{-1 + 3 * t2, -6 * t + 6 * t3, 3 - 15 * t2, 12 * t - 8 * t3, -3 + 12 * t2, -6 * t, 1.0};
  return (-1.0 / (2 * t3)) * inner;
}

AlternationProfile<double> side_solution_counterexample(double t) {
  return alternation_profile(side_solution_polynomial(t), -1.0, 1.0, 1.0, 1e-8);
}

VerificationReport verify(const ZolotarevSextic<double>& zs, int grid_size) {
  VerificationReport r;
  r.t = zs.t.value();
  r.grid_size = grid_size;
  r.tolerances = tolerances_for(r.t);
  r.relaxed = std::abs(r.t) < 5e-3;

  r.abel_pell_max_residual = abel_pell_residual(zs, grid_size);
  const PsResiduals ps = ps_system_residuals(zs);
  r.ps_linear_residual = ps.linear;
  r.ps_power_residuals = ps.power;
  const ProductFormDiff pf = product_form_diff(zs, grid_size);
  r.product_form_max_diff = {pf.first, pf.second};
  r.denominator_identity_rel = pf.denominator_rel;

  const Poly z = zs.poly();
  r.alternations_inner = safe_count(z, -1.0, 1.0, r.tolerances.alternation);
  r.alternations_outer = safe_count(z, zs.alpha, zs.beta, r.tolerances.alternation);
  r.limits_checked = limits_check(1e-5);

  const Tolerances& tol = r.tolerances;
  r.passed = r.abel_pell_max_residual <= tol.abel_pell && ps.max() <= tol.ps && pf.first <= tol.product_form &&
             pf.second <= tol.product_form && pf.denominator_rel <= 1e-9 && r.alternations_inner == 5 &&
             r.alternations_outer == 1;
  return r;
}

VerificationReport verify_candidate(const Poly& p) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  VerificationReport r;
  r.abel_pell_max_residual = nan;
  r.ps_linear_residual = nan;
  r.ps_power_residuals.fill(nan);
  r.product_form_max_diff.fill(nan);
  r.denominator_identity_rel = nan;
  r.alternations_inner = safe_count(p, -1.0, 1.0, r.tolerances.alternation);
  r.passed = r.alternations_inner == 5;
  return r;
}

}  // namespace zolotarev::verify
