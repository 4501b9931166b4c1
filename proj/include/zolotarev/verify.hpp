#pragma once

// Residual checks of the defining identities of a constructed sextic: the Abel-Pell
// equation, the Peherstorfer-Schiefermayr power-sum system, the two product
// representations, the boundary limits and the equioscillation structure.

#include <array>

#include "zolotarev/alternation.hpp"
#include "zolotarev/poly.hpp"
#include "zolotarev/sextic.hpp"

namespace zolotarev::verify {

struct Tolerances {
  double abel_pell = 1e-8;
  double ps = 1e-8;
  double product_form = 1e-9;
  double alternation = 1e-8;
};

/// Default tolerances, scaled by 10 for |t| < 5e-3 where alpha and beta diverge.
Tolerances tolerances_for(double t);

/// max over a uniform grid on [-1, beta] of
/// |(1 - x^2)(x - alpha)(x - beta) Z'(x)^2 / (36 (x - gamma)^2) - (1 - Z(x)^2)| / max(1, |1 - Z(x)^2|),
/// skipping |x - gamma| < 1e-6; at gamma itself the cleared form
/// (1 - x^2)(x - alpha)(x - beta) Z'(x)^2 is used instead.
///
/// The residual is absolute wherever |Z| <= 1 (all of [-1, 1] and [alpha, beta]) and relative on
/// (1, alpha), where |Z| reaches 1e3 for small |t| and binary64 cannot resolve 1 - Z^2 absolutely.
double abel_pell_residual(const Poly& z, double alpha, double beta, double gamma, int grid_size);
double abel_pell_residual(const ZolotarevSextic<double>& zs, int grid_size);

struct PsResiduals {
  double linear;
  std::array<double, 5> power;  // k = 1..5

  double max() const;
};

PsResiduals ps_system_residuals(const ZolotarevSextic<double>& zs);

/// 1 - 2(x+1)(x-beta)(x-z2)^2(x-z4)^2 / ((alpha+1)(alpha-beta)(alpha-z2)^2(alpha-z4)^2)
double product_form_first(const ZolotarevSextic<double>& zs, double x);
/// -1 + (x-alpha)(x-1)(x-z1)^2(x-z3)^2 / ((1+alpha)(1+z1)^2(1+z3)^2)
double product_form_second(const ZolotarevSextic<double>& zs, double x);

/// Grid maxima of |Z - form| / max(1, |Z|) on [-1, beta], same scaling as abel_pell_residual.
struct ProductFormDiff {
  double first;
  double second;
  double denominator_rel;  // second denominator vs (beta-1)(beta-alpha)(beta-z1)^2(beta-z3)^2 / 2
};

ProductFormDiff product_form_diff(const ZolotarevSextic<double>& zs, int grid_size);

struct LimitsReport {
  double eps;
  double dist_minus_t5;        // sup |Z_{-eps} + T5| on [-1, 1]
  double dist_shifted_t6;      // sup |Z_{lower+eps} - T6(affine)| on [-1, 1]
  double alpha_near_zero, beta_near_zero;
  double alpha_near_lower, beta_near_lower;
  bool near_zero_poly, near_lower_poly, diverging, endpoint_values;
  bool passed;
};

/// Limit behaviour at both ends of I6 at distance eps. Convergence to -T5 is O(sqrt eps)
/// with constant 2 sqrt 3, to the shifted T6 O(eps), and alpha, beta grow like
/// 1 / (2 sqrt(3 eps)); the checks use those rates.
LimitsReport limits_report(double eps);
bool limits_check(double eps);

/// -(1/(2t^3)) ((-1 + 3t^2) + (-6t + 6t^3)x + (3 - 15t^2)x^2 + (12t - 8t^3)x^3 + (-3 + 12t^2)x^4 - 6t x^5 + x^6),
/// the composition T3(Z2) mistaken for a sextic Zolotarev family. Throws DomainError for t <= 1.
Poly side_solution_polynomial(double t);
AlternationProfile<double> side_solution_counterexample(double t);

struct VerificationReport {
  double t = 0;
  int grid_size = 0;
  double abel_pell_max_residual = 0;
  double ps_linear_residual = 0;
  std::array<double, 5> ps_power_residuals{};
  std::array<double, 2> product_form_max_diff{};
  double denominator_identity_rel = 0;
  int alternations_inner = 0;
  int alternations_outer = 0;
  bool limits_checked = false;
  Tolerances tolerances;
  bool relaxed = false;
  bool passed = false;
};

/// Full suite on one constructed sextic.
VerificationReport verify(const ZolotarevSextic<double>& zs, int grid_size);

/// Equioscillation-only report for an arbitrary sextic candidate with norm 1 on [-1, 1];
/// residual fields are NaN and the outer alternation count is left at 0.
VerificationReport verify_candidate(const Poly& p);

}  // namespace zolotarev::verify
