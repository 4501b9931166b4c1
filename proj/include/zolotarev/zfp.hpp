#pragma once

// Zolotarev's first problem for degree six: among monic sextics with x^5 coefficient
// -6s, find the one of least uniform norm on [-1, 1].

#include <vector>

#include "zolotarev/poly.hpp"
#include "zolotarev/sextic.hpp"

namespace zolotarev {

struct ZfpSolution {
  double s;
  ZParam<double> t_star;
  Poly monic;              // degree 6, leading coefficient exactly 1
  double L;                // least deviation, monic(-1) = L, monic(1) = -L
  double residual;         // |s(t*) - s|
  std::vector<double> octic_roots;  // roots of t_polynomial(s) in I6 that solve s(t) = s
};

/// Octic in t whose roots include every t with s(t)^2 = s^2:
/// 432 s^2 (t - 1)^5 t (1 + t + 7t^2) - (1 - 4t)^2 (1 + 6t + 12t^2 + 116t^3)^2.
Poly t_polynomial(double s);

/// Z_t / b_6(t).
Poly monic_rescaling(const ZolotarevSextic<double>& zs);

/// Real roots of t_polynomial(s) inside the clamped I6 that also satisfy s(t) = s.
std::vector<double> admissible_octic_roots(double s);

/// Solves s(t*) = s on I6 and returns the monic minimizer. Throws OutOfRange for
/// s <= 7 - 4 sqrt 3 and NoConvergence when no bracket exists on the clamped interval
/// or the octic cross-check disagrees with the bracketed root.
ZfpSolution solve(double s, double tol = 1e-12);

/// Bernstein's large-n approximation (n s + sqrt(n^2 s^2 + 1)) / 2^(n-1) to the least deviation.
double bernstein_asymptotic(int n, double s);

}  // namespace zolotarev
