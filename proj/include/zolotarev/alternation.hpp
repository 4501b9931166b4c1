#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "zolotarev/errors.hpp"
#include "zolotarev/poly.hpp"
#include "zolotarev/roots.hpp"

namespace zolotarev {

/// Maximal alternating sequence of points where |p| reaches its norm on an interval.
template <typename Scalar>
struct AlternationProfile {
  std::vector<Scalar> points;
  std::vector<int> signs;
  int count = 0;  // number of alternations, points.size() - 1
};

inline constexpr int kExtremumScanSamples = 4096;
inline constexpr double kExtremumAbscissaTol = 1e-13;

/// Endpoints plus every interior root of p' in (a, b).
template <typename Scalar>
std::vector<Scalar> extremum_candidates(const DensePoly<Scalar>& p, Scalar a, Scalar b) {
  std::vector<Scalar> xs{a};
  const DensePoly<Scalar> dp = derivative(p);
  if (!dp.is_zero()) {
    auto f = [&](Scalar x) { return eval(dp, x); };
    for (Scalar r : roots::scan_roots(f, a, b, kExtremumScanSamples, Scalar(kExtremumAbscissaTol)))
      if (r > a && r < b) xs.push_back(r);
  }
  xs.push_back(b);
  return xs;
}

/// max |p| on [a, b].
template <typename Scalar>
Scalar sup_norm(const DensePoly<Scalar>& p, Scalar a, Scalar b) {
  Scalar best(0);
  for (Scalar x : extremum_candidates(p, a, b)) best = std::max(best, Scalar(std::abs(eval(p, x))));
  return best;
}

/// Locates the points of [a, b] where |p| equals `norm` within `tol` and keeps the
/// maximal sign-alternating subsequence. Throws DegenerateNorm when the true maximum of
/// |p| on [a, b] is further than 100 * tol from `norm`.
template <typename Scalar>
AlternationProfile<Scalar> alternation_profile(const DensePoly<Scalar>& p, Scalar a, Scalar b, Scalar norm,
                                               Scalar tol) {
  if (!(a < b) || !(norm > 0) || !(tol > 0))
    throw std::invalid_argument("alternation_profile: need a < b, norm > 0, tol > 0");

  const std::vector<Scalar> xs = extremum_candidates(p, a, b);
  Scalar peak(0);
  for (Scalar x : xs) peak = std::max(peak, Scalar(std::abs(eval(p, x))));
  if (std::abs(peak - norm) > 100 * tol) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "alternation_profile: max|p| = %.17g on [%.17g, %.17g] but norm = %.17g",
                  double(peak), double(a), double(b), double(norm));
    throw DegenerateNorm(buf);
  }

  AlternationProfile<Scalar> out;
  Scalar last_mag(0);
  for (Scalar x : xs) {
    const Scalar v = eval(p, x);
    if (std::abs(std::abs(v) - norm) > tol) continue;
    const int sign = v > 0 ? 1 : -1;
    if (!out.signs.empty() && out.signs.back() == sign) {
      // same-sign run: keep the larger excursion
      if (std::abs(v) > last_mag) {
        out.points.back() = x;
        last_mag = std::abs(v);
      }
      continue;
    }
    out.points.push_back(x);
    out.signs.push_back(sign);
    last_mag = std::abs(v);
  }
  out.count = out.points.empty() ? 0 : static_cast<int>(out.points.size()) - 1;
  return out;
}

}  // namespace zolotarev
