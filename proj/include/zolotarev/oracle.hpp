#pragma once

// Independent reference for the least deviation: the discrete best uniform approximation
// of f(x) = x^6 - 6 s x^5 by quartics on a Chebyshev-extrema grid, solved as a linear
// program. Nothing here touches the closed-form sextic family.

#include <utility>
#include <vector>

#include "zolotarev/poly.hpp"

namespace zolotarev::oracle {

struct MinimaxResult {
  Poly q;                        // best quartic approximant
  double deviation = 0;          // max over the grid of |f - q|
  int grid_size = 0;
  int iterations = 0;
  std::vector<double> reference;  // final basis abscissae, ascending
  std::vector<int> reference_signs;
  int alternations = 0;           // sign alternations of f - q across the reference

  /// x^6 - 6 s x^5 - q, the monic sextic of least grid deviation.
  Poly monic(double s) const;
};

/// Chebyshev-extrema grid -cos(pi i / (n - 1)), i = 0..n-1, ascending on [-1, 1].
std::vector<double> chebyshev_extrema_grid(int n);

/// min over quartics q of max_i |x_i^6 - 6 s x_i^5 - q(x_i)| on the grid, by a revised simplex
/// on the dual LP. Throws NoConvergence after `max_iterations` pivots.
MinimaxResult minimax_fixed_leading(double s, int grid_size, int max_iterations = 1000);

/// minimax_fixed_leading over a batch; order preserved, failures name the offending index.
std::vector<std::pair<double, double>> deviation_curve(const std::vector<double>& s_values, int grid_size);

}  // namespace zolotarev::oracle
