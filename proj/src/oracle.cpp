#include "zolotarev/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "zolotarev/errors.hpp"

namespace zolotarev::oracle {

namespace {

// Unknowns of the primal: 5 quartic coefficients and the deviation d.
constexpr int kRows = 6;
using Vec = Eigen::Matrix<double, kRows, 1>;
using Mat = Eigen::Matrix<double, kRows, kRows>;

struct BasisEntry {
  int index;
  int sign;
};

// Dual column for |f(x) - q(x)| <= d on one side: [sign * x^k (k < 5), 1].
Vec dual_column(double x, int sign) {
  Vec a;
  double p = 1.0;
  for (int k = 0; k < kRows - 1; ++k, p *= x) a(k) = sign * p;
  a(kRows - 1) = 1.0;
  return a;
}

std::string with_s(const char* what, double s, int grid) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s (s = %.17g, grid = %d)", what, s, grid);
  return buf;
}

}  // namespace

Poly MinimaxResult::monic(double s) const {
  return Poly{0.0, 0.0, 0.0, 0.0, 0.0, -6.0 * s, 1.0} - q;
}

std::vector<double> chebyshev_extrema_grid(int n) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = -std::cos(std::numbers::pi * i / (n - 1));
  x.front() = -1.0;
  x.back() = 1.0;
  return x;
}

MinimaxResult minimax_fixed_leading(double s, int grid_size, int max_iterations) {
  if (!(s > 0)) throw std::invalid_argument("minimax_fixed_leading: s must be positive");
  if (grid_size < 257) throw std::invalid_argument("minimax_fixed_leading: grid_size must be at least 257");

  const std::vector<double> x = chebyshev_extrema_grid(grid_size);
  std::vector<double> f(grid_size);
  double f_scale = 0;
  for (int i = 0; i < grid_size; ++i) {
    const double xi = x[i];
    f[i] = std::pow(xi, 5) * (xi - 6.0 * s);
    f_scale = std::max(f_scale, std::abs(f[i]));
  }
  const double pricing_tol = 1e-14 * (1.0 + f_scale);

  // Start from the T5 extrema: the divided-difference weights over six points annihilate
  // every quartic and alternate in sign, which is a feasible dual basis.
  std::vector<BasisEntry> basis(kRows);
  for (int k = 0; k < kRows; ++k) {
    basis[k].index = static_cast<int>(std::lround(double(k) * (grid_size - 1) / (kRows - 1)));
  }
  for (int k = 0; k < kRows; ++k) {
    double w = 1.0;
    for (int m = 0; m < kRows; ++m)
      if (m != k) w *= x[basis[k].index] - x[basis[m].index];
    basis[k].sign = w > 0 ? 1 : -1;
  }

  const Vec rhs = Vec::Unit(kRows - 1);
  Eigen::Matrix<double, kRows - 1, 1> q;
  double d = 0;

  for (int iter = 0; iter < max_iterations; ++iter) {
    Mat B;
    Vec cost;
    for (int k = 0; k < kRows; ++k) {
      B.col(k) = dual_column(x[basis[k].index], basis[k].sign);
      cost(k) = basis[k].sign * f[basis[k].index];
    }
    const Eigen::PartialPivLU<Mat> lu(B);
    const Vec weights = lu.solve(rhs);
    const Vec y = B.transpose().partialPivLu().solve(cost);
    q = y.head<kRows - 1>();
    d = y(kRows - 1);

    // pricing: most violated constraint |f - q| <= d over the grid
    int entering = -1;
    double worst = pricing_tol;
    double entering_err = 0;
    for (int i = 0; i < grid_size; ++i) {
      double qi = q(4);
      for (int k = 3; k >= 0; --k) qi = qi * x[i] + q(k);
      const double err = f[i] - qi;
      if (std::abs(err) - d > worst) {
        worst = std::abs(err) - d;
        entering = i;
        entering_err = err;
      }
    }

    if (entering < 0) {
      MinimaxResult out;
      out.q = Poly(Poly::Coeffs(q));
      out.grid_size = grid_size;
      out.iterations = iter;
      for (int i = 0; i < grid_size; ++i) out.deviation = std::max(out.deviation, std::abs(f[i] - eval(out.q, x[i])));
      std::sort(basis.begin(), basis.end(), [](const BasisEntry& a, const BasisEntry& b) { return a.index < b.index; });
      for (const auto& e : basis) {
        out.reference.push_back(x[e.index]);
        out.reference_signs.push_back(e.sign);
      }
      for (std::size_t k = 1; k < basis.size(); ++k)
        if (basis[k].sign != basis[k - 1].sign) ++out.alternations;
      return out;
    }

    const int sign = entering_err > 0 ? 1 : -1;
    const Vec u = lu.solve(dual_column(x[entering], sign));
    int leaving = -1;
    double best_ratio = 0;
    for (int k = 0; k < kRows; ++k) {
      if (u(k) <= 1e-12) continue;
      const double ratio = std::max(weights(k), 0.0) / u(k);
      if (leaving < 0 || ratio < best_ratio - 1e-15 || (std::abs(ratio - best_ratio) <= 1e-15 && u(k) > u(leaving))) {
        leaving = k;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) throw NoConvergence(with_s("minimax_fixed_leading: unbounded pivot", s, grid_size));
    basis[leaving] = {entering, sign};
  }
  throw NoConvergence(with_s("minimax_fixed_leading: iteration cap reached", s, grid_size));
}

std::vector<std::pair<double, double>> deviation_curve(const std::vector<double>& s_values, int grid_size) {
  const double threshold = 7.0 - 4.0 * std::sqrt(3.0);
  std::vector<std::pair<double, double>> out;
  out.reserve(s_values.size());
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    const double s = s_values[i];
    const std::string where = "deviation_curve[" + std::to_string(i) + "]: ";
    if (!(s > threshold)) throw OutOfRange(where + "s is not above tan^2(pi/12)");
    try {
      out.emplace_back(s, minimax_fixed_leading(s, grid_size).deviation);
    } catch (const NoConvergence& e) {
      throw NoConvergence(where + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
  return out;
}

}  // namespace zolotarev::oracle
