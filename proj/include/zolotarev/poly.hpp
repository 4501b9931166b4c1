#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <vector>

namespace zolotarev {

/// Real polynomial with dense ascending coefficient storage: coeffs()[k] multiplies x^k.
///
/// Trailing zero coefficients are trimmed on construction, so the stored vector
/// is never empty and only the zero polynomial has a zero leading entry.
template <typename Scalar>
class DensePoly {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  DensePoly() : coeffs_(Coeffs::Zero(1)) {}

  explicit DensePoly(Coeffs coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  DensePoly(std::initializer_list<Scalar> coeffs)
      : coeffs_(Eigen::Map<const Coeffs>(coeffs.begin(), static_cast<Eigen::Index>(coeffs.size()))) {
    trim();
  }

  static DensePoly monomial(Eigen::Index k, Scalar c = Scalar(1)) {
    Coeffs v = Coeffs::Zero(k + 1);
    v(k) = c;
    return DensePoly(std::move(v));
  }

  const Coeffs& coeffs() const { return coeffs_; }
  Eigen::Index size() const { return coeffs_.size(); }
  Eigen::Index degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_(0) == Scalar(0); }
  Scalar leading() const { return coeffs_(coeffs_.size() - 1); }

  /// Coefficient of x^k; zero past the degree.
  Scalar operator[](Eigen::Index k) const { return k < coeffs_.size() ? coeffs_(k) : Scalar(0); }

  std::vector<Scalar> to_vector() const { return {coeffs_.data(), coeffs_.data() + coeffs_.size()}; }

  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    if (coeffs_.size() == 0) {
      coeffs_ = Coeffs::Zero(1);
      return;
    }
    Eigen::Index n = coeffs_.size();
    while (n > 1 && coeffs_(n - 1) == Scalar(0)) --n;
    coeffs_.conservativeResize(n);
  }

  Coeffs coeffs_;
};

using Poly = DensePoly<double>;

/// Horner evaluation.
template <typename Scalar, typename X>
X eval(const DensePoly<Scalar>& p, const X& x) {
  const auto& c = p.coeffs();
  X acc = X(c(c.size() - 1));
  for (Eigen::Index k = c.size() - 2; k >= 0; --k) acc = acc * x + X(c(k));
  return acc;
}

/// Horner evaluation of a fixed coefficient table, lowest degree first.
template <typename X, typename Table>
X horner(const Table& table, const X& x) {
  X acc(0);
  for (auto it = std::rbegin(table); it != std::rend(table); ++it) acc = acc * x + X(*it);
  return acc;
}

template <typename Scalar>
DensePoly<Scalar> derivative(const DensePoly<Scalar>& p) {
  if (p.degree() == 0) return DensePoly<Scalar>();
  typename DensePoly<Scalar>::Coeffs d(p.degree());
  for (Eigen::Index k = 0; k < d.size(); ++k) d(k) = Scalar(k + 1) * p.coeffs()(k + 1);
  return DensePoly<Scalar>(std::move(d));
}

template <typename Scalar>
DensePoly<Scalar> operator+(const DensePoly<Scalar>& a, const DensePoly<Scalar>& b) {
  typename DensePoly<Scalar>::Coeffs c = DensePoly<Scalar>::Coeffs::Zero(std::max(a.size(), b.size()));
  c.head(a.size()) += a.coeffs();
  c.head(b.size()) += b.coeffs();
  return DensePoly<Scalar>(std::move(c));
}

template <typename Scalar>
DensePoly<Scalar> operator*(Scalar s, const DensePoly<Scalar>& p) {
  return DensePoly<Scalar>(typename DensePoly<Scalar>::Coeffs(s * p.coeffs()));
}

template <typename Scalar>
DensePoly<Scalar> operator-(const DensePoly<Scalar>& p) {
  return Scalar(-1) * p;
}

template <typename Scalar>
DensePoly<Scalar> operator-(const DensePoly<Scalar>& a, const DensePoly<Scalar>& b) {
  return a + (-b);
}

template <typename Scalar>
DensePoly<Scalar> operator*(const DensePoly<Scalar>& a, const DensePoly<Scalar>& b) {
  typename DensePoly<Scalar>::Coeffs c = DensePoly<Scalar>::Coeffs::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i) c.segment(i, b.size()) += a.coeffs()(i) * b.coeffs();
  return DensePoly<Scalar>(std::move(c));
}

template <typename Scalar>
DensePoly<Scalar> pow(const DensePoly<Scalar>& p, unsigned e) {
  DensePoly<Scalar> result{Scalar(1)};
  for (unsigned i = 0; i < e; ++i) result = result * p;
  return result;
}

/// p(q(x)), expanded by Horner in the polynomial ring.
template <typename Scalar>
DensePoly<Scalar> compose(const DensePoly<Scalar>& p, const DensePoly<Scalar>& q) {
  const auto& c = p.coeffs();
  DensePoly<Scalar> acc{c(c.size() - 1)};
  for (Eigen::Index k = c.size() - 2; k >= 0; --k) acc = acc * q + DensePoly<Scalar>{c(k)};
  return acc;
}

/// p(-x).
template <typename Scalar>
DensePoly<Scalar> reflect(const DensePoly<Scalar>& p) {
  typename DensePoly<Scalar>::Coeffs c = p.coeffs();
  for (Eigen::Index k = 1; k < c.size(); k += 2) c(k) = -c(k);
  return DensePoly<Scalar>(std::move(c));
}

/// Chebyshev polynomial of the first kind T_n (uniform norm 1 on [-1,1]).
template <typename Scalar = double>
DensePoly<Scalar> chebyshev_t(unsigned n) {
  DensePoly<Scalar> prev{Scalar(1)};
  if (n == 0) return prev;
  DensePoly<Scalar> cur{Scalar(0), Scalar(1)};
  const DensePoly<Scalar> two_x{Scalar(0), Scalar(2)};
  for (unsigned k = 1; k < n; ++k) {
    DensePoly<Scalar> next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace zolotarev
