#pragma once

// Closed-form normalized proper Zolotarev polynomial of degree six.
//
// For t in I6 = ((5 - 3*sqrt(3))/2, 0) the polynomial Z_t(x) = sum_k b_k(t) x^k has
// uniform norm 1 on [-1, 1], Z_t(-1) = 1, Z_t(1) = -1, equioscillates at -1, z1..z4, 1
// and twice more at alpha < beta to the right of the interval, with a further critical
// point gamma in (1, alpha). Every quantity below is an explicit radical expression in t
// with omega(t) = sqrt((t - 1) t (1 + t + 7t^2)).
//
// Accuracy: the coefficients b_k stay finite as t -> 0-, but s, alpha and beta blow up
// like 1/sqrt|t|; for |t| < 1e-4 those three carry no accuracy guarantee.

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "zolotarev/errors.hpp"
#include "zolotarev/poly.hpp"

namespace zolotarev {

namespace detail {

template <typename Scalar>
Scalar ipow(Scalar x, int e) {
  Scalar r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// Integer bracket polynomials, ascending powers of t. All entries are exact in binary64.
inline constexpr std::array<double, 13> kB0{1, -6, 18, -16, -252, 2592, -5844, 20448, -15768, -219280, 942576,
                                            -893232, 2825968};
inline constexpr std::array<double, 13> kB1{1, 0, -12, 116, -756, 2520, 1212, -12744, 69840, -309280, 700704,
                                            -709008, 788848};
inline constexpr std::array<double, 13> kB2{13, -102, 390, -880, -288, 19296, -102792, 390816, -939024, 1167536,
                                            -258720, -339888, 2720848};
inline constexpr std::array<double, 10> kB3{5, 3, -6, 564, -3408, 13296, -35136, 107976, -130416, 243952};
inline constexpr std::array<double, 8> kB4{7, -25, 66, -146, -64, 2580, -6800, 26252};
inline constexpr std::array<double, 4> kB1Prefactor{-5, 6, -24, -4};
inline constexpr std::array<double, 4> kB3Den{1, 0, 6, 20};  // (1 + 2t)(1 - 2t + 10t^2)
inline constexpr std::array<double, 4> kCubic{1, 6, 12, 116};
inline constexpr std::array<double, 3> kQ7{1, 1, 7};
inline constexpr std::array<double, 3> kQ10{1, -2, 10};
inline constexpr std::array<double, 4> kGamma{5, -6, 24, 4};
inline constexpr std::array<double, 3> kInnerA{1, 1, 16};
inline constexpr std::array<double, 5> kInnerQ{5, -26, 102, -200, 524};

}  // namespace detail

template <typename Scalar = double>
Scalar sqrt3() {
  using std::sqrt;
  return sqrt(Scalar(3));
}

/// Left end of I6, (5 - 3 sqrt 3) / 2 = -0.0980762...
template <typename Scalar = double>
Scalar i6_lower() {
  return (Scalar(5) - 3 * sqrt3<Scalar>()) / 2;
}

/// tan^2(pi/12) = 7 - 4 sqrt 3, the proper/improper threshold for s.
template <typename Scalar = double>
Scalar proper_threshold() {
  return Scalar(7) - 4 * sqrt3<Scalar>();
}

/// Parameter t of the sextic family, validated against the clamped numeric domain
/// [i6_lower + 1e-9, -1e-9].
template <typename Scalar = double>
class ZParam {
 public:
  static constexpr double kMargin = 1e-9;

  static Scalar min_value() { return i6_lower<Scalar>() + Scalar(kMargin); }
  static Scalar max_value() { return Scalar(-kMargin); }

  static bool admissible(Scalar t) { return t >= min_value() && t <= max_value(); }

  explicit ZParam(Scalar t) : t_(t) {
    using std::abs;
    if (!admissible(t)) {
      char buf[200];
      std::snprintf(buf, sizeof buf, "t = %.17g outside the parameter interval [%.17g, %.17g] (open interval I6 = (%.17g, 0))",
                    double(t), double(min_value()), double(max_value()), double(i6_lower<Scalar>()));
      throw DomainError(buf);
    }
    // (1 + 2t) >= 6 - 3 sqrt 3, (1 - 4t) >= 1, (1 - 2t + 10t^2) >= 1 on I6
    if (!(1 + 2 * t > Scalar(0.8)) || !(1 - 4 * t >= Scalar(1)) || !(horner(detail::kQ10, t) >= Scalar(1)))
      throw DomainError("ZParam: denominator factor too close to zero");
  }

  Scalar value() const { return t_; }
  operator Scalar() const { return t_; }

 private:
  Scalar t_;
};

/// sqrt((t - 1) t (1 + t + 7t^2)); throws DomainError unless the radicand is positive.
template <typename Scalar>
Scalar omega(Scalar t) {
  using std::sqrt;
  const Scalar radicand = (t - 1) * t * horner(detail::kQ7, t);
  if (!(radicand > 0)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "omega: radicand %.17g is not positive at t = %.17g", double(radicand), double(t));
    throw DomainError(buf);
  }
  return sqrt(radicand);
}

template <typename Scalar>
Scalar omega(const ZParam<Scalar>& t) {
  return omega(t.value());
}

template <typename Scalar>
using SexticCoeffs = Eigen::Matrix<Scalar, 7, 1>;

/// b_0..b_6 of Z_t.
template <typename Scalar>
SexticCoeffs<Scalar> coefficients(const ZParam<Scalar>& param) {
  using detail::ipow;
  const Scalar t = param.value();
  const Scalar w = omega(param);
  const Scalar r3 = sqrt3<Scalar>();
  const Scalar p2t = 1 + 2 * t;
  const Scalar m4t = 1 - 4 * t;
  const Scalar tm1 = t - 1;
  const Scalar q7 = horner(detail::kQ7, t);
  const Scalar q10 = horner(detail::kQ10, t);

  // common denominator (1 + 2t)^5 (-1 + 4t)^3 (1 - 2t + 10t^2)^4
  const Scalar den_odd = ipow(p2t, 5) * ipow(-m4t, 3) * ipow(q10, 4);
  const Scalar den_even = ipow(p2t, 5) * ipow(m4t, 2) * ipow(q10, 4);

  SexticCoeffs<Scalar> b;
  b(0) = 2 * r3 * tm1 * tm1 * w / den_odd * horner(detail::kB0, t);
  b(1) = horner(detail::kB1Prefactor, t) / den_even * horner(detail::kB1, t);
  b(2) = 2 * r3 * tm1 * tm1 * w / (ipow(p2t, 5) * ipow(m4t, 3) * ipow(q10, 4)) * horner(detail::kB2, t);
  b(3) = -4 * ipow(tm1, 5) / (m4t * m4t * ipow(horner(detail::kB3Den, t), 4)) * horner(detail::kB3, t);
  b(4) = 8 * r3 * ipow(-tm1, 7) * w / den_odd * horner(detail::kB4, t);
  b(5) = -16 * ipow(tm1, 10) * q7 * horner(detail::kCubic, t) / den_even;
  b(6) = -32 * r3 * ipow(tm1, 12) * q7 * w / den_odd;
  return b;
}

template <typename Scalar>
struct CriticalPoints {
  Scalar gamma;  // Z'(gamma) = 0
  Scalar alpha;  // Z(alpha) = -1
  Scalar beta;   // Z(beta) = +1
};

template <typename Scalar>
CriticalPoints<Scalar> critical_points(const ZParam<Scalar>& param) {
  const Scalar t = param.value();
  const Scalar w = omega(param);
  const Scalar r3 = sqrt3<Scalar>();
  const Scalar tm1sq = (t - 1) * (t - 1);
  const Scalar m4t = 1 - 4 * t;

  const Scalar gamma = m4t * horner(detail::kGamma, t) / (12 * r3 * tm1sq * w);
  const Scalar mid = (1 + 2 * t) * m4t * horner(detail::kQ10, t) / (2 * r3 * tm1sq * w);
  const Scalar half_gap = 9 * t * t / tm1sq;
  return {gamma, mid - half_gap, mid + half_gap};
}

/// z1 < z2 < z3 < z4, the interior equioscillation points on (-1, 1).
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 1> inner_equioscillation_points(const ZParam<Scalar>& param) {
  using std::sqrt;
  const Scalar t = param.value();
  const Scalar w = omega(param);
  const Scalar r3 = sqrt3<Scalar>();
  const Scalar p2t = 1 + 2 * t;
  const Scalar tm1sq4 = 4 * (t - 1) * (t - 1);
  const Scalar q7 = horner(detail::kQ7, t);

  const Scalar shift = r3 / w * t * horner(detail::kInnerA, t);
  const Scalar a = (4 * t - 1) * (p2t - shift) / tm1sq4;
  const Scalar c = (1 - 4 * t) * (p2t + shift) / tm1sq4;

  const Scalar cross = 2 * r3 * w * p2t * (4 * t - 1);
  const Scalar quartic = horner(detail::kInnerQ, t);
  auto root = [&](Scalar radicand, const char* name) {
    if (radicand < Scalar(-1e-12)) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "inner radicand %s = %.17g is negative at t = %.17g", name, double(radicand),
                    double(t));
      throw DomainError(buf);
    }
    return radicand > 0 ? sqrt(radicand) : Scalar(0);
  };
  const Scalar bb = p2t / tm1sq4 * root((cross + quartic) / q7, "B");
  const Scalar dd = p2t / tm1sq4 * root((-cross + quartic) / q7, "D");

  Eigen::Matrix<Scalar, 4, 1> z;
  z << a - bb, c - dd, a + bb, c + dd;
  return z;
}

/// s(t): the monic rescaling of Z_t has x^5 coefficient -6 s(t).
template <typename Scalar>
Scalar s_of_t(const ZParam<Scalar>& param) {
  using detail::ipow;
  const Scalar t = param.value();
  return (1 - 4 * t) * horner(detail::kCubic, t) * omega(param) /
         (12 * sqrt3<Scalar>() * ipow(t - 1, 3) * t * horner(detail::kQ7, t));
}

/// L(t): least uniform deviation of the monic rescaling, equal to 1 / b_6(t).
template <typename Scalar>
Scalar L_of_t(const ZParam<Scalar>& param) {
  using detail::ipow;
  const Scalar t = param.value();
  const Scalar q7 = horner(detail::kQ7, t);
  return ipow(1 - 4 * t, 3) * ipow(1 + 2 * t, 5) * ipow(horner(detail::kQ10, t), 4) * omega(param) /
         (32 * sqrt3<Scalar>() * ipow(t - 1, 13) * t * q7 * q7);
}

/// Full construction record for one parameter value.
template <typename Scalar = double>
struct ZolotarevSextic {
  ZParam<Scalar> t;
  SexticCoeffs<Scalar> b;
  Scalar gamma;
  Scalar alpha;
  Scalar beta;
  Eigen::Matrix<Scalar, 4, 1> z;
  Scalar s;
  Scalar L;

  DensePoly<Scalar> poly() const { return DensePoly<Scalar>(typename DensePoly<Scalar>::Coeffs(b)); }
};

template <typename Scalar>
ZolotarevSextic<Scalar> build(const ZParam<Scalar>& t) {
  const auto cp = critical_points(t);
  ZolotarevSextic<Scalar> zs{t, coefficients(t), cp.gamma, cp.alpha, cp.beta, inner_equioscillation_points(t),
                             s_of_t(t), L_of_t(t)};
  const auto& z = zs.z;
  const bool ordered = Scalar(1) < zs.gamma && zs.gamma < zs.alpha && zs.alpha < zs.beta && Scalar(-1) < z(0) &&
                       z(0) < z(1) && z(1) < z(2) && z(2) < z(3) && z(3) < Scalar(1);
  if (!ordered) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "build: critical point ordering lost at t = %.17g", double(t.value()));
    throw DomainError(buf);
  }
  return zs;
}

template <typename Scalar = double>
ZolotarevSextic<Scalar> build(Scalar t) {
  return build(ZParam<Scalar>(t));
}

/// Boundary members of the family: -T5 (t -> 0-) and T6((x + 1)(2 + sqrt 3)/4 - 1)
/// (t -> (5 - 3 sqrt 3)/2).
template <typename Scalar = double>
std::pair<DensePoly<Scalar>, DensePoly<Scalar>> limit_polynomials() {
  const Scalar k = (2 + sqrt3<Scalar>()) / 4;
  const DensePoly<Scalar> affine{k - 1, k};
  return {-chebyshev_t<Scalar>(5), compose(chebyshev_t<Scalar>(6), affine)};
}

}  // namespace zolotarev
