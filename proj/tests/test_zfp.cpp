#include <doctest.h>

#include <array>
#include <cmath>

#include "zolotarev/alternation.hpp"
#include "zolotarev/errors.hpp"
#include "zolotarev/zfp.hpp"

using namespace zolotarev;

namespace {
const double r301 = std::sqrt(301.0);
const double s_example1 = 424 / (147 * r301);
}  // namespace

TEST_CASE("t_polynomial at s = 1 is the printed octic up to sign") {
  const Poly printed{1, 436, -1748, 5272, -15632, 24592, -12752, -48416, 212272};
  const Poly ours = t_polynomial(1.0);
  REQUIRE(ours.degree() == 8);
  const double scale = ours[0] / printed[0];
  CHECK(scale == -1.0);
  for (int k = 0; k <= 8; ++k) CHECK(ours[k] == scale * printed[k]);
}

TEST_CASE("t_polynomial vanishes where s(t) = s") {
  const Poly p = t_polynomial(s_example1);
  CHECK(std::abs(eval(p, -0.05)) <= 1e-6 * p.coeffs().norm());
  CHECK(eval(t_polynomial(0.0), 0.0) == -1.0);
}

TEST_CASE("solve at s = 1") {
  const auto sol = solve(1.0);
  CHECK(std::abs(sol.t_star.value() + 0.002272) <= 1e-6);
  const std::array<double, 5> printed{-0.06207, -1.86731, 0.81036, 7.48972, -1.74828};
  for (int k = 0; k < 5; ++k) CHECK(std::abs(sol.monic[k] - printed[k]) <= 1e-5);
  CHECK(std::abs(sol.monic[5] + 6) <= 1e-9);
  CHECK(sol.monic[6] == 1.0);
  CHECK(sol.monic.degree() == 6);
  CHECK(std::abs(sol.L - 0.37758) <= 1e-5);
  CHECK(sol.residual <= 1e-12);
  CHECK(sol.octic_roots.size() == 1);
}

TEST_CASE("solve round-trips the t = -1/20 example") {
  const auto sol = solve(s_example1);
  CHECK(std::abs(sol.t_star.value() + 0.05) <= 1e-9);
}

TEST_CASE("solve rejects the improper regime") {
  CHECK_THROWS_AS(solve(0.05), OutOfRange);
  CHECK_THROWS_AS(solve(proper_threshold()), OutOfRange);
  CHECK_THROWS_AS(solve(-1.0), OutOfRange);
  CHECK_THROWS_AS(solve(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("solve reports no bracket beyond the clamped interval") {
  // s(-1e-9) is about 1521
  CHECK_THROWS_AS(solve(1e5), NoConvergence);
}

TEST_CASE("solve inverts s(t) on a 25-point grid") {
  for (int i = 0; i < 25; ++i) {
    const double t = -0.098 + (0.098 - 1e-3) * i / 24;
    const double s = s_of_t(ZParam<double>(t));
    const auto sol = solve(s);
    CAPTURE(t);
    CHECK(std::abs(sol.t_star.value() - t) <= 1e-8);
    REQUIRE(sol.octic_roots.size() == 1);
    CHECK(std::abs(sol.octic_roots[0] - sol.t_star.value()) <= 1e-9);
  }
}

TEST_CASE("monic solution has x^5 coefficient -6s and norm L") {
  for (double s : {0.08, 0.1, 0.16625464, 0.5, 1.0, 2.0, 10.0}) {
    const auto sol = solve(s);
    CAPTURE(s);
    CHECK(sol.monic[5] == doctest::Approx(-6 * s).epsilon(1e-9));
    CHECK(sup_norm(sol.monic, -1.0, 1.0) == doctest::Approx(sol.L).epsilon(1e-7));
    CHECK(eval(sol.monic, -1.0) == doctest::Approx(sol.L).epsilon(1e-8));
    CHECK(eval(sol.monic, 1.0) == doctest::Approx(-sol.L).epsilon(1e-8));
  }
}

TEST_CASE("bernstein_asymptotic") {
  CHECK(bernstein_asymptotic(6, s_example1) == doctest::Approx((848 + std::sqrt(1441805.0)) / (1568 * r301)).epsilon(1e-14));
  CHECK(std::abs(bernstein_asymptotic(6, s_example1) - 0.07531) <= 1e-5);
  CHECK(bernstein_asymptotic(6, 1.0) == doctest::Approx((6 + std::sqrt(37.0)) / 32).epsilon(1e-15));
  CHECK(bernstein_asymptotic(2, 0.0) == 0.5);
  CHECK_THROWS_AS(bernstein_asymptotic(1, 1.0), std::invalid_argument);
}

TEST_CASE("bernstein approximation is tight as t -> 0-") {
  for (double t : {-5e-3, -2e-3, -1e-3, -1e-4, -1e-5}) {
    const ZParam<double> p(t);
    const double ratio = bernstein_asymptotic(6, s_of_t(p)) / L_of_t(p);
    CAPTURE(t);
    CHECK(ratio >= 0.999);
    CHECK(ratio <= 1.001);
  }
}
