#include <doctest.h>

#include <cmath>

#include "zolotarev/alternation.hpp"
#include "zolotarev/sextic.hpp"

using namespace zolotarev;

TEST_CASE("chebyshev T6 alternates six times on [-1, 1]") {
  const auto prof = alternation_profile(chebyshev_t(6), -1.0, 1.0, 1.0, 1e-10);
  CHECK(prof.count == 6);
  REQUIRE(prof.points.size() == 7);
  for (std::size_t k = 0; k < prof.points.size(); ++k) {
    // extrema of T6 sit at -cos(k pi / 6)
    CHECK(prof.points[k] == doctest::Approx(-std::cos(M_PI * k / 6)).epsilon(1e-12));
    CHECK(prof.signs[k] == (k % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("sextic at t = -1/20 alternates at -1, z1..z4, 1") {
  const auto zs = build(-0.05);
  const auto prof = alternation_profile(zs.poly(), -1.0, 1.0, 1.0, 1e-8);
  CHECK(prof.count == 5);
  REQUIRE(prof.points.size() == 6);
  CHECK(prof.points.front() == -1.0);
  CHECK(prof.points.back() == 1.0);
  for (int k = 0; k < 4; ++k) CHECK(prof.points[k + 1] == doctest::Approx(zs.z(k)).epsilon(1e-10));
  CHECK(prof.signs == std::vector<int>{1, -1, 1, -1, 1, -1});
}

TEST_CASE("sextic at t = -1/20 alternates once on [alpha, beta]") {
  const auto zs = build(-0.05);
  const auto prof = alternation_profile(zs.poly(), zs.alpha, zs.beta, 1.0, 1e-8);
  CHECK(prof.count == 1);
  CHECK(prof.signs == std::vector<int>{-1, 1});
}

TEST_CASE("alternation count is invariant under scaling") {
  for (double c : {1.0, -1.0, 0.5, -0.5}) {
    for (unsigned n = 2; n <= 6; ++n) {
      const Poly p = c * chebyshev_t(n);
      const auto prof = alternation_profile(p, -1.0, 1.0, std::abs(c), 1e-10);
      CHECK(prof.count == int(n));
    }
  }
}

TEST_CASE("inconsistent norm is rejected") {
  CHECK_THROWS_AS(alternation_profile(chebyshev_t(6), -1.0, 1.0, 0.5, 1e-8), DegenerateNorm);
  CHECK_THROWS_AS(alternation_profile(chebyshev_t(6), -1.0, 1.0, 1.0 + 1e-5, 1e-8), DegenerateNorm);
  CHECK_NOTHROW(alternation_profile(chebyshev_t(6), -1.0, 1.0, 1.0 + 1e-7, 1e-8));
  CHECK_THROWS_AS(alternation_profile(chebyshev_t(6), 1.0, -1.0, 1.0, 1e-8), std::invalid_argument);
}

TEST_CASE("sup_norm uses refined extrema") {
  // max of x(1 - x) on [0, 1] is 1/4 at the interior critical point
  CHECK(sup_norm(Poly{0, 1, -1}, 0.0, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
}
