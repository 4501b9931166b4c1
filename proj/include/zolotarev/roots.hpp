#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "zolotarev/errors.hpp"

namespace zolotarev::roots {

/// Bisection on a sign-changing bracket until the bracket is narrower than xtol.
template <typename Scalar, typename F>
Scalar bisect(F&& f, Scalar lo, Scalar hi, Scalar xtol) {
  Scalar flo = f(lo);
  if (flo == Scalar(0)) return lo;
  if (f(hi) == Scalar(0)) return hi;
  while (hi - lo > xtol) {
    const Scalar mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const Scalar fmid = f(mid);
    if (fmid == Scalar(0)) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

/// All sign changes of f on [a, b] found by a uniform scan with `samples` points,
/// each refined by bisection to xtol. Exact zeros at sample points are reported as is.
template <typename Scalar, typename F>
std::vector<Scalar> scan_roots(F&& f, Scalar a, Scalar b, int samples, Scalar xtol) {
  std::vector<Scalar> found;
  const Scalar h = (b - a) / Scalar(samples - 1);
  Scalar xprev = a;
  Scalar fprev = f(a);
  if (fprev == Scalar(0)) found.push_back(a);
  for (int i = 1; i < samples; ++i) {
    const Scalar x = (i == samples - 1) ? b : a + Scalar(i) * h;
    const Scalar fx = f(x);
    if (fx == Scalar(0)) {
      found.push_back(x);
    } else if (fprev != Scalar(0) && (fprev < 0) != (fx < 0)) {
      found.push_back(bisect(f, xprev, x, xtol));
    }
    xprev = x;
    fprev = fx;
  }
  return found;
}

/// Brent's method on a sign-changing bracket; converges to machine resolution when xtol is 0.
template <typename Scalar, typename F>
Scalar brent(F&& f, Scalar a, Scalar b, Scalar xtol, int max_iter = 200) {
  using std::abs;
  constexpr Scalar eps = std::numeric_limits<Scalar>::epsilon();
  Scalar fa = f(a), fb = f(b);
  if (fa == Scalar(0)) return a;
  if (fb == Scalar(0)) return b;
  if ((fa < 0) == (fb < 0)) throw NoConvergence("brent: root not bracketed");
  Scalar c = a, fc = fa, d = b - a, e = d;
  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb < 0) == (fc < 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (abs(fc) < abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const Scalar tol1 = 2 * eps * abs(b) + xtol / 2;
    const Scalar m = (c - b) / 2;
    if (abs(m) <= tol1 || fb == Scalar(0)) return b;
    if (abs(e) >= tol1 && abs(fa) > abs(fb)) {
      Scalar p, q, r;
      const Scalar s = fb / fa;
      if (a == c) {
        p = 2 * m * s;
        q = 1 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2 * m * q * (q - r) - (b - a) * (r - 1));
        q = (q - 1) * (r - 1) * (s - 1);
      }
      if (p > 0) q = -q; else p = -p;
      if (2 * p < std::min(3 * m * q - abs(tol1 * q), abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = d;
      }
    } else {
      d = m;
      e = d;
    }
    a = b;
    fa = fb;
    b += abs(d) > tol1 ? d : (m > 0 ? tol1 : -tol1);
    fb = f(b);
  }
  throw NoConvergence("brent: iteration cap reached");
}

}  // namespace zolotarev::roots
