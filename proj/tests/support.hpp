#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "grunbaum/geometry.hpp"

namespace testing {

using grunbaum::ConvexBody;
using grunbaum::Matrix;
using grunbaum::Vector;

inline ConvexBody box(const Vector& lo, const Vector& hi) {
  const int n = static_cast<int>(lo.size());
  Matrix pts(n, 1 << n);
  for (int mask = 0; mask < (1 << n); ++mask)
    for (int i = 0; i < n; ++i) pts(i, mask) = (mask >> i) & 1 ? hi(i) : lo(i);
  return ConvexBody(n, pts);
}

inline ConvexBody square(double half = 1.0) {
  return box(Vector::Constant(2, -half), Vector::Constant(2, half));
}

/// Standard simplex conv(0, e_1, ..., e_n).
inline ConvexBody standard_simplex(int n) {
  Matrix pts = Matrix::Zero(n, n + 1);
  pts.rightCols(n).setIdentity();
  return ConvexBody(n, pts);
}

inline ConvexBody random_cloud(int n, int k, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix pts(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) pts(i, j) = normal(rng);
  return ConvexBody(n, pts);
}

inline grunbaum::AffineMap random_affine(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  grunbaum::AffineMap m{Matrix(n, n), Vector(n)};
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.linear(i, j) = u(rng) + (i == j ? 1.5 : 0.0);
      m.translation(i) = 3.0 * u(rng);
    }
  } while (std::abs(m.linear.determinant()) < 0.2);
  return m;
}

/// Adaptive Simpson; independent of the Gauss-Legendre code under test.
inline double simpson(const std::function<double(double)>& f, double lo, double hi,
                      double tol = 1e-12, int depth = 50) {
  std::function<double(double, double, double, double, double, double, double, int)> rec =
      [&](double a, double b, double fa, double fm, double fb, double whole, double eps,
          int d) -> double {
    const double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (d <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
      return left + right + (left + right - whole) / 15.0;
    return rec(a, m, fa, flm, fm, left, eps / 2, d - 1) + rec(m, b, fm, frm, fb, right, eps / 2, d - 1);
  };
  const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
  return rec(lo, hi, fa, fm, fb, (hi - lo) / 6.0 * (fa + 4.0 * fm + fb), tol, depth);
}

/// Simpson over each interval between consecutive `cuts`, so kinks and jumps
/// at known points do not slow it down.
inline double simpson_pieces(const std::function<double(double)>& f, std::vector<double> cuts,
                             double tol = 1e-12) {
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (b - a <= 0.0) continue;
    // Stay strictly inside so one-sided values at jumps do not leak in.
    const double pad = 1e-15 * std::max(1.0, std::abs(a) + std::abs(b));
    total += simpson(f, a + pad, b - pad, tol);
  }
  return total;
}

}  // namespace testing
