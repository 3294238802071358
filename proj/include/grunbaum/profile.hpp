#pragma once

#include <vector>

#include "grunbaum/geometry.hpp"
#include "grunbaum/normalize.hpp"

namespace grunbaum {

/// Piecewise polynomial on [breakpoints.front(), breakpoints.back()],
/// extended by zero outside. Segment i stores ascending coefficients in
/// powers of (x - breakpoints[i]). Jumps at breakpoints are allowed.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial() = default;
  PiecewisePolynomial(std::vector<double> breakpoints, std::vector<Vector> coefficients);

  static PiecewisePolynomial constant(double lo, double hi, double value);
  /// (intercept + slope * x)^power on [lo, hi].
  static PiecewisePolynomial linear_power(double lo, double hi, double intercept,
                                          double slope, int power);

  bool is_zero() const { return coeffs_.empty(); }
  double lo() const { return breaks_.empty() ? 0.0 : breaks_.front(); }
  double hi() const { return breaks_.empty() ? 0.0 : breaks_.back(); }
  std::size_t segments() const { return coeffs_.size(); }
  const std::vector<double>& breakpoints() const { return breaks_; }
  const Vector& coefficients(std::size_t i) const { return coeffs_[i]; }
  int degree() const;

  double operator()(double x) const;

  /// f * indicator([lo, hi]).
  PiecewisePolynomial restricted(double lo, double hi) const;
  /// x * f(x).
  PiecewisePolynomial times_x() const;

  friend PiecewisePolynomial operator+(const PiecewisePolynomial& a,
                                       const PiecewisePolynomial& b);
  friend PiecewisePolynomial operator-(const PiecewisePolynomial& a,
                                       const PiecewisePolynomial& b);

 private:
  std::vector<double> breaks_;
  std::vector<Vector> coeffs_;
};

/// Evaluates ascending coefficients at local coordinate u.
double horner(const Vector& coeffs, double u);
/// Coefficients of p(u + delta).
Vector taylor_shift(const Vector& coeffs, double delta);

/// Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1].
std::pair<Vector, Vector> gauss_legendre(int m);

enum class Weight { one, x };

/// Exact for piecewise polynomials: each segment uses enough Gauss-Legendre
/// nodes for its degree (plus one when weighting by x).
double integrate(const PiecewisePolynomial& f, double lo, double hi, Weight w = Weight::one);
double integrate(const PiecewisePolynomial& f, Weight w = Weight::one);

/// Points where a segment polynomial changes sign, in absolute x, ascending.
std::vector<double> sign_changes(const PiecewisePolynomial& f);

/// Integral of |f| over the real line.
double integrate_abs(const PiecewisePolynomial& f);
/// Integral of |p - q| with both zero-extended.
double l1_distance(const PiecewisePolynomial& p, const PiecewisePolynomial& q);
/// Supremum of |f| (one-sided limits at jumps included).
double sup_abs(const PiecewisePolynomial& f);

/// x -> |K_x| = g(x)^(n-1) for a body sliced along its first axis.
struct SectionProfile {
  int dim = 0;
  PiecewisePolynomial measure;
  /// Measures at or below this are rounding noise; g treats them as 0.
  double floor = 0.0;

  double lo() const { return measure.lo(); }
  double hi() const { return measure.hi(); }
  /// g(x) = |K_x|^(1/(n-1)), zero outside the support.
  double g(double x) const;
};

/// Section profile of any body along its first axis: one polynomial of
/// degree <= n-1 per interval between vertex first-coordinates, recovered
/// from n Chebyshev-Lobatto samples.
SectionProfile build_profile(const ConvexBody& body);
SectionProfile build_profile(const NormalizedPair& pair);

/// q_n = (n / (n + 1))^n.
double grunbaum_constant(int n);

/// Parameters of the linear comparison profile c(x) = g0 (b' - x) / b'.
struct ConeProfiles {
  double a_prime = 0.0;
  double b_prime = 0.0;
  double g0 = 0.0;
  double k0 = 0.0;
  /// t^(1/n) - q_n^(1/n)
  double d = 0.0;
  /// g >= c on [0, v] and g <= c on [v, b].
  double v = 0.0;
};

ConeProfiles build_cone_profiles(const NormalizedPair& pair, const SectionProfile& profile);

/// c(x)^(n-1) on [a', b'].
PiecewisePolynomial cone_measure(const ConeProfiles& cones, int n);
inline double cone_value(const ConeProfiles& cones, double x) {
  if (x < cones.a_prime || x > cones.b_prime) return 0.0;
  return cones.g0 * (cones.b_prime - x) / cones.b_prime;
}

struct SingleCrossingBound {
  double xf_moment = 0.0;
  double l1 = 0.0;
  double bound = 0.0;  ///< 2 sqrt(M * xf_moment)
  bool bound_ok = false;
};

/// For f with zero integral that is <= 0 left of some point and >= 0 right of
/// it, with |f| <= M: checks int x f >= 0 and int |f| <= 2 sqrt(M int x f).
/// Throws PreconditionViolated naming the first failed hypothesis.
SingleCrossingBound lemma_single_crossing_bound(const PiecewisePolynomial& f, double M);

}  // namespace grunbaum
