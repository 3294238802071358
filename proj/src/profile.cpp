#include "grunbaum/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace grunbaum {

namespace {

constexpr double kRootTol = 1e-12;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<double> merged_breaks(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs)
    if (out.empty() || x - out.back() > 1e-13 * std::max(1.0, std::abs(x))) out.push_back(x);
  return out;
}

// Segment of f covering the open interval around `mid`, or -1.
long segment_at(const std::vector<double>& breaks, double mid) {
  if (breaks.size() < 2 || mid < breaks.front() || mid > breaks.back()) return -1;
  auto it = std::upper_bound(breaks.begin(), breaks.end(), mid);
  long idx = static_cast<long>(it - breaks.begin()) - 1;
  return std::min<long>(idx, static_cast<long>(breaks.size()) - 2);
}

Vector local_coeffs(const PiecewisePolynomial& f, double left, double mid) {
  const long s = segment_at(f.breakpoints(), mid);
  if (s < 0) return Vector::Zero(1);
  return taylor_shift(f.coefficients(s), left - f.breakpoints()[s]);
}

template <typename Op>
PiecewisePolynomial combine(const PiecewisePolynomial& a, const PiecewisePolynomial& b, Op op) {
  if (a.is_zero() && b.is_zero()) return {};
  std::vector<double> xs = a.breakpoints();
  xs.insert(xs.end(), b.breakpoints().begin(), b.breakpoints().end());
  std::vector<double> breaks = merged_breaks(std::move(xs));
  std::vector<Vector> coeffs;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double mid = 0.5 * (breaks[i] + breaks[i + 1]);
    Vector ca = local_coeffs(a, breaks[i], mid);
    Vector cb = local_coeffs(b, breaks[i], mid);
    const Eigen::Index len = std::max(ca.size(), cb.size());
    ca.conservativeResizeLike(Vector::Zero(len));
    cb.conservativeResizeLike(Vector::Zero(len));
    coeffs.push_back(op(ca, cb));
  }
  return {std::move(breaks), std::move(coeffs)};
}

// Real roots of sum q_k u^k strictly inside (0, 1), unsorted, unpolished.
std::vector<double> candidate_roots(const Vector& q) {
  const double scale = q.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) return {};
  int deg = static_cast<int>(q.size()) - 1;
  while (deg > 0 && std::abs(q(deg)) <= 1e-14 * scale) --deg;
  std::vector<double> out;
  if (deg == 0) return out;
  if (deg == 1) {
    out.push_back(-q(0) / q(1));
  } else {
    Matrix companion = Matrix::Zero(deg, deg);
    companion.block(1, 0, deg - 1, deg - 1).setIdentity();
    for (int k = 0; k < deg; ++k) companion(k, deg - 1) = -q(k) / q(deg);
    Eigen::EigenSolver<Matrix> es(companion, false);
    for (const auto& z : es.eigenvalues())
      if (std::abs(z.imag()) <= 1e-7 * (1.0 + std::abs(z.real()))) out.push_back(z.real());
  }
  std::erase_if(out, [](double u) { return !(u > 0.0 && u < 1.0); });
  return out;
}

Vector scaled(const Vector& c, double width) {
  Vector q = c;
  double w = 1.0;
  for (Eigen::Index k = 0; k < q.size(); ++k, w *= width) q(k) *= w;
  return q;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Sign-change points of the polynomial on (0, width), local coordinates.
std::vector<double> segment_sign_changes(const Vector& c, double width) {
  if (!(width > 0.0)) return {};
  const Vector q = scaled(c, width);
  std::vector<double> cuts = candidate_roots(q);
  // Uniform guard cuts catch roots the eigenvalue filter may drop.
  for (int k = 1; k < 8; ++k) cuts.push_back(k / 8.0);
  cuts.push_back(0.0);
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<double> mids;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) mids.push_back(0.5 * (cuts[i] + cuts[i + 1]));
  std::vector<double> out;
  int last_sign = 0;
  double last_mid = 0.0;
  for (double m : mids) {
    const int s = sign_of(horner(q, m));
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      double lo = last_mid, hi = m;
      while ((hi - lo) * width > kRootTol) {
        const double mid = 0.5 * (lo + hi);
        if (sign_of(horner(q, mid)) == last_sign) lo = mid;
        else hi = mid;
      }
      out.push_back(0.5 * (lo + hi) * width);
    }
    last_sign = s;
    last_mid = m;
  }
  return out;
}

struct Piece {
  double lo, hi;
  Vector coeffs;  // in powers of (x - lo)
};

std::vector<Piece> sign_constant_pieces(const PiecewisePolynomial& f) {
  std::vector<Piece> out;
  for (std::size_t s = 0; s < f.segments(); ++s) {
    const double left = f.breakpoints()[s];
    const double right = f.breakpoints()[s + 1];
    const Vector& c = f.coefficients(s);
    std::vector<double> cuts{0.0};
    for (double r : segment_sign_changes(c, right - left)) cuts.push_back(r);
    cuts.push_back(right - left);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      out.push_back({left + cuts[i], left + cuts[i + 1], taylor_shift(c, cuts[i])});
  }
  return out;
}

// Extreme values of a polynomial on [0, width].
std::pair<double, double> poly_range(const Vector& c, double width) {
  double lo = std::min(horner(c, 0.0), horner(c, width));
  double hi = std::max(horner(c, 0.0), horner(c, width));
  if (c.size() > 2 && width > 0.0) {
    Vector deriv(c.size() - 1);
    for (Eigen::Index k = 1; k < c.size(); ++k) deriv(k - 1) = k * c(k);
    for (double u : candidate_roots(scaled(deriv, width))) {
      const double v = horner(c, u * width);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return {lo, hi};
}

}  // namespace

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breakpoints,
                                         std::vector<Vector> coefficients)
    : breaks_(std::move(breakpoints)), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) {
    breaks_.clear();
    return;
  }
  if (breaks_.size() != coeffs_.size() + 1)
    throw InputError("piecewise polynomial needs one more breakpoint than segments");
  if (!std::is_sorted(breaks_.begin(), breaks_.end()))
    throw InputError("piecewise polynomial breakpoints must be increasing");
}

PiecewisePolynomial PiecewisePolynomial::constant(double lo, double hi, double value) {
  return {{lo, hi}, {Vector::Constant(1, value)}};
}

PiecewisePolynomial PiecewisePolynomial::linear_power(double lo, double hi, double intercept,
                                                      double slope, int power) {
  const double base = intercept + slope * lo;
  Vector c(power + 1);
  for (int j = 0; j <= power; ++j)
    c(j) = binomial(power, j) * std::pow(base, power - j) * std::pow(slope, j);
  return {{lo, hi}, {std::move(c)}};
}

int PiecewisePolynomial::degree() const {
  int deg = 0;
  for (const auto& c : coeffs_) deg = std::max(deg, static_cast<int>(c.size()) - 1);
  return deg;
}

double PiecewisePolynomial::operator()(double x) const {
  const long s = segment_at(breaks_, x);
  if (s < 0) return 0.0;
  return horner(coeffs_[s], x - breaks_[s]);
}

PiecewisePolynomial PiecewisePolynomial::restricted(double lo, double hi) const {
  if (is_zero() || hi <= lo) return {};
  return combine(*this, constant(lo, hi, 1.0), [](const Vector& a, const Vector& b) {
    return Vector(b(0) != 0.0 ? a : Vector::Zero(a.size()));
  });
}

PiecewisePolynomial PiecewisePolynomial::times_x() const {
  std::vector<Vector> out;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    const Vector& c = coeffs_[s];
    Vector r = Vector::Zero(c.size() + 1);
    r.head(c.size()) = breaks_[s] * c;  // x = left + u
    r.tail(c.size()) += c;
    out.push_back(std::move(r));
  }
  return {breaks_, std::move(out)};
}

PiecewisePolynomial operator+(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  return combine(a, b, [](const Vector& x, const Vector& y) { return Vector(x + y); });
}

PiecewisePolynomial operator-(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  return combine(a, b, [](const Vector& x, const Vector& y) { return Vector(x - y); });
}

double horner(const Vector& coeffs, double u) {
  double v = 0.0;
  for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k) v = v * u + coeffs(k);
  return v;
}

Vector taylor_shift(const Vector& coeffs, double delta) {
  if (delta == 0.0) return coeffs;
  const Eigen::Index n = coeffs.size();
  Vector out = Vector::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double p = 1.0;
    for (Eigen::Index j = k; j >= 0; --j) {
      out(j) += coeffs(k) * binomial(static_cast<int>(k), static_cast<int>(j)) * p;
      p *= delta;
    }
  }
  return out;
}

std::pair<Vector, Vector> gauss_legendre(int m) {
  // Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix.
  Matrix jacobi = Matrix::Zero(m, m);
  for (int k = 1; k < m; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(jacobi);
  Vector weights = 2.0 * es.eigenvectors().row(0).transpose().array().square();
  return {es.eigenvalues(), std::move(weights)};
}

double integrate(const PiecewisePolynomial& f, double lo, double hi, Weight w) {
  if (hi < lo) throw InputError("integrate: lo must not exceed hi");
  double total = 0.0;
  for (std::size_t s = 0; s < f.segments(); ++s) {
    const double left = f.breakpoints()[s];
    const double l = std::max(lo, left);
    const double r = std::min(hi, f.breakpoints()[s + 1]);
    if (!(r > l)) continue;
    const Vector& c = f.coefficients(s);
    const int degree = static_cast<int>(c.size()) - 1 + (w == Weight::x ? 1 : 0);
    const auto [nodes, weights] = gauss_legendre(std::max(1, (degree + 2) / 2));
    double part = 0.0;
    for (Eigen::Index i = 0; i < nodes.size(); ++i) {
      const double x = 0.5 * (l + r) + 0.5 * (r - l) * nodes(i);
      const double v = horner(c, x - left);
      part += weights(i) * (w == Weight::x ? x * v : v);
    }
    total += 0.5 * (r - l) * part;
  }
  return total;
}

double integrate(const PiecewisePolynomial& f, Weight w) {
  return f.is_zero() ? 0.0 : integrate(f, f.lo(), f.hi(), w);
}

std::vector<double> sign_changes(const PiecewisePolynomial& f) {
  std::vector<double> out;
  for (std::size_t s = 0; s < f.segments(); ++s) {
    const double left = f.breakpoints()[s];
    for (double r : segment_sign_changes(f.coefficients(s), f.breakpoints()[s + 1] - left))
      out.push_back(left + r);
  }
  return out;
}

double integrate_abs(const PiecewisePolynomial& f) {
  double total = 0.0;
  for (const Piece& p : sign_constant_pieces(f))
    total += std::abs(integrate(PiecewisePolynomial({p.lo, p.hi}, {p.coeffs})));
  return total;
}

double l1_distance(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
  return integrate_abs(p - q);
}

double sup_abs(const PiecewisePolynomial& f) {
  double best = 0.0;
  for (std::size_t s = 0; s < f.segments(); ++s) {
    const auto [lo, hi] =
        poly_range(f.coefficients(s), f.breakpoints()[s + 1] - f.breakpoints()[s]);
    best = std::max({best, -lo, hi});
  }
  return best;
}

double SectionProfile::g(double x) const {
  const double m = measure(x);
  return m > floor ? std::pow(m, 1.0 / (dim - 1)) : 0.0;
}

SectionProfile build_profile(const ConvexBody& body) {
  const int n = body.dim();
  if (n < 2) throw InputError("section profile needs dimension >= 2");
  const std::vector<double> xs = section_breakpoints(body);
  SectionProfile out{n, {}, 0.0};
  if (xs.size() < 2) return out;

  // Chebyshev-Lobatto nodes on [0, 1]; the endpoints are shared between
  // neighbouring segments, so the profile is continuous by construction.
  Vector nodes(n);
  for (int k = 0; k < n; ++k) nodes(k) = 0.5 * (1.0 - std::cos(std::numbers::pi * k / (n - 1)));
  Matrix vandermonde(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) vandermonde(i, k) = std::pow(nodes(i), k);
  const auto qr = vandermonde.colPivHouseholderQr();

  std::vector<Vector> coeffs;
  double left_value = section_measure(body, xs.front());
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    const double width = xs[s + 1] - xs[s];
    Vector samples(n);
    samples(0) = left_value;
    for (int k = 1; k < n - 1; ++k) samples(k) = section_measure(body, xs[s] + width * nodes(k));
    samples(n - 1) = section_measure(body, xs[s + 1]);
    left_value = samples(n - 1);
    out.floor = std::max(out.floor, samples.cwiseAbs().maxCoeff());
    Vector c = qr.solve(samples);
    c(0) = samples(0);
    double w = 1.0;
    for (int k = 0; k < n; ++k, w *= width) c(k) /= w;
    coeffs.push_back(std::move(c));
  }
  out.measure = PiecewisePolynomial(xs, std::move(coeffs));
  out.floor *= 64.0 * std::numeric_limits<double>::epsilon();
  return out;
}

SectionProfile build_profile(const NormalizedPair& pair) { return build_profile(pair.body); }

double grunbaum_constant(int n) { return std::pow(static_cast<double>(n) / (n + 1), n); }

PiecewisePolynomial cone_measure(const ConeProfiles& cones, int n) {
  return PiecewisePolynomial::linear_power(cones.a_prime, cones.b_prime, cones.g0,
                                           -cones.g0 / cones.b_prime, n - 1);
}

ConeProfiles build_cone_profiles(const NormalizedPair& pair, const SectionProfile& profile) {
  const int n = pair.dim();
  const double t = pair.t;
  ConeProfiles out;
  out.k0 = pair.k0_measure;
  out.g0 = std::pow(out.k0, 1.0 / (n - 1));
  out.b_prime = n * t / out.k0;
  out.a_prime = out.b_prime - std::pow(n * std::pow(out.b_prime, n - 1) / out.k0, 1.0 / n);
  out.d = std::pow(t, 1.0 / n) - std::pow(grunbaum_constant(n), 1.0 / n);

  // v = sup { x in [0, b] : g(x) >= c(x) }, with g^(n-1) - c^(n-1) standing
  // in for g - c (same sign where both are nonnegative).
  constexpr double tol = 1e-9;
  const PiecewisePolynomial diff =
      (profile.measure - cone_measure(out, n)).restricted(0.0, pair.b);
  // At b itself compare left limits: g may jump to 0 there (flat face).
  if (profile.measure(pair.b) - std::pow(cone_value(out, pair.b), n - 1) >= -tol) {
    out.v = pair.b;
    return out;
  }
  double v = -1.0;
  for (double r : sign_changes(diff))
    if (r > 0.0 && r < pair.b) v = std::max(v, r);
  if (v < 0.0) {
    double lo = 0.0, hi = pair.b;
    while (hi - lo > kRootTol) {
      const double mid = 0.5 * (lo + hi);
      (diff(mid) >= -tol ? lo : hi) = mid;
    }
    v = lo;
  }
  out.v = v;
  return out;
}

SingleCrossingBound lemma_single_crossing_bound(const PiecewisePolynomial& f, double M) {
  constexpr double tol = 1e-9;
  const double total = integrate(f);
  if (std::abs(total) > tol)
    throw PreconditionViolated("integral of f is " + std::to_string(total) + ", not 0");
  const double sup = sup_abs(f);
  if (sup > M + tol)
    throw PreconditionViolated("sup |f| = " + std::to_string(sup) + " exceeds M");

  // Single crossing: every piece dipping below -tol precedes every piece
  // rising above +tol.
  double last_negative = -std::numeric_limits<double>::infinity();
  double first_positive = std::numeric_limits<double>::infinity();
  for (const Piece& p : sign_constant_pieces(f)) {
    const auto [lo, hi] = poly_range(p.coeffs, p.hi - p.lo);
    if (lo < -tol) last_negative = std::max(last_negative, p.lo);
    if (hi > tol) first_positive = std::min(first_positive, p.lo);
  }
  if (last_negative > first_positive)
    throw PreconditionViolated("f is not <= 0 left and >= 0 right of a single point");

  SingleCrossingBound out;
  out.xf_moment = integrate(f, Weight::x);
  out.l1 = integrate_abs(f);
  out.bound = 2.0 * std::sqrt(M * std::max(0.0, out.xf_moment));
  out.bound_ok = out.xf_moment >= -1e-12 && out.l1 <= out.bound + tol;
  return out;
}

}  // namespace grunbaum
