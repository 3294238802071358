#include "grunbaum/normalize.hpp"

#include <algorithm>
#include <cmath>

namespace grunbaum {

Matrix rotation_to_first_axis(const Eigen::Ref<const Vector>& normal) {
  const int dim = static_cast<int>(normal.size());
  const Vector e1 = Vector::Unit(dim, 0);
  Matrix pre = Matrix::Identity(dim, dim);
  Vector u = normal.normalized();
  if (1.0 + u.dot(e1) < 1e-8) {
    // Nearly antipodal: half-turn in the (e_1, e_2) plane first, then the
    // small residual rotation below is well conditioned.
    const Vector e2 = Vector::Unit(dim, 1);
    pre -= 2.0 * (e1 * e1.transpose() + e2 * e2.transpose());
    u = pre * u;
  }
  const double c = u.dot(e1);
  const Matrix k = e1 * u.transpose() - u * e1.transpose();
  const Matrix r = Matrix::Identity(dim, dim) + k + k * k / (1.0 + c);
  return r * pre;
}

std::vector<double> section_breakpoints(const ConvexBody& body) {
  std::vector<double> xs;
  xs.reserve(body.size());
  for (Eigen::Index i = 0; i < body.size(); ++i) xs.push_back(body.vertices()(0, i));
  std::sort(xs.begin(), xs.end());
  const double merge = 1e-12 * std::max(1.0, body.diameter());
  std::vector<double> out;
  for (double x : xs)
    if (out.empty() || x - out.back() > merge) out.push_back(x);
  return out;
}

SectionPeak max_section(const ConvexBody& body) {
  const std::vector<double> xs = section_breakpoints(body);
  SectionPeak best{xs.front(), section_measure(body, xs.front())};
  std::size_t at = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double m = section_measure(body, xs[i]);
    if (m > best.measure) {
      best = {xs[i], m};
      at = i;
    }
  }
  double lo = xs[at == 0 ? 0 : at - 1];
  double hi = xs[std::min(at + 1, xs.size() - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = section_measure(body, x1), f2 = section_measure(body, x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = section_measure(body, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = section_measure(body, x1);
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double fm = section_measure(body, mid);
  if (fm > best.measure) best = {mid, fm};
  return best;
}

double halfspace_ratio(const ConvexBody& body, const Hyperplane& plane) {
  const double total = volume(body);
  if (!(total > 0.0)) throw DegenerateBody("halfspace ratio of a body with zero volume");
  return volume(clip(body, plane, Side::positive)) / total;
}

NormalizedPair normalize(const ConvexBody& body, const Hyperplane& plane) {
  const int n = body.dim();
  if (n < 2) throw InputError("normalization needs dimension n >= 2");
  if (plane.normal.size() != n) throw InputError("hyperplane dimension does not match body");
  const double vol = volume(body);
  if (!(vol > 0.0)) throw DegenerateBody("body has zero volume");
  const Vector c = centroid(body);
  const double miss = std::abs(plane.signed_distance(c));
  if (miss > kCentroidTolerance * body.diameter())
    throw CentroidMismatch("hyperplane misses the centroid by " + std::to_string(miss));

  const Matrix rot = rotation_to_first_axis(plane.normal);
  const AffineMap placed{rot, -rot * c};
  const SectionPeak peak = max_section(apply(placed, body));
  const double lambda = std::pow(peak.measure, -1.0 / (n - 1));

  // Transverse scaling multiplies volume by lambda^(n-1); the axial scaling
  // then restores total volume 1 without touching section measures.
  Vector diag = Vector::Constant(n, lambda);
  diag(0) = peak.measure / vol;
  const Matrix linear = diag.asDiagonal() * rot;

  NormalizedPair out;
  out.map = {linear, -linear * c};
  out.body = apply(out.map, body);
  std::tie(out.a, out.b) = first_axis_extent(out.body);
  out.k0_measure = section_measure(out.body, 0.0);
  out.t = volume(clip(out.body, Hyperplane{Vector::Unit(n, 0), 0.0}, Side::positive));
  return out;
}

InvarianceCheck ratio_invariance_check(const ConvexBody& body, const Hyperplane& plane,
                                       const AffineMap& map) {
  const double before = halfspace_ratio(body, plane);
  const double after = halfspace_ratio(apply(map, body), apply(map, plane));
  const double delta = std::abs(after - before);
  return {delta <= 1e-9, delta};
}

}  // namespace grunbaum
