#include "grunbaum/generators.hpp"

#include <cmath>
#include <numbers>

namespace grunbaum::gen {

namespace {

Vector random_unit(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  do {
    for (int i = 0; i < n; ++i) v(i) = normal(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Vector random_in_ball(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return random_unit(n, rng) * std::pow(unit(rng), 1.0 / n);
}

Instance with_random_plane(ConvexBody body, std::mt19937_64& rng) {
  const Vector normal = random_unit(body.dim(), rng);
  Hyperplane plane = Hyperplane::through_point(normal, centroid(body));
  return {std::move(body), std::move(plane)};
}

}  // namespace

Hyperplane centroid_axis_plane(const ConvexBody& body, int axis) {
  if (axis < 0 || axis >= body.dim()) throw InputError("axis out of range");
  return Hyperplane::through_point(Vector::Unit(body.dim(), axis), centroid(body));
}

ConvexBody simplex_cone(int n) {
  // Base: regular-ish (n-1)-simplex in the transverse coordinates, centered.
  Matrix pts = Matrix::Zero(n, n + 1);
  for (int i = 0; i < n; ++i) {
    pts(0, i) = -1.0;
    if (i > 0) pts(i, i) = 1.0;
  }
  const Vector mean = pts.block(1, 0, n - 1, n).rowwise().mean();
  pts.block(1, 0, n - 1, n).colwise() -= mean;
  pts(0, n) = n;
  return ConvexBody(n, pts);
}

Instance perturbed_cone(int n, double eps) {
  const ConvexBody cone = simplex_cone(n);
  Matrix pts(n, cone.size() + 2);
  pts.leftCols(cone.size()) = cone.vertices();
  Eigen::Index apex = 0;
  cone.vertices().row(0).maxCoeff(&apex);
  Eigen::Index base = 0;
  cone.vertices().row(0).minCoeff(&base);
  pts.col(cone.size()) = cone.vertex(apex) + eps * Vector::Unit(n, 1);
  pts.col(cone.size() + 1) = cone.vertex(base) - 0.5 * eps * Vector::Unit(n, 0);
  ConvexBody body(n, pts);
  Hyperplane plane = centroid_axis_plane(body, 0);
  return {std::move(body), std::move(plane)};
}

Instance random_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(5, 12);
  while (true) {
    const int k = count(rng);
    Matrix pts(2, k);
    for (int i = 0; i < k; ++i) pts.col(i) = random_in_ball(2, rng);
    ConvexBody body(2, pts);
    if (body.size() >= 3 && volume(body) > 1e-3) return with_random_plane(std::move(body), rng);
  }
}

Instance random_polytope(int n, int max_points, std::mt19937_64& rng) {
  if (n < 2 || n > 5) throw InputError("random polytopes are limited to 2 <= n <= 5");
  if (max_points > 40 || max_points < n + 2)
    throw InputError("random polytopes need n + 2 <= max_points <= 40");
  std::uniform_int_distribution<int> count(n + 2, max_points);
  while (true) {
    const int k = count(rng);
    Matrix pts(n, k);
    for (int i = 0; i < k; ++i) pts.col(i) = random_in_ball(n, rng);
    ConvexBody body(n, pts);
    if (volume(body) > 1e-3) return with_random_plane(std::move(body), rng);
  }
}

ConvexBody random_triangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  while (true) {
    Matrix pts(2, 3);
    for (int j = 0; j < 3; ++j) pts.col(j) << coord(rng), coord(rng);
    ConvexBody t(2, pts);
    if (t.size() == 3 && volume(t) > 0.05) return t;
  }
}

Instance random_base_parallel_triangle(std::mt19937_64& rng) {
  ConvexBody t = random_triangle(rng);
  std::uniform_int_distribution<int> pick(0, 2);
  const int apex = pick(rng);
  const Matrix ring = polygon_ring(t);
  Eigen::Vector2d p, q, r;
  p = ring.col((apex + 1) % 3);
  q = ring.col((apex + 2) % 3);
  r = ring.col(apex);
  const Eigen::Vector2d edge = q - p;
  Eigen::Vector2d normal(-edge.y(), edge.x());
  // Positive side holds the apex: that side carries the smaller fraction.
  if (normal.dot(r - p) < 0) normal = -normal;
  Hyperplane plane = Hyperplane::through_point(normal, centroid(t));
  return {std::move(t), std::move(plane)};
}

}  // namespace grunbaum::gen
