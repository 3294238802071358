#pragma once

#include <vector>

#include <Eigen/Dense>

namespace grunbaum::hull {

/// Oriented facet of a simplicial hull: `vertices` index the point columns,
/// the outward unit `normal` satisfies <normal, p> <= offset on the hull.
struct Facet {
  std::vector<int> vertices;
  Eigen::VectorXd normal;
  double offset = 0.0;
};

/// Triangulated boundary of a full-dimensional point set. Flat faces appear
/// as several coplanar simplicial facets.
struct Hull {
  std::vector<Facet> facets;
  Eigen::VectorXd interior;
};

/// Beneath-beyond construction. Requires `points` (dim x m) to be
/// full-dimensional; returns an empty facet list otherwise.
Hull convex_hull(const Eigen::MatrixXd& points, double eps);

/// Orthonormal basis (columns) and origin of the affine hull of `points`.
struct AffineFrame {
  Eigen::VectorXd origin;
  Eigen::MatrixXd basis;
  int dimension() const { return static_cast<int>(basis.cols()); }
};
AffineFrame affine_frame(const Eigen::MatrixXd& points, double eps);

/// Indices of the extreme points of `points`, valid in any affine dimension.
std::vector<int> extreme_points(const Eigen::MatrixXd& points, double eps);

/// Counter-clockwise ring of the strictly convex 2D hull (indices).
std::vector<int> monotone_chain(const Eigen::MatrixXd& points, double eps);

}  // namespace grunbaum::hull
