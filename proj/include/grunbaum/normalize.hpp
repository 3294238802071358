#pragma once

#include <vector>

#include "grunbaum/geometry.hpp"

namespace grunbaum {

/// A body in canonical position: centroid at the origin, cutting plane
/// {x_1 = 0}, largest section of measure 1 and total volume 1.
struct NormalizedPair {
  ConvexBody body;
  /// Original coordinates -> canonical coordinates.
  AffineMap map;
  double a = 0.0;  ///< min first coordinate
  double b = 0.0;  ///< max first coordinate
  double k0_measure = 0.0;  ///< measure of the section at x_1 = 0
  double t = 0.0;  ///< volume of the part with x_1 >= 0

  int dim() const { return body.dim(); }
};

/// Relative centroid-plane tolerance accepted by normalize().
inline constexpr double kCentroidTolerance = 1e-7;

NormalizedPair normalize(const ConvexBody& body, const Hyperplane& plane);

/// |K ∩ H+| / |K|.
double halfspace_ratio(const ConvexBody& body, const Hyperplane& plane);

/// Rotation taking the unit vector `normal` to e_1 by the smallest angle.
Matrix rotation_to_first_axis(const Eigen::Ref<const Vector>& normal);

/// Distinct first coordinates of the vertices, ascending.
std::vector<double> section_breakpoints(const ConvexBody& body);

/// Measure of the section {x_1 = x} in dimension n-1.
inline double section_measure(const ConvexBody& body, double x) {
  return volume(slice(body, x));
}

struct SectionPeak {
  double x = 0.0;
  double measure = 0.0;
};

/// Largest section measure over the first axis. Uses that the (n-1)-th root
/// of the section measure is concave, so it is unimodal.
SectionPeak max_section(const ConvexBody& body);

struct InvarianceCheck {
  bool pass = false;
  double delta = 0.0;
};

/// Compares |K ∩ H+|/|K| before and after applying `map` to both K and H.
InvarianceCheck ratio_invariance_check(const ConvexBody& body, const Hyperplane& plane,
                                       const AffineMap& map);

}  // namespace grunbaum
