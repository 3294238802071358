#pragma once

#include <random>

#include "grunbaum/geometry.hpp"

namespace grunbaum::gen {

/// A body with the plane it should be cut by.
struct Instance {
  ConvexBody body;
  Hyperplane plane;
};

/// Plane through the centroid orthogonal to coordinate axis `axis`.
Hyperplane centroid_axis_plane(const ConvexBody& body, int axis);

/// Simplex cone: base an (n-1)-simplex in {x_1 = -1}, apex at x_1 = n, so
/// the centroid sits on {x_1 = 0}.
ConvexBody simplex_cone(int n);

/// simplex_cone(n) with two extra points: a copy of the apex moved by eps
/// along e_2 and a copy of one base vertex moved by eps/2 along -e_1. Cut by
/// the centroid plane orthogonal to e_1. eps = 0 returns the cone itself.
Instance perturbed_cone(int n, double eps);

/// Hull of k in [5, 12] points uniform in the unit disk, cut by a random
/// line through its centroid.
Instance random_polygon(std::mt19937_64& rng);

/// Hull of k in [n + 2, max_points] points uniform in the unit ball, cut by a
/// random hyperplane through its centroid. Requires 2 <= n <= 5 and
/// max_points <= 40.
Instance random_polytope(int n, int max_points, std::mt19937_64& rng);

/// Random triangle cut by the centroid line parallel to one of its sides.
Instance random_base_parallel_triangle(std::mt19937_64& rng);

/// Random triangle (no plane requirement: plane is the centroid x-axis line).
ConvexBody random_triangle(std::mt19937_64& rng);

}  // namespace grunbaum::gen
