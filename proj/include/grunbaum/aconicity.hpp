#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grunbaum/witness.hpp"

namespace grunbaum {

/// Upper bounds on inf over cones C of |K Δ C| / |K|.
struct AconicityEstimate {
  double witness_bound = 0.0;
  std::optional<double> optimized_bound;
  std::string method;
  int iterations = 0;
  std::uint64_t seed = 0;
};

/// Bound from the witness cone alone (any n).
AconicityEstimate aconicity_upper(const NormalizedPair& pair, const SectionProfile& profile,
                                  const ConeProfiles& cones);

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  /// Stop once every vertex is within this distance of the best one.
  double tolerance = 1e-6;
  int max_evaluations = 2000;
  double initial_step = 0.1;
};

struct NelderMeadResult {
  Vector x;
  double value = 0.0;
  int evaluations = 0;
};

NelderMeadResult nelder_mead(const std::function<double(const Vector&)>& objective,
                             const Vector& start, const NelderMeadOptions& options = {});

/// Triangle vertices as the columns of a 2x3 matrix.
using Triangle = Eigen::Matrix<double, 2, 3>;

struct TriangleFit {
  Triangle triangle;
  double value = 0.0;  ///< |K Δ T| / |K|
  int evaluations = 0;
  /// Objective at the first start before any iteration.
  double initial_value = 0.0;
};

/// Local search over triangles from each start; keeps the best (first on ties).
TriangleFit fit_triangle(const ConvexBody& body, const std::vector<Triangle>& starts,
                         const NelderMeadOptions& options = {});

/// Seeded random triangles containing the centroid of `body`, one per restart.
std::vector<Triangle> random_triangle_starts(const ConvexBody& body, std::uint64_t seed,
                                             int restarts);

/// Triangle spanned by a 2D witness cone.
Triangle witness_triangle(const WitnessCone& witness);

/// Witness bound improved by a multi-start triangle search (n = 2 only).
AconicityEstimate aconicity_optimize_2d(const NormalizedPair& pair, const SectionProfile& profile,
                                        const ConeProfiles& cones, std::uint64_t seed,
                                        int restarts);
/// Normalizes against the plane through the centroid orthogonal to e_1 first.
AconicityEstimate aconicity_optimize_2d(const ConvexBody& body, std::uint64_t seed,
                                        int restarts);

}  // namespace grunbaum
