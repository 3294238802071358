#pragma once

#include <cstdint>
#include <vector>

#include "grunbaum/profile.hpp"

namespace grunbaum {

/// Cone with apex (b, beta), beta in K_b, and base at x_1 = a' chosen so
/// that its section at x_1 = 0 is exactly K_0.
struct WitnessCone {
  Vector apex;
  double base_x = 0.0;  ///< a'
  ConvexBody base_body;  ///< beta + ((b - a') / b) (K_0 - beta), in dimension n-1
  double g0 = 0.0;
  double b = 0.0;
  /// s(x)^(n-1) = (g0 (b - x) / b)^(n-1) on [a', b].
  PiecewisePolynomial s_measure;

  int dim() const { return static_cast<int>(apex.size()); }
  double s(double x) const {
    if (x < base_x || x > b) return 0.0;
    return g0 * (b - x) / b;
  }
  /// The cone as an n-dimensional V-polytope.
  ConvexBody body() const;
};

/// Witness with beta = relative centroid of K_b.
WitnessCone build_witness(const NormalizedPair& pair, const SectionProfile& profile,
                          const ConeProfiles& cones);
/// Witness with an explicit beta (a point of K_b, in R^(n-1)).
WitnessCone build_witness(const NormalizedPair& pair, const SectionProfile& profile,
                          const ConeProfiles& cones, const Eigen::Ref<const Vector>& beta);

/// |K Δ C| computed as the L1 distance between g^(n-1) and s^(n-1).
double sym_diff_via_profiles(const SectionProfile& profile, const WitnessCone& witness);

struct BetaInvariance {
  bool pass = false;
  double spread = 0.0;  ///< max - min of the geometric |K Δ C| values
  std::vector<double> values;
  std::vector<double> half_widths;  ///< all zero for n = 2
};

/// Rebuilds the witness for `trials` random beta in K_b and measures |K Δ C|
/// geometrically: exactly for n = 2, by Monte Carlo (`mc_samples`) otherwise.
BetaInvariance beta_invariance_check(const NormalizedPair& pair, const SectionProfile& profile,
                                     const ConeProfiles& cones, int trials, std::uint64_t seed,
                                     std::int64_t mc_samples = 1'000'000);

}  // namespace grunbaum
