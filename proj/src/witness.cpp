#include "grunbaum/witness.hpp"

#include <algorithm>
#include <random>

namespace grunbaum {

ConvexBody WitnessCone::body() const {
  const int n = dim();
  const Eigen::Index m = base_body.size();
  Matrix pts(n, m + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    pts(0, i) = base_x;
    pts.col(i).tail(n - 1) = base_body.vertex(i);
  }
  pts.col(m) = apex;
  return ConvexBody(n, pts);
}

WitnessCone build_witness(const NormalizedPair& pair, const SectionProfile& profile,
                          const ConeProfiles& cones) {
  return build_witness(pair, profile, cones, relative_centroid(slice(pair.body, pair.b)));
}

WitnessCone build_witness(const NormalizedPair& pair, const SectionProfile& profile,
                          const ConeProfiles& cones, const Eigen::Ref<const Vector>& beta) {
  const int n = pair.dim();
  if (!(pair.b > 0.0)) throw PreconditionViolated("witness cone needs b > 0");
  if (beta.size() != n - 1) throw InputError("beta must live in dimension n-1");
  const double scale = (pair.b - cones.a_prime) / pair.b;
  const ConvexBody k0 = slice(pair.body, 0.0);
  Matrix base = (scale * (k0.vertices().colwise() - beta)).colwise() + beta;

  WitnessCone w;
  w.apex.resize(n);
  w.apex(0) = pair.b;
  w.apex.tail(n - 1) = beta;
  w.base_x = cones.a_prime;
  w.base_body = ConvexBody(n - 1, base);
  w.g0 = cones.g0;
  w.b = pair.b;
  w.s_measure = PiecewisePolynomial::linear_power(cones.a_prime, pair.b, cones.g0,
                                                  -cones.g0 / pair.b, profile.dim - 1);
  return w;
}

double sym_diff_via_profiles(const SectionProfile& profile, const WitnessCone& witness) {
  return l1_distance(profile.measure, witness.s_measure);
}

BetaInvariance beta_invariance_check(const NormalizedPair& pair, const SectionProfile& profile,
                                     const ConeProfiles& cones, int trials, std::uint64_t seed,
                                     std::int64_t mc_samples) {
  const ConvexBody top = slice(pair.body, pair.b);
  const bool exact = pair.dim() == 2;
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);

  std::vector<Vector> betas;
  if (top.size() == 1) {
    betas.emplace_back(top.vertex(0));
  } else {
    for (int i = 0; i < trials; ++i) {
      Vector w(top.size());
      for (Eigen::Index j = 0; j < w.size(); ++j) w(j) = expo(rng);
      betas.emplace_back(top.vertices() * (w / w.sum()));
    }
  }

  BetaInvariance out;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const ConvexBody cone = build_witness(pair, profile, cones, betas[i]).body();
    SymDiffOptions opts;
    if (!exact) {
      opts.method = SymDiffOptions::Method::montecarlo;
      opts.seed = seed + 1 + i;
      opts.samples = mc_samples;
    }
    const SymDiffResult r = sym_diff_volume(pair.body, cone, opts);
    out.values.push_back(r.value);
    out.half_widths.push_back(r.half_width);
  }
  const auto [lo, hi] = std::minmax_element(out.values.begin(), out.values.end());
  out.spread = *hi - *lo;
  if (exact) {
    out.pass = out.spread <= 1e-7;
  } else {
    const double hw = *std::max_element(out.half_widths.begin(), out.half_widths.end());
    out.pass = out.spread <= 2.0 * hw;
  }
  return out;
}

}  // namespace grunbaum
