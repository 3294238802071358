#include <doctest.h>

#include <random>

#include "fixture_values.hpp"
#include "grunbaum/generators.hpp"
#include "grunbaum/witness.hpp"
#include "support.hpp"

using namespace grunbaum;

namespace {

struct Built {
  NormalizedPair pair;
  SectionProfile profile;
  ConeProfiles cones;
  WitnessCone witness;
};

Built build(const ConvexBody& body, const Hyperplane& plane) {
  Built b{normalize(body, plane), {}, {}, {}};
  b.profile = build_profile(b.pair);
  b.cones = build_cone_profiles(b.pair, b.profile);
  b.witness = build_witness(b.pair, b.profile, b.cones);
  return b;
}

Built build(const gen::Instance& inst) { return build(inst.body, inst.plane); }

const Hyperplane kAxis = Hyperplane::through(Vector::Unit(2, 0), 0.0);

}  // namespace

TEST_CASE("square witness") {
  const Built w = build(testing::square(), kAxis);
  CHECK(w.witness.apex(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(w.witness.apex(1)) < 1e-12);
  CHECK(w.witness.base_x == doctest::Approx(fixture::square::a_prime).epsilon(1e-12));
  const auto [lo, hi] = first_axis_extent(w.witness.base_body);
  CHECK(hi - lo == doctest::Approx(fixture::square::base_length).epsilon(1e-12));
  for (double x : {-0.4, -0.1, 0.0, 0.25, 0.5}) CHECK(w.witness.s(x) == doctest::Approx(1 - 2 * x));
  CHECK(w.witness.s(0.6) == 0.0);
  CHECK(sym_diff_via_profiles(w.profile, w.witness) ==
        doctest::Approx(fixture::square::witness_sym_diff).epsilon(1e-12));
  CHECK(sym_diff_volume(testing::square(0.5), w.witness.body()).value ==
        doctest::Approx(fixture::square::witness_sym_diff).epsilon(1e-12));
}

TEST_CASE("exact cone is its own witness") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5; ++i) {
    const Built w = build(gen::random_base_parallel_triangle(rng));
    CHECK(w.witness.base_x == doctest::Approx(w.pair.a).epsilon(1e-9));
    CHECK(vertex_set_distance(w.witness.body(), w.pair.body) < 1e-9);
    CHECK(sym_diff_via_profiles(w.profile, w.witness) <= 1e-9);
  }
  for (int n = 3; n <= 4; ++n) {
    const gen::Instance inst = gen::perturbed_cone(n, 0.0);
    const Built w = build(inst);
    CHECK(sym_diff_via_profiles(w.profile, w.witness) <= 1e-9);
    CHECK(vertex_set_distance(w.witness.body(), w.pair.body) < 1e-9);
  }
}

TEST_CASE("witness structure on random pairs") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + i % 3;
    const Built w = build(n == 2 ? gen::random_polygon(rng) : gen::random_polytope(n, 12, rng));
    CHECK(w.witness.apex(0) == doctest::Approx(w.pair.b).epsilon(1e-12));
    CHECK(vertex_set_distance(slice(w.witness.body(), 0.0), slice(w.pair.body, 0.0)) < 1e-9);
    CHECK(w.witness.s(w.witness.base_x) <= 3 * n + 1e-9);
    CHECK(w.witness.s(w.witness.base_x) >= cone_value(w.cones, w.witness.base_x) - 1e-9);
    CHECK(sym_diff_via_profiles(w.profile, w.witness) >= 0.0);
    // Profile of the witness body is s^(n-1).
    const SectionProfile cp = build_profile(w.witness.body());
    for (double x : {w.witness.base_x * 0.5, 0.0, 0.5 * w.pair.b})
      CHECK(cp.measure(x) == doctest::Approx(w.witness.s_measure(x)).epsilon(1e-9));
  }
}

TEST_CASE("profile identity against geometry in 2D") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const Built w = build(gen::random_polygon(rng));
    const double via_profiles = sym_diff_via_profiles(w.profile, w.witness);
    const double geometric = sym_diff_volume(w.pair.body, w.witness.body()).value;
    CHECK(via_profiles == doctest::Approx(geometric).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("containments used by the proof, checked on vertices") {
  std::mt19937_64 rng(10);
  const Hyperplane upper = kAxis;
  for (int i = 0; i < 30; ++i) {
    const Built w = build(gen::random_polygon(rng));
    const ConvexBody cone = w.witness.body();
    const double tol = 1e-9;
    // C ∩ H+ ⊆ K ∩ H+.
    const ConvexBody c_plus = clip(cone, upper, Side::positive);
    for (Eigen::Index j = 0; j < c_plus.size(); ++j) CHECK(contains(w.pair.body, c_plus.vertex(j), tol));
    // K ∩ [a', 0] x R ⊆ C.
    const ConvexBody band = clip(clip(w.pair.body, upper, Side::negative),
                                 Hyperplane::through(Vector::Unit(2, 0), w.witness.base_x), Side::positive);
    for (Eigen::Index j = 0; j < band.size(); ++j) CHECK(contains(cone, band.vertex(j), tol));
  }
}

TEST_CASE("beta invariance") {
  {
    const Built w = build(testing::square(), kAxis);
    const BetaInvariance r = beta_invariance_check(w.pair, w.profile, w.cones, 16, 1);
    CHECK(r.pass);
    CHECK(r.spread <= 1e-7);
    CHECK(r.values.size() == 16);
  }
  {
    std::mt19937_64 rng(11);
    const Built w = build(gen::random_base_parallel_triangle(rng));
    const BetaInvariance r = beta_invariance_check(w.pair, w.profile, w.cones, 4, 2);
    CHECK(r.pass);
    CHECK(r.spread <= 1e-9);
  }
  std::mt19937_64 rng(12);
  for (int i = 0; i < 10; ++i) {
    const Built w = build(gen::random_polygon(rng));
    CHECK(beta_invariance_check(w.pair, w.profile, w.cones, 8, 100 + i).pass);
  }
  const Built w3 = build(gen::random_polytope(3, 12, rng));
  const BetaInvariance r3 = beta_invariance_check(w3.pair, w3.profile, w3.cones, 3, 5, 200000);
  CHECK(r3.pass);
  CHECK(r3.half_widths.front() > 0.0);
}

TEST_CASE("profile identity in 3D against slice-wise exact symmetric differences") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 8; ++i) {
    const Built w = build(gen::random_polytope(3, 20, rng));
    const ConvexBody cone = w.witness.body();
    std::vector<double> cuts;
    for (const ConvexBody* k : {&w.pair.body, &cone})
      for (Eigen::Index j = 0; j < k->size(); ++j) cuts.push_back(k->vertex(j)(0));
    // |K Δ C| = ∫ |K_x Δ C_x| dx with the 2D sections compared exactly.
    const auto section_sym_diff = [&](double x) {
      const ConvexBody a = slice(w.pair.body, x), b = slice(cone, x);
      const double va = volume(a), vb = volume(b);
      const double both = va > 0.0 && vb > 0.0 ? intersection_area(a, b) : 0.0;
      return va + vb - 2.0 * both;
    };
    const double fubini = testing::simpson_pieces(section_sym_diff, cuts, 1e-11);
    CHECK(sym_diff_via_profiles(w.profile, w.witness) == doctest::Approx(fubini).epsilon(1e-8));
  }
}
