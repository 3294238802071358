#include <doctest.h>

#include <random>

#include "fixture_values.hpp"
#include "grunbaum/errors.hpp"
#include "grunbaum/generators.hpp"
#include "grunbaum/io.hpp"
#include "grunbaum/stability.hpp"
#include "support.hpp"

using namespace grunbaum;

namespace {
const Hyperplane kAxis = Hyperplane::through(Vector::Unit(2, 0), 0.0);
}

TEST_CASE("square report") {
  const StabilityReport r = analyze(testing::square(), kAxis);
  namespace sq = fixture::square;
  CHECK(r.t == doctest::Approx(sq::t).epsilon(1e-12));
  CHECK(r.gap == doctest::Approx(sq::gap).epsilon(1e-12));
  CHECK(r.d == doctest::Approx(sq::d).epsilon(1e-12));
  CHECK(r.b_prime == doctest::Approx(sq::b_prime).epsilon(1e-12));
  CHECK(r.a_prime == doctest::Approx(sq::a_prime).epsilon(1e-12));
  CHECK(r.int_abs_h == doctest::Approx(sq::int_abs_h).epsilon(1e-12));
  CHECK(r.int_abs_cs == doctest::Approx(sq::int_abs_cs).epsilon(1e-12));
  CHECK(r.witness_sym_diff == doctest::Approx(sq::witness_sym_diff).epsilon(1e-12));
  CHECK(r.a_upper == doctest::Approx(sq::witness_sym_diff).epsilon(1e-12));
  CHECK(r.rhs_main == doctest::Approx(sq::rhs_main).epsilon(1e-12));
  CHECK(r.check("moment").lhs == doctest::Approx(sq::moment_c).epsilon(1e-12));
  CHECK(r.check("moment").rhs == doctest::Approx(sq::moment_c).epsilon(1e-12));
  CHECK(r.check("final").pass);
  CHECK(r.check("final").slack > 1e5);
  CHECK(r.all_pass());
}

TEST_CASE("registry order and lookups") {
  const StabilityReport r = analyze(testing::square(), kAxis);
  REQUIRE(r.checks.size() == check_names().size());
  for (std::size_t i = 0; i < r.checks.size(); ++i) CHECK(r.checks[i].name == check_names()[i]);
  CHECK_THROWS(r.check("nope"));
  CHECK(main_bound(2, 1.0 / 18) == doctest::Approx(fixture::square::rhs_main).epsilon(1e-14));
  CHECK(main_bound(3, -1e-15) == 0.0);
}

TEST_CASE("make_check scales the tolerance") {
  CHECK(make_check("x", 1.0, 1.0).pass);
  CHECK(make_check("x", 1.0 + 5e-10, 1.0).pass);
  CHECK(!make_check("x", 1.0 + 2e-9, 1.0).pass);
  CHECK(make_check("x", 1e6 + 1e-4, 1e6).pass);
  CHECK(!make_check("x", 1e6 + 1e-2, 1e6).pass);
}

TEST_CASE("equality case") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const gen::Instance inst = gen::random_base_parallel_triangle(rng);
    for (const Hyperplane& h : {inst.plane, inst.plane.flipped()}) {
      const StabilityReport r = analyze(inst.body, h);
      CHECK(std::abs(r.gap) <= 1e-9);
      CHECK(std::abs(r.d) <= 1e-9);
      CHECK(r.witness_sym_diff <= 1e-9);
      CHECK(r.all_pass());
    }
  }
}

TEST_CASE("orientation is the side with the smaller fraction") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    const gen::Instance inst = gen::random_polygon(rng);
    const StabilityReport given = analyze(inst.body, inst.plane);
    const StabilityReport flipped = analyze(inst.body, inst.plane.flipped());
    CHECK(given.t == doctest::Approx(flipped.t).epsilon(1e-12));
    CHECK(given.t <= 0.5 + 1e-12);
    CHECK(given.orientation != flipped.orientation);
    const double ratio = halfspace_ratio(inst.body, inst.plane);
    CHECK(given.orientation == (ratio <= 0.5 ? "given" : "flipped"));
  }
}

TEST_CASE("random bodies pass every check") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const gen::Instance inst = gen::random_polygon(rng);
    const StabilityReport r = analyze(inst.body, inst.plane);
    for (const CheckItem& c : r.checks) {
      INFO(i, " ", c.name, " lhs=", c.lhs, " rhs=", c.rhs);
      CHECK(c.pass);
    }
    CHECK(r.gap >= -1e-9);
    CHECK(r.d <= 3 * r.gap + 1e-9);
  }
  for (int n = 3; n <= 4; ++n) {
    for (int i = 0; i < 8; ++i) {
      const gen::Instance inst = gen::random_polytope(n, 14, rng);
      CHECK(analyze(inst.body, inst.plane).all_pass());
    }
  }
}

TEST_CASE("analyze is deterministic and affine invariant") {
  std::mt19937_64 rng(4);
  const gen::Instance inst = gen::random_polygon(rng);
  const std::string a = io::to_json(analyze(inst.body, inst.plane)).dump();
  const std::string b = io::to_json(analyze(inst.body, inst.plane)).dump();
  CHECK(a == b);
  const AffineMap f = testing::random_affine(2, rng);
  const StabilityReport r0 = analyze(inst.body, inst.plane);
  const StabilityReport r1 = analyze(apply(f, inst.body), apply(f, inst.plane));
  CHECK(r1.t == doctest::Approx(r0.t).epsilon(1e-9));
  CHECK(r1.gap == doctest::Approx(r0.gap).epsilon(1e-7));
}

TEST_CASE("exponent table") {
  std::vector<StabilityReport> reports;
  for (double eps : {0.4, 0.2, 0.1, 0.05}) {
    const gen::Instance inst = gen::perturbed_cone(2, eps);
    reports.push_back(analyze(inst.body, inst.plane));
  }
  const ExponentTable table = exponent_comparison(reports);
  REQUIRE(table.rows.size() == 4);
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    CHECK(table.rows[i].gap > table.rows[i - 1].gap);
    CHECK(table.rows[i].a_upper > table.rows[i - 1].a_upper);
  }
  CHECK(table.slope.has_value());
  CHECK(table.main_exponent == doctest::Approx(0.25));
  CHECK(table.groemer_exponent == doctest::Approx(0.125));

  CHECK_THROWS_AS(exponent_comparison({reports[0]}), InsufficientData);
  CHECK(!exponent_comparison({reports[0], reports[0]}).slope.has_value());
}

TEST_CASE("rotating a line to hit a prescribed ratio") {
  std::mt19937_64 rng(5);
  const ConvexBody tri = gen::random_triangle(rng);
  const Matrix ring = polygon_ring(tri);
  for (double alpha : {4.0 / 9, 5.0 / 9}) {
    const Hyperplane h = find_hyperplane_for_ratio(tri, alpha);
    CHECK(halfspace_ratio(tri, h) == doctest::Approx(alpha).epsilon(1e-9));
    CHECK(std::abs(h.signed_distance(centroid(tri))) < 1e-12);
    // Parallel to one side.
    bool parallel = false;
    for (int k = 0; k < 3; ++k) {
      const Vector edge = ring.col((k + 1) % 3) - ring.col(k);
      parallel = parallel || std::abs(h.normal.dot(edge.normalized())) < 1e-6;
    }
    CHECK(parallel);
  }
  const Hyperplane lo = find_hyperplane_for_ratio(tri, 4.0 / 9);
  const Hyperplane hi = find_hyperplane_for_ratio(tri, 5.0 / 9);
  CHECK(std::abs(std::abs(lo.normal.dot(hi.normal)) - 1.0) < 1e-6);

  const ConvexBody sq = testing::square();
  CHECK(halfspace_ratio(sq, find_hyperplane_for_ratio(sq, 0.5)) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_THROWS_AS(find_hyperplane_for_ratio(sq, 0.48), RatioUnattainable);
  CHECK_THROWS_AS(find_hyperplane_for_ratio(tri, 0.4), RatioUnattainable);

  for (int i = 0; i < 5; ++i) {
    const gen::Instance inst = gen::random_polygon(rng);
    const StabilityReport r = analyze(inst.body, inst.plane);
    const Hyperplane h = find_hyperplane_for_ratio(inst.body, r.t);
    CHECK(analyze(inst.body, h).t == doctest::Approx(r.t).epsilon(1e-9));
  }
}
