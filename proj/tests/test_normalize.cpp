#include <doctest.h>

#include <random>

#include "grunbaum/errors.hpp"
#include "grunbaum/generators.hpp"
#include "grunbaum/normalize.hpp"
#include "grunbaum/profile.hpp"
#include "support.hpp"

using namespace grunbaum;

namespace {

void check_canonical(const NormalizedPair& p) {
  const int n = p.dim();
  CHECK(centroid(p.body).norm() <= 1e-9);
  CHECK(volume(p.body) == doctest::Approx(1.0).epsilon(1e-9));
  double peak = 0.0;
  for (double x : section_breakpoints(p.body)) peak = std::max(peak, section_measure(p.body, x));
  // The peak can sit between breakpoints, but never above 1.
  CHECK(peak <= 1.0 + 1e-9);
  CHECK(max_section(p.body).measure == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(p.a < -1.0 / 3 + 1e-9);
  CHECK(p.b > 1.0 / 3 - 1e-9);
  CHECK(p.b - p.a <= n + 1e-9);
  CHECK(p.k0_measure >= 1.0 / (3 * n) - 1e-9);
  CHECK(p.k0_measure <= 1.0 + 1e-9);
  const double q = grunbaum_constant(n);
  CHECK(p.t >= q - 1e-9);
  CHECK(p.t <= 1.0 - q + 1e-9);
}

}  // namespace

TEST_CASE("square [0,2]^2 cut at x = 1") {
  const ConvexBody sq = testing::box(Vector::Zero(2), Vector::Constant(2, 2.0));
  const NormalizedPair p = normalize(sq, Hyperplane::through(Vector::Unit(2, 0), 1.0));
  CHECK(p.a == doctest::Approx(-0.5));
  CHECK(p.b == doctest::Approx(0.5));
  CHECK(p.k0_measure == doctest::Approx(1.0));
  CHECK(p.t == doctest::Approx(0.5));
  CHECK(p.body == testing::square(0.5));
  Matrix linear(2, 2);
  linear << 0.5, 0, 0, 0.5;
  CHECK((p.map.linear - linear).norm() < 1e-12);
  CHECK((p.map.translation + Vector::Constant(2, 0.5)).norm() < 1e-12);
}

TEST_CASE("base-parallel centroid line of a triangle gives t = 4/9") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const gen::Instance inst = gen::random_base_parallel_triangle(rng);
    const NormalizedPair p = normalize(inst.body, inst.plane);
    CHECK(p.t == doctest::Approx(4.0 / 9).epsilon(1e-9));
    check_canonical(p);
  }
}

TEST_CASE("canonical input gives the identity map") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    const gen::Instance inst = i % 2 ? gen::random_polygon(rng) : gen::random_polytope(3, 12, rng);
    const NormalizedPair p = normalize(inst.body, inst.plane);
    const int n = p.dim();
    const NormalizedPair again = normalize(p.body, Hyperplane::through(Vector::Unit(n, 0), 0.0));
    CHECK((again.map.linear - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-7);
    CHECK(again.map.translation.cwiseAbs().maxCoeff() <= 1e-7);
    CHECK(again.t == doctest::Approx(p.t).epsilon(1e-9));
  }
}

TEST_CASE("normalized pairs satisfy the canonical-position facts") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + i % 3;
    const gen::Instance inst = n == 2 ? gen::random_polygon(rng) : gen::random_polytope(n, 14, rng);
    const NormalizedPair p = normalize(inst.body, inst.plane);
    check_canonical(p);
    CHECK(p.t == doctest::Approx(halfspace_ratio(inst.body, inst.plane)).epsilon(1e-9));
    const NormalizedPair other = normalize(inst.body, inst.plane.flipped());
    check_canonical(other);
    CHECK(p.t + other.t == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("the map takes the plane to {x_1 = 0} with H+ on the positive side") {
  std::mt19937_64 rng(4);
  const gen::Instance inst = gen::random_polytope(3, 12, rng);
  const NormalizedPair p = normalize(inst.body, inst.plane);
  const Hyperplane image = apply(p.map, inst.plane);
  CHECK((image.normal - Vector::Unit(3, 0)).norm() < 1e-9);
  CHECK(std::abs(image.offset) < 1e-9);
}

TEST_CASE("normalize rejects bad input") {
  const ConvexBody sq = testing::square();
  CHECK_THROWS_AS(normalize(sq, Hyperplane::through(Vector::Unit(2, 0), 0.1)), CentroidMismatch);
  Matrix seg(2, 2);
  seg << 0, 1, 0, 1;
  CHECK_THROWS_AS(normalize(ConvexBody(2, seg), Hyperplane::through(Vector::Unit(2, 0), 0.5)),
                  DegenerateBody);
  Matrix line(1, 2);
  line << -1, 1;
  CHECK_THROWS(normalize(ConvexBody(1, line), Hyperplane::through(Vector::Unit(1, 0), 0.0)));
  // Within tolerance is accepted.
  CHECK_NOTHROW(normalize(sq, Hyperplane::through(Vector::Unit(2, 0), 1e-9)));
}

TEST_CASE("minimal rotation") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      Vector u(n);
      for (int i = 0; i < n; ++i) u(i) = g(rng);
      u.normalize();
      const Matrix r = rotation_to_first_axis(u);
      CHECK((r * u - Vector::Unit(n, 0)).norm() < 1e-12);
      CHECK((r.transpose() * r - Matrix::Identity(n, n)).norm() < 1e-12);
      CHECK(r.determinant() == doctest::Approx(1.0));
      // Vectors orthogonal to both u and e_1 are fixed.
      Matrix span(n, 2);
      span << u, Vector::Unit(n, 0);
      const Eigen::JacobiSVD<Matrix> svd(span.transpose(), Eigen::ComputeFullV);
      for (int k = 2; k < n; ++k) CHECK((r * svd.matrixV().col(k) - svd.matrixV().col(k)).norm() < 1e-12);
    }
    CHECK((rotation_to_first_axis(Vector::Unit(n, 0)) - Matrix::Identity(n, n)).norm() == 0.0);
    const Matrix flip = rotation_to_first_axis(-Vector::Unit(n, 0));
    CHECK((flip * -Vector::Unit(n, 0) - Vector::Unit(n, 0)).norm() < 1e-12);
    CHECK(flip.determinant() == doctest::Approx(1.0));
  }
}

TEST_CASE("ratio invariance") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const gen::Instance inst = gen::random_polygon(rng);
    const AffineMap m = testing::random_affine(2, rng);
    CHECK(ratio_invariance_check(inst.body, inst.plane, m).pass);
  }
  const gen::Instance inst = gen::random_polygon(rng);
  const InvarianceCheck id = ratio_invariance_check(inst.body, inst.plane, AffineMap::identity(2));
  CHECK(id.pass);
  CHECK(id.delta == 0.0);
  // Shear along the plane direction, about a point on the plane.
  const Vector c = centroid(inst.body);
  const Vector u = inst.plane.normal;
  const Vector w(Eigen::Vector2d(-u(1), u(0)));
  AffineMap shear{Matrix::Identity(2, 2) + 0.7 * w * u.transpose(), Vector::Zero(2)};
  shear.translation = c - shear.linear * c;
  CHECK(ratio_invariance_check(inst.body, inst.plane, shear).pass);
}

TEST_CASE("max section is found between breakpoints") {
  // Two skew segments at x = 0 and x = 1: sections are 2(1-x) by 2x rectangles.
  Matrix pts(3, 4);
  pts << 0, 0, 1, 1,
        -1, 1, 0, 0,
         0, 0, -1, 1;
  const ConvexBody tet(3, pts);
  const SectionPeak peak = max_section(tet);
  // Comparing values near a quadratic peak only pins x to about sqrt(eps).
  CHECK(std::abs(peak.x - 0.5) < 1e-7);
  CHECK(peak.measure == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(section_breakpoints(tet) == std::vector<double>{0.0, 1.0});
}
