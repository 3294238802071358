#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "grunbaum/errors.hpp"

namespace grunbaum {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Points within this distance (times the body diameter) of a hyperplane
/// count as lying on it.
inline constexpr double kDegeneracyEps = 1e-10;

/// A convex polytope given by its vertices, stored as the columns of a
/// dim x m matrix.
///
/// Construction canonicalizes: near-duplicate points are merged, points that
/// are not extreme are dropped and the survivors are sorted lexicographically.
/// The empty body (no vertices) is a valid value.
class ConvexBody {
 public:
  ConvexBody() = default;
  explicit ConvexBody(int dim);
  ConvexBody(int dim, const Eigen::Ref<const Matrix>& points);

  int dim() const { return dim_; }
  Eigen::Index size() const { return vertices_.cols(); }
  bool empty() const { return vertices_.cols() == 0; }

  const Matrix& vertices() const { return vertices_; }
  auto vertex(Eigen::Index i) const { return vertices_.col(i); }

  /// Length of the bounding-box diagonal (0 for a single point).
  double diameter() const;
  /// Absolute tolerance for coplanarity, rank and on-slice decisions.
  double tolerance() const;

  friend bool operator==(const ConvexBody& a, const ConvexBody& b) {
    return a.dim_ == b.dim_ && a.vertices_.cols() == b.vertices_.cols() &&
           a.vertices_ == b.vertices_;
  }

 private:
  int dim_ = 0;
  Matrix vertices_;
};

/// Oriented hyperplane {x : <normal, x> = offset}; the positive side is
/// <normal, x> >= offset.
struct Hyperplane {
  Vector normal;
  double offset = 0.0;

  /// Normalizes `normal` to unit length (and scales `offset` with it).
  static Hyperplane through(const Eigen::Ref<const Vector>& normal, double offset);
  static Hyperplane through_point(const Eigen::Ref<const Vector>& normal,
                                  const Eigen::Ref<const Vector>& point);

  double signed_distance(const Eigen::Ref<const Vector>& p) const {
    return normal.dot(p) - offset;
  }
  Hyperplane flipped() const { return {-normal, -offset}; }
};

/// x -> linear * x + translation.
struct AffineMap {
  Matrix linear;
  Vector translation;

  static AffineMap identity(int dim);

  int dim() const { return static_cast<int>(linear.rows()); }
  double determinant() const { return linear.determinant(); }

  Vector operator()(const Eigen::Ref<const Vector>& p) const {
    return linear * p + translation;
  }
  /// (this o inner)(x) = this(inner(x)).
  AffineMap after(const AffineMap& inner) const;
  AffineMap inverse() const;
};

enum class Side { positive, negative };

ConvexBody apply(const AffineMap& map, const ConvexBody& body);
/// Image of a hyperplane under an invertible map; orientation is preserved.
Hyperplane apply(const AffineMap& map, const Hyperplane& plane);

/// Lebesgue measure in the body's ambient dimension; 0 for degenerate bodies.
double volume(const ConvexBody& body);
/// Dimension of the affine hull (-1 for the empty body).
int affine_dimension(const ConvexBody& body);
bool is_degenerate(const ConvexBody& body);

/// Barycenter of the uniform measure. Throws DegenerateBody if volume is 0.
Vector centroid(const ConvexBody& body);
/// Barycenter taken inside the affine hull, so it is defined for lower
/// dimensional bodies too (a point, a segment, a flat polygon in 3D...).
Vector relative_centroid(const ConvexBody& body);

ConvexBody clip(const ConvexBody& body, const Hyperplane& plane, Side side);

/// Section at first coordinate `x`, returned as a body in dimension n-1.
ConvexBody slice(const ConvexBody& body, double x);

/// Smallest and largest first coordinate of the body.
std::pair<double, double> first_axis_extent(const ConvexBody& body);

/// Facet inequalities <normals.col(i), p> <= offsets(i) of a full-dimensional
/// body. A degenerate body yields an empty system flagged `degenerate`.
struct Halfspaces {
  Matrix normals;
  Vector offsets;
  bool degenerate = false;

  bool contains(const Eigen::Ref<const Vector>& p, double tol = 0.0) const {
    if (degenerate) return false;
    return ((normals.transpose() * p - offsets).array() <= tol).all();
  }
};

Halfspaces halfspaces(const ConvexBody& body);

/// Membership with absolute tolerance `tol`; false for degenerate bodies.
bool contains(const ConvexBody& body, const Eigen::Ref<const Vector>& p, double tol);

/// Max distance between matched vertices of two canonical bodies, or +inf if
/// the vertex counts differ. Bounds the Hausdorff distance from above.
double vertex_set_distance(const ConvexBody& a, const ConvexBody& b);

/// Counter-clockwise vertex ring of a 2D body.
Matrix polygon_ring(const ConvexBody& body);

struct SymDiffOptions {
  enum class Method { exact2d, montecarlo };
  Method method = Method::exact2d;
  std::uint64_t seed = 0;
  std::int64_t samples = 1'000'000;
};

struct SymDiffResult {
  double value = 0.0;
  /// 99% confidence half-width; 0 for the exact method.
  double half_width = 0.0;
};

SymDiffResult sym_diff_volume(const ConvexBody& a, const ConvexBody& b,
                              const SymDiffOptions& options = {});

/// Area of the intersection of two convex polygons.
double intersection_area(const ConvexBody& a, const ConvexBody& b);

}  // namespace grunbaum
