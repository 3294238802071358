#include "grunbaum/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "grunbaum/hull.hpp"

namespace grunbaum {

namespace {

double bbox_diagonal(const Matrix& points) {
  if (points.cols() == 0) return 0.0;
  return (points.rowwise().maxCoeff() - points.rowwise().minCoeff()).norm();
}

double eps_for(const Matrix& points) {
  const double diag = bbox_diagonal(points);
  return diag > 0.0 ? kDegeneracyEps * diag : kDegeneracyEps;
}

Matrix merge_duplicates(const Matrix& points, double eps) {
  std::vector<Eigen::Index> kept;
  for (Eigen::Index j = 0; j < points.cols(); ++j) {
    bool dup = false;
    for (Eigen::Index k : kept) {
      if ((points.col(j) - points.col(k)).lpNorm<Eigen::Infinity>() <= eps) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(j);
  }
  Matrix out(points.rows(), kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) out.col(i) = points.col(kept[i]);
  return out;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

struct Moments {
  double mass = 0.0;
  Vector first;  // integral of x over the body
};

// Zeroth and first moments of a full-dimensional body; mass 0 if degenerate.
Moments moments(const ConvexBody& body) {
  const int dim = body.dim();
  Moments out{0.0, Vector::Zero(dim)};
  if (body.empty()) return out;
  const Matrix& v = body.vertices();

  if (dim == 1) {
    const double lo = v.minCoeff(), hi = v.maxCoeff();
    out.mass = hi - lo;
    out.first(0) = out.mass * 0.5 * (lo + hi);
    return out;
  }
  if (dim == 2) {
    if (v.cols() < 3) return out;
    const Matrix ring = polygon_ring(body);
    const Eigen::Index m = ring.cols();
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto p = ring.col(i);
      const auto q = ring.col((i + 1) % m);
      const double cross = p(0) * q(1) - q(0) * p(1);
      out.mass += 0.5 * cross;
      out.first += cross / 6.0 * (p + q);
    }
    return out;
  }

  if (v.cols() < dim + 1) return out;
  const hull::Hull h = hull::convex_hull(v, body.tolerance());
  if (h.facets.empty()) return out;
  const double norm = factorial(dim);
  Matrix simplex(dim, dim);
  for (const auto& facet : h.facets) {
    Vector sum = h.interior;
    for (int i = 0; i < dim; ++i) {
      simplex.col(i) = v.col(facet.vertices[i]) - h.interior;
      sum += v.col(facet.vertices[i]);
    }
    const double vol = std::abs(simplex.determinant()) / norm;
    out.mass += vol;
    out.first += vol / (dim + 1) * sum;
  }
  return out;
}

}  // namespace

ConvexBody::ConvexBody(int dim) : dim_(dim), vertices_(dim, 0) {}

ConvexBody::ConvexBody(int dim, const Eigen::Ref<const Matrix>& points) : dim_(dim) {
  if (points.rows() != dim)
    throw InputError("vertex length " + std::to_string(points.rows()) +
                     " does not match dim " + std::to_string(dim));
  if (!points.allFinite()) throw InputError("vertex coordinates must be finite");
  const double eps = eps_for(points);
  const Matrix unique = merge_duplicates(points, eps);
  std::vector<int> keep = hull::extreme_points(unique, eps);
  std::sort(keep.begin(), keep.end(), [&](int a, int b) {
    for (Eigen::Index r = 0; r < unique.rows(); ++r) {
      if (unique(r, a) != unique(r, b)) return unique(r, a) < unique(r, b);
    }
    return false;
  });
  vertices_.resize(dim, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) vertices_.col(i) = unique.col(keep[i]);
}

double ConvexBody::diameter() const { return bbox_diagonal(vertices_); }

double ConvexBody::tolerance() const { return eps_for(vertices_); }

Hyperplane Hyperplane::through(const Eigen::Ref<const Vector>& normal, double offset) {
  const double len = normal.norm();
  if (!(len > 0.0)) throw InputError("hyperplane normal must be nonzero");
  // Already unit up to rounding: keep the caller's bits.
  if (std::abs(len - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon())
    return {normal, offset};
  return {normal / len, offset / len};
}

Hyperplane Hyperplane::through_point(const Eigen::Ref<const Vector>& normal,
                                     const Eigen::Ref<const Vector>& point) {
  const double len = normal.norm();
  if (!(len > 0.0)) throw InputError("hyperplane normal must be nonzero");
  Vector unit = normal / len;
  const double offset = unit.dot(point);
  return {std::move(unit), offset};
}

AffineMap AffineMap::identity(int dim) {
  return {Matrix::Identity(dim, dim), Vector::Zero(dim)};
}

AffineMap AffineMap::after(const AffineMap& inner) const {
  return {linear * inner.linear, linear * inner.translation + translation};
}

AffineMap AffineMap::inverse() const {
  Matrix inv = linear.inverse();
  Vector t = -inv * translation;
  return {std::move(inv), std::move(t)};
}

ConvexBody apply(const AffineMap& map, const ConvexBody& body) {
  if (body.empty()) return ConvexBody(body.dim());
  Matrix image = (map.linear * body.vertices()).colwise() + map.translation;
  return ConvexBody(body.dim(), image);
}

Hyperplane apply(const AffineMap& map, const Hyperplane& plane) {
  const Vector normal = map.linear.transpose().partialPivLu().solve(plane.normal);
  return Hyperplane::through(normal, plane.offset + normal.dot(map.translation));
}

double volume(const ConvexBody& body) { return moments(body).mass; }

int affine_dimension(const ConvexBody& body) {
  if (body.empty()) return -1;
  return hull::affine_frame(body.vertices(), body.tolerance()).dimension();
}

bool is_degenerate(const ConvexBody& body) { return affine_dimension(body) < body.dim(); }

Vector centroid(const ConvexBody& body) {
  const Moments mo = moments(body);
  if (!(mo.mass > 0.0)) throw DegenerateBody("centroid of a body with zero volume");
  return mo.first / mo.mass;
}

Vector relative_centroid(const ConvexBody& body) {
  if (body.empty()) throw DegenerateBody("centroid of the empty body");
  const auto frame = hull::affine_frame(body.vertices(), body.tolerance());
  const int k = frame.dimension();
  if (k == 0) return body.vertex(0);
  const Matrix local = frame.basis.transpose() * (body.vertices().colwise() - frame.origin);
  return frame.origin + frame.basis * centroid(ConvexBody(k, local));
}

ConvexBody clip(const ConvexBody& body, const Hyperplane& plane, Side side) {
  if (body.empty()) return body;
  const Matrix& v = body.vertices();
  Vector dist = v.transpose() * plane.normal - Vector::Constant(v.cols(), plane.offset);
  if (side == Side::negative) dist = -dist;

  // Exact signs, no snapping: the cut then moves continuously with the plane.
  // Crossings that land next to a vertex are merged by canonicalization.
  std::vector<Vector> pts;
  for (Eigen::Index i = 0; i < v.cols(); ++i)
    if (dist(i) >= 0.0) pts.emplace_back(v.col(i));
  if (pts.empty()) return ConvexBody(body.dim());
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    if (dist(i) <= 0.0) continue;
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      if (dist(j) >= 0.0) continue;
      const double lambda = dist(i) / (dist(i) - dist(j));
      pts.emplace_back(v.col(i) + lambda * (v.col(j) - v.col(i)));
    }
  }
  Matrix m(body.dim(), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) m.col(i) = pts[i];
  return ConvexBody(body.dim(), m);
}

ConvexBody slice(const ConvexBody& body, double x) {
  if (body.dim() < 2) throw InputError("slice needs a body of dimension >= 2");
  const int sub = body.dim() - 1;
  if (body.empty()) return ConvexBody(sub);
  // Vertices within tolerance of x count as on the slice, so slicing at a
  // breakpoint keeps every vertex that shares that coordinate up to rounding.
  const double eps = body.tolerance();
  const Matrix& v = body.vertices();
  const Eigen::ArrayXd dist = v.row(0).transpose().array() - x;

  std::vector<Vector> pts;
  for (Eigen::Index i = 0; i < v.cols(); ++i)
    if (std::abs(dist(i)) <= eps) pts.emplace_back(v.col(i).tail(sub));
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    if (dist(i) <= eps) continue;
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      if (dist(j) >= -eps) continue;
      const double lambda = dist(i) / (dist(i) - dist(j));
      pts.emplace_back((v.col(i) + lambda * (v.col(j) - v.col(i))).tail(sub));
    }
  }
  if (pts.empty()) return ConvexBody(sub);
  Matrix m(sub, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) m.col(i) = pts[i];
  return ConvexBody(sub, m);
}

std::pair<double, double> first_axis_extent(const ConvexBody& body) {
  if (body.empty()) throw DegenerateBody("extent of the empty body");
  return {body.vertices().row(0).minCoeff(), body.vertices().row(0).maxCoeff()};
}

Halfspaces halfspaces(const ConvexBody& body) {
  Halfspaces out;
  const int dim = body.dim();
  if (is_degenerate(body)) {
    out.degenerate = true;
    return out;
  }
  if (dim == 1) {
    out.normals = Matrix(1, 2);
    out.normals << 1.0, -1.0;
    out.offsets = Vector(2);
    out.offsets << body.vertices().maxCoeff(), -body.vertices().minCoeff();
    return out;
  }
  if (dim == 2) {
    const Matrix ring = polygon_ring(body);
    const Eigen::Index m = ring.cols();
    out.normals.resize(2, m);
    out.offsets.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Eigen::Vector2d e = ring.col((i + 1) % m) - ring.col(i);
      const Eigen::Vector2d n = Eigen::Vector2d(e.y(), -e.x()).normalized();
      out.normals.col(i) = n;
      out.offsets(i) = n.dot(ring.col(i));
    }
    return out;
  }
  const hull::Hull h = hull::convex_hull(body.vertices(), body.tolerance());
  out.normals.resize(dim, static_cast<Eigen::Index>(h.facets.size()));
  out.offsets.resize(static_cast<Eigen::Index>(h.facets.size()));
  for (std::size_t f = 0; f < h.facets.size(); ++f) {
    out.normals.col(f) = h.facets[f].normal;
    out.offsets(f) = h.facets[f].offset;
  }
  return out;
}

bool contains(const ConvexBody& body, const Eigen::Ref<const Vector>& p, double tol) {
  return halfspaces(body).contains(p, tol);
}

double vertex_set_distance(const ConvexBody& a, const ConvexBody& b) {
  if (a.dim() != b.dim() || a.size() != b.size())
    return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < b.size(); ++j)
      best = std::min(best, (a.vertex(i) - b.vertex(j)).norm());
    worst = std::max(worst, best);
  }
  return worst;
}

Matrix polygon_ring(const ConvexBody& body) {
  if (body.dim() != 2) throw MethodUnsupported("polygon_ring needs a 2D body");
  const std::vector<int> order = hull::monotone_chain(body.vertices(), body.tolerance());
  Matrix ring(2, static_cast<Eigen::Index>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i) ring.col(i) = body.vertex(order[i]);
  return ring;
}

double intersection_area(const ConvexBody& a, const ConvexBody& b) {
  if (a.size() < 3 || b.size() < 3) return 0.0;
  const Matrix clip_ring = polygon_ring(b);
  std::vector<Eigen::Vector2d> poly;
  const Matrix subject = polygon_ring(a);
  for (Eigen::Index i = 0; i < subject.cols(); ++i) poly.emplace_back(subject.col(i));

  // Sutherland-Hodgman against each counter-clockwise edge of b.
  for (Eigen::Index e = 0; e < clip_ring.cols() && !poly.empty(); ++e) {
    const Eigen::Vector2d p0 = clip_ring.col(e);
    const Eigen::Vector2d p1 = clip_ring.col((e + 1) % clip_ring.cols());
    const Eigen::Vector2d dir = p1 - p0;
    auto side = [&](const Eigen::Vector2d& q) {
      const Eigen::Vector2d r = q - p0;
      return dir.x() * r.y() - dir.y() * r.x();
    };
    std::vector<Eigen::Vector2d> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Eigen::Vector2d& cur = poly[i];
      const Eigen::Vector2d& nxt = poly[(i + 1) % poly.size()];
      const double sc = side(cur), sn = side(nxt);
      if (sc >= 0) next.push_back(cur);
      if ((sc >= 0) != (sn >= 0)) next.push_back(cur + sc / (sc - sn) * (nxt - cur));
    }
    poly = std::move(next);
  }
  double area = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    area += p.x() * q.y() - q.x() * p.y();
  }
  return std::max(0.0, 0.5 * area);
}

namespace {

SymDiffResult sym_diff_montecarlo(const ConvexBody& a, const ConvexBody& b,
                                  const SymDiffOptions& options) {
  const int dim = a.dim();
  if (a.empty() && b.empty()) return {};
  Matrix all(dim, a.size() + b.size());
  all << a.vertices(), b.vertices();
  const Vector lo = all.rowwise().minCoeff();
  const Vector hi = all.rowwise().maxCoeff();
  const Halfspaces ha = halfspaces(a);
  const Halfspaces hb = halfspaces(b);

  // Equal-width strata along the first axis, each with its own stream so
  // the result does not depend on how strata are scheduled.
  const std::int64_t strata = std::clamp<std::int64_t>(options.samples / 1000, 1, 64);
  const std::int64_t per = std::max<std::int64_t>(1, options.samples / strata);
  const double width = (hi(0) - lo(0)) / static_cast<double>(strata);
  double box = width;
  for (int r = 1; r < dim; ++r) box *= hi(r) - lo(r);

  std::vector<std::int64_t> hits(strata, 0);
  auto run = [&](std::int64_t s) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(s)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Vector p(dim);
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < per; ++i) {
      p(0) = lo(0) + width * (static_cast<double>(s) + unit(rng));
      for (int r = 1; r < dim; ++r) p(r) = lo(r) + (hi(r) - lo(r)) * unit(rng);
      if (ha.contains(p) != hb.contains(p)) ++count;
    }
    hits[s] = count;
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(strata)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::int64_t s = w; s < strata; s += workers) run(s);
    });
  for (auto& t : pool) t.join();

  constexpr double z99 = 2.5758293035489004;
  SymDiffResult out;
  double variance = 0.0;
  for (std::int64_t s = 0; s < strata; ++s) {
    const double p = static_cast<double>(hits[s]) / static_cast<double>(per);
    out.value += box * p;
    variance += box * box * p * (1.0 - p) / static_cast<double>(per);
  }
  out.half_width = z99 * std::sqrt(variance);
  return out;
}

}  // namespace

SymDiffResult sym_diff_volume(const ConvexBody& a, const ConvexBody& b,
                              const SymDiffOptions& options) {
  if (a.dim() != b.dim()) throw InputError("sym_diff_volume: dimension mismatch");
  if (options.method == SymDiffOptions::Method::exact2d) {
    if (a.dim() != 2) throw MethodUnsupported("exact2d symmetric difference needs n = 2");
    const double value = volume(a) + volume(b) - 2.0 * intersection_area(a, b);
    return {std::max(0.0, value), 0.0};
  }
  return sym_diff_montecarlo(a, b, options);
}

}  // namespace grunbaum
