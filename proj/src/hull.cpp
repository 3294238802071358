#include "grunbaum/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace grunbaum::hull {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Builder {
  const MatrixXd& points;
  double eps;
  VectorXd interior;
  std::vector<Facet> facets;
  std::vector<bool> alive;

  void add_facet(std::vector<int> verts) {
    const Eigen::Index dim = points.rows();
    MatrixXd edges(dim - 1, dim);
    for (Eigen::Index i = 1; i < dim; ++i)
      edges.row(i - 1) = (points.col(verts[i]) - points.col(verts[0])).transpose();
    Eigen::JacobiSVD<MatrixXd> svd(edges, Eigen::ComputeFullV);
    VectorXd normal = svd.matrixV().col(dim - 1);
    double offset = normal.dot(points.col(verts[0]));
    if (normal.dot(interior) - offset > 0) {
      normal = -normal;
      offset = -offset;
    }
    facets.push_back({std::move(verts), std::move(normal), offset});
    alive.push_back(true);
  }
};

}  // namespace

Hull convex_hull(const MatrixXd& points, double eps) {
  const int dim = static_cast<int>(points.rows());
  const int m = static_cast<int>(points.cols());
  Hull out;
  if (m < dim + 1 || dim < 2) return out;

  // Initial simplex: greedy maximal spread.
  std::vector<int> simplex;
  Eigen::Index first = 0;
  points.row(0).minCoeff(&first);
  simplex.push_back(static_cast<int>(first));
  std::vector<VectorXd> frame;
  for (int k = 0; k < dim; ++k) {
    double best = -1.0;
    int best_index = -1;
    for (int j = 0; j < m; ++j) {
      VectorXd r = points.col(j) - points.col(simplex[0]);
      for (const auto& q : frame) r -= q.dot(r) * q;
      const double dist = r.norm();
      if (dist > best) {
        best = dist;
        best_index = j;
      }
    }
    if (best <= eps) return out;
    VectorXd r = points.col(best_index) - points.col(simplex[0]);
    for (const auto& q : frame) r -= q.dot(r) * q;
    frame.push_back(r.normalized());
    simplex.push_back(best_index);
  }

  Builder builder{points, eps, VectorXd::Zero(dim), {}, {}};
  for (int v : simplex) builder.interior += points.col(v);
  builder.interior /= static_cast<double>(simplex.size());
  for (int skip = 0; skip <= dim; ++skip) {
    std::vector<int> verts;
    for (int i = 0; i <= dim; ++i)
      if (i != skip) verts.push_back(simplex[i]);
    builder.add_facet(std::move(verts));
  }

  // Far points first: the hull grows quickly and later points are mostly
  // rejected by the visibility scan.
  std::vector<int> order;
  for (int j = 0; j < m; ++j)
    if (std::find(simplex.begin(), simplex.end(), j) == simplex.end()) order.push_back(j);
  std::vector<double> reach(m);
  for (int j : order) reach[j] = (points.col(j) - builder.interior).squaredNorm();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return reach[a] > reach[b]; });

  std::vector<int> visible;
  for (int j : order) {
    const auto p = points.col(j);
    visible.clear();
    for (std::size_t f = 0; f < builder.facets.size(); ++f) {
      if (!builder.alive[f]) continue;
      const auto& facet = builder.facets[f];
      if (facet.normal.dot(p) - facet.offset > eps) visible.push_back(static_cast<int>(f));
    }
    if (visible.empty()) continue;

    std::map<std::vector<int>, int> ridges;
    for (int f : visible) {
      const auto& verts = builder.facets[f].vertices;
      for (int drop = 0; drop < dim; ++drop) {
        std::vector<int> ridge;
        ridge.reserve(dim - 1);
        for (int i = 0; i < dim; ++i)
          if (i != drop) ridge.push_back(verts[i]);
        std::sort(ridge.begin(), ridge.end());
        ++ridges[ridge];
      }
      builder.alive[f] = false;
    }
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(j);
      builder.add_facet(std::move(verts));
    }
  }

  for (std::size_t f = 0; f < builder.facets.size(); ++f)
    if (builder.alive[f]) out.facets.push_back(std::move(builder.facets[f]));
  out.interior = builder.interior;
  return out;
}

AffineFrame affine_frame(const MatrixXd& points, double eps) {
  AffineFrame frame;
  const Eigen::Index m = points.cols();
  frame.origin = points.rowwise().mean();
  if (m <= 1) {
    frame.basis = MatrixXd(points.rows(), 0);
    return frame;
  }
  const MatrixXd centered = points.colwise() - frame.origin;
  Eigen::JacobiSVD<MatrixXd> svd(centered, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double threshold = eps * std::sqrt(static_cast<double>(m));
  int rank = 0;
  while (rank < sigma.size() && sigma(rank) > threshold) ++rank;
  frame.basis = svd.matrixU().leftCols(rank);
  return frame;
}

std::vector<int> monotone_chain(const MatrixXd& points, double eps) {
  const int m = static_cast<int>(points.cols());
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (points(0, a) != points(0, b)) return points(0, a) < points(0, b);
    return points(1, a) < points(1, b);
  });
  if (m < 3) return idx;

  // Keep only strict left turns; a turn counts as straight when the middle
  // point is within eps of the chord.
  auto left_turn = [&](int o, int a, int b) {
    const Eigen::Vector2d u = points.col(a) - points.col(o);
    const Eigen::Vector2d w = points.col(b) - points.col(o);
    const double cross = u.x() * w.y() - u.y() * w.x();
    return cross > eps * w.norm();
  };
  std::vector<int> chain(2 * m);
  int k = 0;
  for (int i = 0; i < m; ++i) {
    while (k >= 2 && !left_turn(chain[k - 2], chain[k - 1], idx[i])) --k;
    chain[k++] = idx[i];
  }
  for (int i = m - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && !left_turn(chain[k - 2], chain[k - 1], idx[i])) --k;
    chain[k++] = idx[i];
  }
  chain.resize(k - 1);
  return chain;
}

std::vector<int> extreme_points(const MatrixXd& points, double eps) {
  const int m = static_cast<int>(points.cols());
  if (m == 0) return {};
  const AffineFrame frame = affine_frame(points, eps);
  const int k = frame.dimension();
  if (k == 0) return {0};
  const MatrixXd local = frame.basis.transpose() * (points.colwise() - frame.origin);

  if (k == 1) {
    Eigen::Index lo = 0, hi = 0;
    local.row(0).minCoeff(&lo);
    local.row(0).maxCoeff(&hi);
    return {static_cast<int>(lo), static_cast<int>(hi)};
  }
  if (k == 2) return monotone_chain(local, eps);

  const Hull h = convex_hull(local, eps);
  // A hull vertex is extreme iff the normals of its incident facets span
  // the whole space (full-dimensional normal cone).
  std::map<int, std::vector<int>> incident;
  for (int f = 0; f < static_cast<int>(h.facets.size()); ++f)
    for (int v : h.facets[f].vertices) incident[v].push_back(f);
  std::vector<int> out;
  for (const auto& [v, fs] : incident) {
    MatrixXd normals(k, fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) normals.col(i) = h.facets[fs[i]].normal;
    Eigen::FullPivLU<MatrixXd> lu(normals);
    lu.setThreshold(1e-8);
    if (lu.rank() == k) out.push_back(v);
  }
  return out;
}

}  // namespace grunbaum::hull
