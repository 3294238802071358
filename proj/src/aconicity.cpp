#include "grunbaum/aconicity.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>

namespace grunbaum {

AconicityEstimate aconicity_upper(const NormalizedPair& pair, const SectionProfile& profile,
                                  const ConeProfiles& cones) {
  AconicityEstimate out;
  // |K| = 1 after normalization.
  out.witness_bound = sym_diff_via_profiles(profile, build_witness(pair, profile, cones));
  out.method = "witness";
  return out;
}

NelderMeadResult nelder_mead(const std::function<double(const Vector&)>& objective,
                             const Vector& start, const NelderMeadOptions& options) {
  const Eigen::Index n = start.size();
  std::vector<Vector> pts;
  std::vector<double> vals;
  int evals = 0;
  auto eval = [&](const Vector& x) {
    ++evals;
    return objective(x);
  };
  pts.push_back(start);
  vals.push_back(eval(start));
  for (Eigen::Index i = 0; i < n; ++i) {
    Vector x = start;
    x(i) += options.initial_step;
    pts.push_back(x);
    vals.push_back(eval(x));
  }

  std::vector<std::size_t> order(n + 1);
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
      diameter = std::max(diameter, (pts[i] - pts[best]).norm());
    if (diameter < options.tolerance || evals >= options.max_evaluations) break;

    Vector center = Vector::Zero(n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) center += pts[order[i]];
    center /= static_cast<double>(n);

    const Vector xr = center + options.reflection * (center - pts[worst]);
    const double fr = eval(xr);
    if (fr < vals[best]) {
      const Vector xe = center + options.expansion * (xr - center);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const Vector xc = outside ? Vector(center + options.contraction * (xr - center))
                              : Vector(center - options.contraction * (center - pts[worst]));
    const double fc = eval(xc);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      if (i == best) continue;
      pts[i] = pts[best] + options.shrink * (pts[i] - pts[best]);
      vals[i] = eval(pts[i]);
    }
  }
  const auto it = std::min_element(vals.begin(), vals.end());
  return {pts[it - vals.begin()], *it, evals};
}

namespace {

double triangle_objective(const ConvexBody& body, double body_volume, const Vector& x) {
  const Matrix tri = Eigen::Map<const Matrix>(x.data(), 2, 3);
  const ConvexBody t(2, tri);
  return sym_diff_volume(body, t).value / body_volume;
}

}  // namespace

TriangleFit fit_triangle(const ConvexBody& body, const std::vector<Triangle>& starts,
                         const NelderMeadOptions& options) {
  if (body.dim() != 2) throw MethodUnsupported("triangle fitting needs n = 2");
  if (starts.empty()) throw InputError("fit_triangle needs at least one start");
  const double vol = volume(body);
  if (!(vol > 0.0)) throw DegenerateBody("triangle fit against a body with zero area");
  auto objective = [&](const Vector& x) { return triangle_objective(body, vol, x); };

  // Starts are independent; results are merged in start order, so the
  // answer does not depend on scheduling.
  auto run = [&](const Triangle& tri) {
    Vector x = Eigen::Map<const Vector>(tri.data(), 6);
    NelderMeadOptions opts = options;
    NelderMeadResult best = nelder_mead(objective, x, opts);
    int evals = best.evaluations;
    // Restart from the converged point with a smaller simplex while that
    // keeps paying off; plain Nelder-Mead stalls on this non-smooth objective.
    for (int round = 0; round < 6; ++round) {
      opts.initial_step *= 0.25;
      NelderMeadResult next = nelder_mead(objective, best.x, opts);
      evals += next.evaluations;
      const bool improved = next.value < best.value - 1e-15;
      if (next.value < best.value) best = std::move(next);
      if (!improved) break;
    }
    best.evaluations = evals;
    return best;
  };
  std::vector<std::future<NelderMeadResult>> jobs;
  for (const Triangle& tri : starts) jobs.push_back(std::async(std::launch::async, run, tri));

  TriangleFit out;
  out.initial_value = objective(Eigen::Map<const Vector>(starts.front().data(), 6));
  out.value = std::numeric_limits<double>::infinity();
  for (auto& job : jobs) {
    NelderMeadResult r = job.get();
    out.evaluations += r.evaluations;
    if (r.value < out.value) {
      out.value = r.value;
      out.triangle = Eigen::Map<const Triangle>(r.x.data());
    }
  }
  return out;
}

std::vector<Triangle> random_triangle_starts(const ConvexBody& body, std::uint64_t seed,
                                             int restarts) {
  const Vector center = centroid(body);
  const Vector lo = body.vertices().rowwise().minCoeff();
  const Vector hi = body.vertices().rowwise().maxCoeff();
  const Vector half = 0.75 * (hi - lo);
  std::vector<Triangle> out;
  for (int r = 0; r < restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    while (true) {
      Triangle tri;
      for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 2; ++i) tri(i, j) = center(i) + half(i) * unit(rng);
      const ConvexBody t(2, Matrix(tri));
      if (t.size() == 3 && contains(t, center, 0.0)) {
        out.push_back(tri);
        break;
      }
    }
  }
  return out;
}

Triangle witness_triangle(const WitnessCone& witness) {
  if (witness.dim() != 2) throw MethodUnsupported("witness triangle needs n = 2");
  const Matrix& base = witness.base_body.vertices();
  Triangle tri;
  tri.col(0) << witness.base_x, base(0, 0);
  tri.col(1) << witness.base_x, base(0, base.cols() - 1);
  tri.col(2) = witness.apex;
  return tri;
}

AconicityEstimate aconicity_optimize_2d(const NormalizedPair& pair, const SectionProfile& profile,
                                        const ConeProfiles& cones, std::uint64_t seed,
                                        int restarts) {
  if (pair.dim() != 2) throw MethodUnsupported("aconicity optimization needs n = 2");
  const WitnessCone witness = build_witness(pair, profile, cones);
  AconicityEstimate out;
  out.witness_bound = sym_diff_via_profiles(profile, witness);
  out.method = "witness+nelder-mead";
  out.seed = seed;

  std::vector<Triangle> starts{witness_triangle(witness)};
  for (const Triangle& t : random_triangle_starts(pair.body, seed, restarts)) starts.push_back(t);
  const TriangleFit fit = fit_triangle(pair.body, starts);
  out.optimized_bound = std::min(fit.value, out.witness_bound);
  out.iterations = fit.evaluations;
  return out;
}

AconicityEstimate aconicity_optimize_2d(const ConvexBody& body, std::uint64_t seed,
                                        int restarts) {
  if (body.dim() != 2) throw MethodUnsupported("aconicity optimization needs n = 2");
  const Hyperplane plane = Hyperplane::through_point(Vector::Unit(2, 0), centroid(body));
  const NormalizedPair pair = normalize(body, plane);
  const SectionProfile profile = build_profile(pair);
  return aconicity_optimize_2d(pair, profile, build_cone_profiles(pair, profile), seed, restarts);
}

}  // namespace grunbaum
