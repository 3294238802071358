#include "grunbaum/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace grunbaum {

CheckItem make_check(std::string name, double lhs, double rhs) {
  CheckItem c{std::move(name), lhs, rhs, rhs - lhs, false};
  c.pass = c.slack / std::max(1.0, std::abs(rhs)) >= -kCheckTolerance;
  return c;
}

namespace {

// lo <= x <= hi as one item, reporting the tighter side.
CheckItem make_range_check(std::string name, double lo, double x, double hi) {
  CheckItem below = make_check(name, lo, x);
  CheckItem above = make_check(std::move(name), x, hi);
  const double sb = below.slack / std::max(1.0, std::abs(below.rhs));
  const double sa = above.slack / std::max(1.0, std::abs(above.rhs));
  return sb <= sa ? below : above;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "grunbaum", "ab_span",  "a_bounds",   "b_bounds", "k0",     "bprime_cap",
      "ordering", "moment",   "xh_cap",     "h_sup",    "h_l1",   "remember_lb",
      "prop31",   "cs_l1",    "s_at_aprime", "final",   "d_vs_gap"};
  return names;
}

bool StabilityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.pass; });
}

const CheckItem& StabilityReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw InputError("no check named " + name);
}

double main_bound(int n, double gap) {
  return std::pow(3.0, n + 7) * std::pow(n, n + 2) * std::pow(std::max(0.0, gap), 0.5 / n);
}

StabilityReport analyze(const NormalizedPair& pair) {
  const int n = pair.dim();
  const double nd = n;
  const SectionProfile profile = build_profile(pair);
  const ConeProfiles cones = build_cone_profiles(pair, profile);
  const WitnessCone witness = build_witness(pair, profile, cones);
  const PiecewisePolynomial c_measure = cone_measure(cones, n);
  const PiecewisePolynomial h = c_measure - profile.measure;

  StabilityReport r;
  r.n = n;
  r.orientation = "given";
  r.t = pair.t;
  r.q_n = grunbaum_constant(n);
  r.gap = r.t - r.q_n;
  r.d = cones.d;
  r.a = pair.a;
  r.b = pair.b;
  r.a_prime = cones.a_prime;
  r.b_prime = cones.b_prime;
  r.k0 = cones.k0;
  r.v = cones.v;
  r.int_abs_h = integrate_abs(h);
  r.int_x_h = integrate(h, Weight::x);
  r.int_abs_cs = l1_distance(c_measure, witness.s_measure);
  r.witness_sym_diff = sym_diff_via_profiles(profile, witness);
  r.a_upper = r.witness_sym_diff;
  r.rhs_main = main_bound(n, r.gap);

  const double d = std::max(0.0, r.d);
  const double root_d = std::pow(d, 0.5 / n);
  const double c_at_aprime = cone_value(cones, cones.a_prime);
  const double s_at_aprime = witness.s(cones.a_prime);
  const double moment = integrate(c_measure, Weight::x);
  const double moment_expected = (cones.b_prime - cones.a_prime) * cones.d;

  auto& ck = r.checks;
  ck.push_back(make_check("grunbaum", r.q_n, r.t));
  ck.push_back(make_check("ab_span", r.b - r.a, nd));
  ck.push_back(make_range_check("a_bounds", -nd, r.a, -1.0 / 3.0));
  ck.push_back(make_range_check("b_bounds", 1.0 / 3.0, r.b, nd));
  ck.push_back(make_range_check("k0", 1.0 / (3.0 * nd), r.k0, 1.0));
  ck.push_back(make_check("bprime_cap", r.b_prime, 3.0 * nd * nd));
  {
    CheckItem lower = make_check("ordering", r.a, r.a_prime);
    CheckItem upper = make_check("ordering", r.b, r.b_prime);
    ck.push_back(lower.slack <= upper.slack ? lower : upper);
  }
  ck.push_back(make_range_check("moment", moment_expected, moment, moment_expected));
  ck.push_back(make_check("xh_cap", r.int_x_h, 4.0 * nd * nd * r.d));
  ck.push_back(make_check("h_sup", sup_abs(h), 3.0 * nd + 1.0));
  ck.push_back(make_check("h_l1", r.int_abs_h, 16.0 * std::pow(nd, 1.5) * std::sqrt(d)));
  ck.push_back(make_check(
      "remember_lb", std::pow((r.b_prime - r.b) / r.b_prime, n) / 3.0, r.int_abs_h));
  ck.push_back(make_check("prop31", r.b_prime - r.b, 288.0 * nd * nd * root_d));
  ck.push_back(make_check("cs_l1", r.int_abs_cs,
                          64.0 * std::pow(3.0, n + 2) * std::pow(nd, n + 2) * root_d));
  ck.push_back(make_range_check("s_at_aprime", c_at_aprime, s_at_aprime, 3.0 * nd));
  ck.push_back(make_check("final", r.a_upper, r.rhs_main));
  ck.push_back(make_check("d_vs_gap", r.d, 3.0 * r.gap));
  return r;
}

StabilityReport analyze(const ConvexBody& body, const Hyperplane& plane) {
  const NormalizedPair given = normalize(body, plane);
  const NormalizedPair flipped = normalize(body, plane.flipped());
  if (flipped.t < given.t) {
    StabilityReport r = analyze(flipped);
    r.orientation = "flipped";
    return r;
  }
  return analyze(given);
}

ExponentTable exponent_comparison(const std::vector<StabilityReport>& reports) {
  ExponentTable table;
  for (const auto& r : reports) {
    if (!(r.gap > 0.0) || !(r.a_upper > 0.0)) continue;
    table.rows.push_back({r.gap, r.a_upper, std::log(r.gap), std::log(r.a_upper)});
    table.n = r.n;
  }
  if (table.rows.size() < 2)
    throw InsufficientData("exponent comparison needs at least two reports with gap > 0");
  std::sort(table.rows.begin(), table.rows.end(),
            [](const ExponentRow& a, const ExponentRow& b) { return a.gap < b.gap; });
  table.main_exponent = 0.5 / table.n;
  table.groemer_exponent = 0.5 / (table.n * table.n);

  double mx = 0.0, my = 0.0;
  for (const auto& row : table.rows) {
    mx += row.log_gap;
    my += row.log_a_upper;
  }
  mx /= table.rows.size();
  my /= table.rows.size();
  double sxx = 0.0, sxy = 0.0;
  for (const auto& row : table.rows) {
    sxx += (row.log_gap - mx) * (row.log_gap - mx);
    sxy += (row.log_gap - mx) * (row.log_a_upper - my);
  }
  if (sxx > 0.0) table.slope = sxy / sxx;
  return table;
}

Hyperplane find_hyperplane_for_ratio(const ConvexBody& body, double alpha) {
  if (body.dim() != 2) throw MethodUnsupported("hyperplane search is implemented for n = 2");
  constexpr double tol = 1e-9;
  const Vector center = centroid(body);
  auto plane_at = [&](double theta) {
    return Hyperplane::through_point(Eigen::Vector2d(std::cos(theta), std::sin(theta)), center);
  };
  auto ratio = [&](double theta) { return halfspace_ratio(body, plane_at(theta)); };

  // Locate the smallest fraction: coarse scan, then golden section.
  constexpr int grid = 720;
  const double step = 2.0 * std::numbers::pi / grid;
  int at = 0;
  double lowest = ratio(0.0);
  for (int i = 1; i < grid; ++i) {
    const double r = ratio(i * step);
    if (r < lowest) {
      lowest = r;
      at = i;
    }
  }
  double lo = (at - 1) * step, hi = (at + 1) * step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = ratio(x1), f2 = ratio(x2);
  while (hi - lo > 1e-13) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = ratio(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = ratio(x2);
    }
  }
  double theta_min = 0.5 * (lo + hi);
  double r_min = ratio(theta_min);
  if (lowest < r_min) {
    theta_min = at * step;
    r_min = lowest;
  }

  if (std::abs(alpha - r_min) <= tol) return plane_at(theta_min);
  const double theta_max = theta_min + std::numbers::pi;
  const double r_max = 1.0 - r_min;
  if (std::abs(alpha - r_max) <= tol) return plane_at(theta_max);
  if (alpha < r_min || alpha > r_max)
    throw RatioUnattainable("fraction " + std::to_string(alpha) + " is outside [" +
                            std::to_string(r_min) + ", " + std::to_string(r_max) + "]");

  // ratio(theta_min) < alpha < ratio(theta_max); the ratio is continuous in
  // the angle, so bisection converges to a crossing.
  lo = theta_min;
  hi = theta_max;
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double r = ratio(mid);
    if (std::abs(r - alpha) <= 0.1 * tol) break;
    (r < alpha ? lo : hi) = mid;
  }
  return plane_at(mid);
}

}  // namespace grunbaum
