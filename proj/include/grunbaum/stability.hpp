#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grunbaum/aconicity.hpp"

namespace grunbaum {

/// One inequality of the proof chain: lhs <= rhs.
struct CheckItem {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  ///< rhs - lhs
  bool pass = false;
};

/// Slack tolerance after dividing both sides by max(1, |rhs|).
inline constexpr double kCheckTolerance = 1e-9;

CheckItem make_check(std::string name, double lhs, double rhs);

/// Registry of check names, in report order.
const std::vector<std::string>& check_names();

struct StabilityReport {
  int n = 0;
  /// "given" or "flipped": which side of the input plane is H+.
  std::string orientation;
  double t = 0.0;
  double q_n = 0.0;
  double gap = 0.0;
  double d = 0.0;
  double a = 0.0;
  double b = 0.0;
  double a_prime = 0.0;
  double b_prime = 0.0;
  double k0 = 0.0;
  double v = 0.0;
  double int_abs_h = 0.0;
  double int_x_h = 0.0;
  double int_abs_cs = 0.0;
  double witness_sym_diff = 0.0;
  double a_upper = 0.0;
  double rhs_main = 0.0;
  std::vector<CheckItem> checks;

  bool all_pass() const;
  const CheckItem& check(const std::string& name) const;
};

/// 3^(n+7) n^(n+2) gap^(1/(2n)), with gap clamped at 0.
double main_bound(int n, double gap);

/// Runs the whole chain on both sides of `plane` and reports the side with
/// the smaller halfspace fraction (ties keep the given side).
StabilityReport analyze(const ConvexBody& body, const Hyperplane& plane);
/// Chain for one already-normalized pair.
StabilityReport analyze(const NormalizedPair& pair);

struct ExponentRow {
  double gap = 0.0;
  double a_upper = 0.0;
  double log_gap = 0.0;
  double log_a_upper = 0.0;
};

/// log(A_upper) against log(gap), with the least-squares slope. Descriptive
/// only: Groemer's constant is not known, so nothing here is pass/fail.
struct ExponentTable {
  int n = 0;
  std::vector<ExponentRow> rows;  ///< ascending gap
  std::optional<double> slope;   ///< empty when all gaps coincide
  double main_exponent = 0.0;     ///< 1/(2n)
  double groemer_exponent = 0.0;  ///< 1/(2n^2)
};

ExponentTable exponent_comparison(const std::vector<StabilityReport>& reports);

/// Line through the centroid of a polygon cutting off the fraction `alpha`
/// on its positive side, found by bisection on the rotation angle.
Hyperplane find_hyperplane_for_ratio(const ConvexBody& body, double alpha);

}  // namespace grunbaum
