#include "grunbaum/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace grunbaum::io {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load(const std::string& path) { return parse(read_file(path)); }

namespace {

Vector vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError(std::string(what) + " must contain only numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

json vector_to_json(const Eigen::Ref<const Vector>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json matrix_columns(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.cols(); ++i) out.push_back(vector_to_json(m.col(i)));
  return out;
}

}  // namespace

ConvexBody body_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw InputError("body JSON needs \"dim\" and \"vertices\"");
  if (!j["dim"].is_number_integer()) throw InputError("\"dim\" must be an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw InputError("\"dim\" must be positive");
  const json& verts = j["vertices"];
  if (!verts.is_array() || verts.empty()) throw InputError("\"vertices\" must be a nonempty array");
  Matrix pts(dim, static_cast<Eigen::Index>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Vector v = vector_from_json(verts[i], "vertex");
    if (v.size() != dim)
      throw InputError("vertex " + std::to_string(i) + " has length " + std::to_string(v.size()) +
                       ", expected " + std::to_string(dim));
    pts.col(static_cast<Eigen::Index>(i)) = v;
  }
  return ConvexBody(dim, pts);
}

json to_json(const ConvexBody& body) {
  return {{"dim", body.dim()}, {"vertices", matrix_columns(body.vertices())}};
}

Hyperplane plane_from_json(const json& j) {
  if (!j.is_object() || !j.contains("normal") || !j.contains("offset"))
    throw InputError("hyperplane JSON needs \"normal\" and \"offset\"");
  if (!j["offset"].is_number()) throw InputError("\"offset\" must be a number");
  return Hyperplane::through(vector_from_json(j["normal"], "normal"), j["offset"].get<double>());
}

json to_json(const Hyperplane& plane) {
  return {{"normal", vector_to_json(plane.normal)}, {"offset", plane.offset}};
}

json to_json(const AffineMap& map) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < map.linear.rows(); ++r)
    rows.push_back(vector_to_json(map.linear.row(r).transpose()));
  return {{"linear", rows}, {"translation", vector_to_json(map.translation)}};
}

json to_json(const NormalizedPair& pair) {
  return {{"body", to_json(pair.body)}, {"map", to_json(pair.map)}, {"a", pair.a},
          {"b", pair.b},  {"k0_measure", pair.k0_measure}, {"t", pair.t}};
}

json to_json(const SectionProfile& profile) {
  json coeffs = json::array();
  for (std::size_t s = 0; s < profile.measure.segments(); ++s)
    coeffs.push_back(vector_to_json(profile.measure.coefficients(s)));
  return {{"support", {profile.lo(), profile.hi()}},
          {"breakpoints", profile.measure.breakpoints()},
          {"coeffs", coeffs},
          {"dim", profile.dim}};
}

json to_json(const ConeProfiles& cones) {
  return {{"a_prime", cones.a_prime}, {"b_prime", cones.b_prime}, {"g0", cones.g0},
          {"k0", cones.k0},           {"d", cones.d},             {"v", cones.v}};
}

json to_json(const WitnessCone& witness) {
  return {{"apex", vector_to_json(witness.apex)},
          {"base_x", witness.base_x},
          {"base_vertices", matrix_columns(witness.base_body.vertices())},
          {"s_profile", {{"g0", witness.g0}, {"a_prime", witness.base_x}, {"b", witness.b}}}};
}

json to_json(const AconicityEstimate& estimate) {
  json out{{"method", estimate.method},
           {"seed", estimate.seed},
           {"witness_bound", estimate.witness_bound},
           {"iterations", estimate.iterations}};
  out["optimized_bound"] =
      estimate.optimized_bound ? json(*estimate.optimized_bound) : json(nullptr);
  return out;
}

json to_json(const CheckItem& c) {
  return {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}, {"pass", c.pass}};
}

json to_json(const StabilityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"n", r.n},
          {"orientation", r.orientation},
          {"t", r.t},
          {"q_n", r.q_n},
          {"gap", r.gap},
          {"d", r.d},
          {"a", r.a},
          {"b", r.b},
          {"a_prime", r.a_prime},
          {"b_prime", r.b_prime},
          {"k0", r.k0},
          {"v", r.v},
          {"int_abs_h", r.int_abs_h},
          {"int_x_h", r.int_x_h},
          {"int_abs_cs", r.int_abs_cs},
          {"witness_sym_diff", r.witness_sym_diff},
          {"a_upper", r.a_upper},
          {"rhs_main", r.rhs_main},
          {"all_pass", r.all_pass()},
          {"checks", checks}};
}

json to_json(const ExponentTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows)
    rows.push_back({{"gap", row.gap},
                    {"a_upper", row.a_upper},
                    {"log_gap", row.log_gap},
                    {"log_a_upper", row.log_a_upper}});
  return {{"n", table.n},
          {"rows", rows},
          {"slope", table.slope ? json(*table.slope) : json(nullptr)},
          {"slope_defined", table.slope.has_value()},
          {"main_exponent", table.main_exponent},
          {"groemer_exponent", table.groemer_exponent}};
}

json profile_samples(const NormalizedPair& pair, int samples) {
  if (samples < 2) throw InputError("samples must be ≥ 2");
  const SectionProfile profile = build_profile(pair);
  const ConeProfiles cones = build_cone_profiles(pair, profile);
  const WitnessCone witness = build_witness(pair, profile, cones);
  const double lo = std::min(pair.a, cones.a_prime) - 0.1;
  const double hi = cones.b_prime + 0.1;
  json xs = json::array(), g = json::array(), c = json::array(), s = json::array();
  for (int i = 0; i < samples; ++i) {
    const double x = lo + (hi - lo) * i / (samples - 1);
    xs.push_back(x);
    g.push_back(profile.g(x));
    c.push_back(cone_value(cones, x));
    s.push_back(witness.s(x));
  }
  return {{"x", xs},           {"g", g},         {"c", c},
          {"s", s},            {"a", pair.a},    {"b", pair.b},
          {"a_prime", cones.a_prime}, {"b_prime", cones.b_prime}, {"v", cones.v}};
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace grunbaum::io
