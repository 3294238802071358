#pragma once

#include <string>

#include <json.hpp>

#include "grunbaum/stability.hpp"

namespace grunbaum::io {

using nlohmann::json;

/// Parses JSON text; syntax errors become InputError naming the byte offset.
json parse(const std::string& text);
std::string read_file(const std::string& path);
json load(const std::string& path);

ConvexBody body_from_json(const json& j);
json to_json(const ConvexBody& body);

Hyperplane plane_from_json(const json& j);
json to_json(const Hyperplane& plane);

json to_json(const AffineMap& map);
json to_json(const NormalizedPair& pair);
json to_json(const SectionProfile& profile);
json to_json(const ConeProfiles& cones);
json to_json(const WitnessCone& witness);
json to_json(const AconicityEstimate& estimate);
json to_json(const CheckItem& check);
json to_json(const StabilityReport& report);
json to_json(const ExponentTable& table);

/// Uniform samples of g, c and s (zero-extended) over
/// [min(a, a') - 0.1, b' + 0.1], plus the scalars a, b, a', b', v.
json profile_samples(const NormalizedPair& pair, int samples);

/// Shortest decimal text that round-trips the double.
std::string format_double(double v);

}  // namespace grunbaum::io
