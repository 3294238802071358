#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grunbaum/io.hpp"

namespace grunbaum::sweep {

inline constexpr int kCsvVersion = 1;

struct SweepConfig {
  enum class Family { perturbed_cone, random_polygon, random_polytope };
  Family family = Family::random_polygon;
  int dim = 2;
  int count = 1;
  std::uint64_t seed = 0;
  std::vector<double> epsilon_list;
  std::string output;
  /// Worker threads; 0 means hardware concurrency.
  int threads = 0;
  /// Vertex cap for random_polytope.
  int max_points = 20;
};

/// Validates and fills a config. GRUNBAUM_SEED, when set, replaces the seed.
SweepConfig config_from_json(const io::json& j);

struct Row {
  int index = 0;
  std::optional<double> epsilon;
  std::optional<StabilityReport> report;
  std::string error;
};

/// One row per body (perturbed_cone: one per epsilon). Row i depends only on
/// (seed, i), so the output does not depend on the thread count.
std::vector<Row> run(const SweepConfig& config);

std::string csv_header();
std::string csv_row(const std::string& family, int dim, const Row& row);
std::string to_csv(const SweepConfig& config, const std::vector<Row>& rows);

const char* family_name(SweepConfig::Family f);

}  // namespace grunbaum::sweep
