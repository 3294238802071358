#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grunbaum/generators.hpp"
#include "grunbaum/io.hpp"
#include "grunbaum/sweep.hpp"

namespace {

using namespace grunbaum;

struct PlaneArgs {
  std::string plane_file;
  std::optional<int> axis;
};

void add_plane_options(CLI::App* cmd, PlaneArgs& args) {
  auto* plane = cmd->add_option("--plane", args.plane_file, "hyperplane JSON file");
  auto* axis = cmd->add_option("--auto-centroid-axis", args.axis,
                               "use the plane through the centroid orthogonal to axis k");
  plane->excludes(axis);
}

Hyperplane resolve_plane(const ConvexBody& body, const PlaneArgs& args) {
  if (!args.plane_file.empty()) {
    Hyperplane h = io::plane_from_json(io::load(args.plane_file));
    if (h.normal.size() != body.dim()) throw InputError("plane dimension does not match body");
    return h;
  }
  return gen::centroid_axis_plane(body, args.axis.value_or(0));
}

int cmd_analyze(const std::string& body_file, const PlaneArgs& plane_args, bool csv) {
  const ConvexBody body = io::body_from_json(io::load(body_file));
  const StabilityReport report = analyze(body, resolve_plane(body, plane_args));
  if (csv) {
    sweep::Row row;
    row.report = report;
    std::cout << sweep::csv_header() << '\n' << sweep::csv_row("input", body.dim(), row) << '\n';
  } else {
    std::cout << io::to_json(report).dump(2) << '\n';
  }
  return report.all_pass() ? 0 : 2;
}

int cmd_sweep(const std::string& config_file) {
  const sweep::SweepConfig config = sweep::config_from_json(io::load(config_file));
  const auto rows = sweep::run(config);
  const std::string csv = sweep::to_csv(config, rows);
  if (config.output.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(config.output, std::ios::binary);
    if (!out) throw InputError("cannot write " + config.output);
    out << csv;
  }
  for (const auto& row : rows)
    if (!row.report || !row.report->all_pass()) return 2;
  return 0;
}

int cmd_profiles(const std::string& body_file, const PlaneArgs& plane_args, int samples) {
  if (samples < 2) throw InputError("samples must be ≥ 2");
  const ConvexBody body = io::body_from_json(io::load(body_file));
  const Hyperplane plane = resolve_plane(body, plane_args);
  // Same side as analyze reports.
  const StabilityReport report = analyze(body, plane);
  const NormalizedPair pair =
      normalize(body, report.orientation == "given" ? plane : plane.flipped());
  io::json out = io::profile_samples(pair, samples);
  out["orientation"] = report.orientation;
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability estimates for Gruenbaum's inequality on convex polytopes"};
  app.require_subcommand(1);

  std::string body_file, config_file;
  PlaneArgs plane_args;
  bool json_out = false, csv_out = false;
  int samples = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "run the inequality chain on a body");
  analyze_cmd->add_option("body", body_file, "body JSON file")->required();
  add_plane_options(analyze_cmd, plane_args);
  auto* json_flag = analyze_cmd->add_flag("--json", json_out, "report as JSON (default)");
  analyze_cmd->add_flag("--csv", csv_out, "report as one CSV row")->excludes(json_flag);

  auto* sweep_cmd = app.add_subcommand("sweep", "analyze a generated family, write CSV");
  sweep_cmd->add_option("config", config_file, "sweep config JSON file")->required();

  auto* profiles_cmd = app.add_subcommand("profiles", "sample g, c and s for plotting");
  profiles_cmd->add_option("body", body_file, "body JSON file")->required();
  add_plane_options(profiles_cmd, plane_args);
  profiles_cmd->add_option("--samples", samples, "number of samples")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(body_file, plane_args, csv_out);
    if (*sweep_cmd) return cmd_sweep(config_file);
    if (*profiles_cmd) return cmd_profiles(body_file, plane_args, samples);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
