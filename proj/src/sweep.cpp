#include "grunbaum/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "grunbaum/generators.hpp"

namespace grunbaum::sweep {

const char* family_name(SweepConfig::Family f) {
  switch (f) {
    case SweepConfig::Family::perturbed_cone: return "perturbed_cone";
    case SweepConfig::Family::random_polygon: return "random_polygon";
    case SweepConfig::Family::random_polytope: return "random_polytope";
  }
  return "?";
}

SweepConfig config_from_json(const io::json& j) {
  if (!j.is_object()) throw InputError("sweep config must be a JSON object");
  SweepConfig c;
  try {
    const std::string family = j.at("family").get<std::string>();
    if (family == "perturbed_cone") c.family = SweepConfig::Family::perturbed_cone;
    else if (family == "random_polygon") c.family = SweepConfig::Family::random_polygon;
    else if (family == "random_polytope") c.family = SweepConfig::Family::random_polytope;
    else throw InputError("unknown family \"" + family + "\"");
    c.dim = j.value("dim", 2);
    c.count = j.value("count", 1);
    c.seed = j.value("seed", std::uint64_t{0});
    c.epsilon_list = j.value("epsilon_list", std::vector<double>{});
    c.output = j.value("output", std::string{});
    c.threads = j.value("threads", 0);
    c.max_points = j.value("max_points", 20);
  } catch (const io::json::exception& e) {
    throw InputError(std::string("bad sweep config: ") + e.what());
  }
  if (c.count < 1) throw InputError("count must be >= 1");
  if (c.dim < 2) throw InputError("dim must be >= 2");
  if (c.threads < 0) throw InputError("threads must be >= 0");
  if (c.family == SweepConfig::Family::random_polygon && c.dim != 2)
    throw InputError("random_polygon requires dim = 2");
  if (c.family == SweepConfig::Family::random_polytope &&
      (c.dim > 5 || c.max_points > 40 || c.max_points < c.dim + 2))
    throw InputError("random_polytope requires dim <= 5 and dim + 2 <= max_points <= 40");
  if (c.family == SweepConfig::Family::perturbed_cone) {
    if (c.epsilon_list.empty()) throw InputError("perturbed_cone needs a nonempty epsilon_list");
    for (double e : c.epsilon_list)
      if (!(e >= 0.0) || !std::isfinite(e)) throw InputError("epsilons must be finite and >= 0");
  }
  if (const char* env = std::getenv("GRUNBAUM_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long s = std::strtoull(env, &end, 10);
    if (*end != '\0') throw InputError("GRUNBAUM_SEED must be an unsigned integer");
    c.seed = s;
  }
  return c;
}

namespace {

Row compute_row(const SweepConfig& c, int index) {
  Row row;
  row.index = index;
  try {
    gen::Instance inst = [&] {
      if (c.family == SweepConfig::Family::perturbed_cone) {
        row.epsilon = c.epsilon_list[static_cast<std::size_t>(index)];
        return gen::perturbed_cone(c.dim, *row.epsilon);
      }
      std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                        static_cast<std::uint32_t>(index)};
      std::mt19937_64 rng(seq);
      if (c.family == SweepConfig::Family::random_polygon) return gen::random_polygon(rng);
      return gen::random_polytope(c.dim, c.max_points, rng);
    }();
    row.report = analyze(inst.body, inst.plane);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

}  // namespace

std::vector<Row> run(const SweepConfig& config) {
  const int total = config.family == SweepConfig::Family::perturbed_cone
                        ? static_cast<int>(config.epsilon_list.size())
                        : config.count;
  std::vector<Row> rows(static_cast<std::size_t>(total));
  int workers = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, total);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < total; i = next++) rows[static_cast<std::size_t>(i)] = compute_row(config, i);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

std::string csv_header() {
  std::string h =
      "csv_version,index,family,dim,epsilon,n,orientation,t,q_n,gap,d,a,b,a_prime,b_prime,k0,v,"
      "int_abs_h,int_x_h,int_abs_cs,witness_sym_diff,a_upper,rhs_main,all_pass";
  for (const auto& name : check_names()) h += ",slack_" + name;
  return h + ",error";
}

std::string csv_row(const std::string& family, int dim, const Row& row) {
  std::ostringstream out;
  out << kCsvVersion << ',' << row.index << ',' << family << ',' << dim << ','
      << (row.epsilon ? io::format_double(*row.epsilon) : "");
  if (row.report) {
    const StabilityReport& r = *row.report;
    out << ',' << r.n << ',' << r.orientation;
    for (double v : {r.t, r.q_n, r.gap, r.d, r.a, r.b, r.a_prime, r.b_prime, r.k0, r.v, r.int_abs_h,
                     r.int_x_h, r.int_abs_cs, r.witness_sym_diff, r.a_upper, r.rhs_main})
      out << ',' << io::format_double(v);
    out << ',' << (r.all_pass() ? "true" : "false");
    for (const auto& name : check_names()) out << ',' << io::format_double(r.check(name).slack);
  } else {
    out << std::string(2 + 16 + 1 + check_names().size(), ',');
  }
  out << ',' << csv_escape(row.error);
  return out.str();
}

std::string to_csv(const SweepConfig& config, const std::vector<Row>& rows) {
  std::string out = csv_header() + "\n";
  for (const auto& row : rows) out += csv_row(family_name(config.family), config.dim, row) + "\n";
  return out;
}

}  // namespace grunbaum::sweep
