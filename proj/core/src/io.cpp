#include "emff/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "emff/errors.hpp"
#include "emff/version.hpp"

namespace emff {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}

void write_provenance(std::ostream& out, const SimulationConfig& cfg,
                      std::span<const std::string> defaulted_fields) {
  out << "# " << kToolName << ' ' << kToolVersion << " seed=" << cfg.rng_seed
      << " config_hash=" << config_hash_hex(cfg)
      << " protocol=" << ch_policy_name(cfg.protocol) << '\n';
  if (!defaulted_fields.empty()) {
    out << "# defaults:";
    for (std::size_t i = 0; i < defaulted_fields.size(); ++i)
      out << (i == 0 ? " " : ",") << defaulted_fields[i];
    out << '\n';
  }
}

}  // namespace

void write_run_csv(const std::filesystem::path& path,
                   const SimulationConfig& cfg,
                   std::span<const std::string> defaulted_fields,
                   std::span<const RoundRecord> records) {
  std::ofstream out = open_out(path);
  write_provenance(out, cfg, defaulted_fields);
  out << "round,protocol,alive,deaths,total_residual_j,max_relative_load,ch_ids\n";
  for (const RoundRecord& rec : records) {
    out << rec.round << ',' << ch_policy_name(cfg.protocol) << ','
        << rec.alive_count << ',' << rec.deaths.size() << ','
        << format_double(rec.total_residual) << ','
        << (rec.max_relative_load ? format_double(*rec.max_relative_load)
                                  : "nan")
        << ',';
    for (std::size_t s = 0; s < rec.cluster_heads.size(); ++s) {
      if (s) out << ';';
      if (rec.cluster_heads[s])
        out << *rec.cluster_heads[s];
      else
        out << '-';
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_run_json(const std::filesystem::path& path,
                    const SimulationConfig& cfg,
                    std::span<const std::string> defaulted_fields,
                    const SimulationSummary& summary) {
  nlohmann::json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["seed"] = cfg.rng_seed;
  doc["config_hash"] = config_hash_hex(cfg);
  doc["protocol"] = std::string(ch_policy_name(cfg.protocol));
  doc["config"] = render_config(cfg);
  doc["defaults_applied"] = defaulted_fields;

  nlohmann::json s;
  s["rounds_executed"] = summary.rounds_executed;
  s["fnd"] = summary.lifetime.fnd;
  s["fnd_censored"] = summary.lifetime.fnd_censored;
  s["hnd"] = summary.lifetime.hnd;
  s["hnd_censored"] = summary.lifetime.hnd_censored;
  s["lnd"] = summary.lifetime.lnd;
  if (summary.final_max_relative_load)
    s["final_max_relative_load"] = *summary.final_max_relative_load;
  else
    s["final_max_relative_load"] = nullptr;
  s["final_alive"] = summary.final_alive;
  s["final_total_residual_j"] = summary.final_total_residual;
  doc["summary"] = s;

  std::ofstream out = open_out(path);
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

nlohmann::json gso_config_json(const GsoConfig& cfg) {
  nlohmann::json doc;
  doc["decay"] = cfg.decay;
  doc["luciferin_gain"] = cfg.luciferin_gain;
  doc["step_size"] = cfg.step_size;
  doc["sensing_radius"] = cfg.sensing_radius;
  doc["range_gain"] = cfg.range_gain;
  doc["target_neighbors"] = cfg.target_neighbors;
  doc["initial_range"] = cfg.initial_range;
  doc["initial_luciferin"] = cfg.initial_luciferin;
  doc["swarm_size"] = cfg.swarm_size;
  doc["max_iterations"] = cfg.max_iterations;
  doc["dimension"] = cfg.dimension;
  doc["lower_bound"] = cfg.lower_bound;
  doc["upper_bound"] = cfg.upper_bound;
  doc["rng_seed"] = cfg.rng_seed;
  return doc;
}

void write_gso_trace_csv(const std::filesystem::path& path, const GsoConfig& cfg,
                         std::span<const GsoTraceRow> trace) {
  std::ofstream out = open_out(path);
  out << "# " << kToolName << ' ' << kToolVersion << " seed=" << cfg.rng_seed
      << " config_hash=" << hex64(fnv1a64(gso_config_json(cfg).dump())) << '\n';
  out << "iteration,best_luciferin,mean_luciferin,mean_decision_radius\n";
  for (const GsoTraceRow& row : trace) {
    out << row.iteration << ',' << format_double(row.best_luciferin) << ','
        << format_double(row.mean_luciferin) << ','
        << format_double(row.mean_decision_radius) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace emff
