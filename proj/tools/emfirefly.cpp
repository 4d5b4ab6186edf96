// Command-line front end: single runs, the three scenario sweeps, and the
// standalone glowworm kernel check.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emff/config.hpp"
#include "emff/errors.hpp"
#include "emff/gso.hpp"
#include "emff/io.hpp"
#include "emff/simulation.hpp"
#include "emff/sweep.hpp"
#include "emff/version.hpp"

namespace {

namespace fs = std::filesystem;

void print_error(const std::string& field, const std::string& message) {
  nlohmann::json err;
  err["error"]["message"] = message;
  if (!field.empty()) err["error"]["field"] = field;
  std::cerr << err.dump() << '\n';
}

std::vector<emff::ChPolicy> parse_protocol_list(const std::string& csv) {
  std::vector<emff::ChPolicy> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string token =
        csv.substr(start, comma == std::string::npos ? csv.size() - start
                                                     : comma - start);
    if (!token.empty()) {
      const auto policy = emff::parse_ch_policy(token);
      if (!policy)
        throw emff::ConfigError("protocol", "unknown protocol \"" + token + "\"");
      out.push_back(*policy);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct CommonOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> rounds;
  std::string protocol;
};

emff::ParsedConfig base_config(const std::string& config_path,
                               const CommonOverrides& over) {
  emff::ParsedConfig parsed;
  if (config_path.empty()) {
    parsed = emff::parse_config(nlohmann::json::object());
  } else {
    parsed = emff::load_config_file(config_path);
  }
  if (over.seed) parsed.config.rng_seed = *over.seed;
  if (over.rounds) parsed.config.horizon_rounds = *over.rounds;
  if (!over.protocol.empty()) {
    const auto policy = emff::parse_ch_policy(over.protocol);
    if (!policy)
      throw emff::ConfigError("protocol",
                              "unknown protocol \"" + over.protocol + "\"");
    parsed.config.protocol = *policy;
  }
  return parsed;
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const CommonOverrides& over) {
  const emff::ParsedConfig parsed = base_config(config_path, over);
  const emff::SimulationResult result = emff::run_simulation(parsed.config);

  fs::create_directories(out_dir);
  emff::write_run_csv(fs::path(out_dir) / "run.csv", parsed.config,
                      parsed.defaulted_fields, result.records);
  emff::write_run_json(fs::path(out_dir) / "run.json", parsed.config,
                       parsed.defaulted_fields, result.summary);

  const auto& s = result.summary;
  std::cout << "protocol=" << emff::ch_policy_name(parsed.config.protocol)
            << " rounds=" << s.rounds_executed << " fnd=" << s.lifetime.fnd
            << (s.lifetime.fnd_censored ? " (censored)" : "")
            << " hnd=" << s.lifetime.hnd
            << (s.lifetime.hnd_censored ? " (censored)" : "")
            << " lnd=" << s.lifetime.lnd << " alive=" << s.final_alive
            << " final_max_relative_load="
            << (s.final_max_relative_load
                    ? emff::format_double(*s.final_max_relative_load)
                    : "nan")
            << '\n';
  return 0;
}

int cmd_sweep(std::uint32_t scenario, const std::string& config_path,
              const std::string& out_dir, const CommonOverrides& over,
              const std::vector<double>& values, std::uint32_t seeds_per_point,
              const std::string& protocols_csv, unsigned jobs) {
  const emff::ParsedConfig parsed = base_config(config_path, over);

  std::vector<std::uint64_t> seeds;
  for (std::uint32_t i = 0; i < seeds_per_point; ++i)
    seeds.push_back(parsed.config.rng_seed + i);

  std::vector<emff::ChPolicy> protocols = parse_protocol_list(protocols_csv);

  emff::SweepSpec spec;
  switch (scenario) {
    case 1:
      spec = emff::scenario_1(parsed.config, values, seeds, protocols);
      break;
    case 2:
      spec = emff::scenario_2(parsed.config, values, seeds, protocols);
      break;
    case 3:
      spec = emff::scenario_3(parsed.config, values, seeds, protocols);
      break;
    default:
      throw emff::ConfigError("scenario", "must be 1, 2 or 3");
  }
  spec.base_defaulted_fields = parsed.defaulted_fields;

  const emff::SweepResult result = emff::run_sweep(spec, out_dir, jobs);
  std::cout << "scenario " << scenario << ": "
            << spec.values.size() * spec.seeds.size() * spec.protocols.size()
            << " runs, " << result.files.size() << " files -> " << out_dir
            << '\n';
  return 0;
}

int cmd_gso_bench(const std::string& out_dir, std::uint64_t seed,
                  std::uint32_t iterations, std::uint32_t swarm,
                  double step_size, double sensing_radius) {
  emff::GsoConfig cfg;
  cfg.rng_seed = seed;
  cfg.max_iterations = iterations;
  cfg.swarm_size = swarm;
  cfg.step_size = step_size;
  cfg.sensing_radius = sensing_radius;
  cfg.initial_range = sensing_radius;

  const emff::GsoResult result = emff::run_gso(emff::two_peak_objective, cfg);

  const double capture_radius = 0.1;
  std::size_t near_right = 0, near_left = 0;
  for (const emff::Glowworm& worm : result.swarm) {
    const double dx_r = worm.position[0] - 2.0, dx_l = worm.position[0] + 2.0;
    const double dy = worm.position[1];
    if (std::sqrt(dx_r * dx_r + dy * dy) <= capture_radius) ++near_right;
    if (std::sqrt(dx_l * dx_l + dy * dy) <= capture_radius) ++near_left;
  }

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    emff::write_gso_trace_csv(fs::path(out_dir) / "gso_trace.csv", cfg,
                              result.trace);
  }
  std::cout << "swarm=" << swarm << " iterations=" << iterations
            << " seed=" << seed << " near_peak(+2,0)=" << near_right
            << " near_peak(-2,0)=" << near_left << " best_luciferin="
            << emff::format_double(result.trace.empty()
                                       ? cfg.initial_luciferin
                                       : result.trace.back().best_luciferin)
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EM-FIREFLY wireless-sensor-network simulator"};
  app.set_version_flag("--version",
                       std::string(emff::kToolName) + " " + emff::kToolVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  CommonOverrides over;
  std::uint64_t seed_flag = 0;
  std::uint32_t rounds_flag = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", seed_flag, "RNG seed override");
    cmd->add_option("--rounds", rounds_flag, "horizon override (rounds)");
  };
  auto collect_overrides = [&](CLI::App* cmd) {
    if (cmd->count("--seed")) over.seed = seed_flag;
    if (cmd->count("--rounds")) over.rounds = rounds_flag;
  };

  CLI::App* run = app.add_subcommand("run", "execute one simulation");
  add_common(run);
  run->add_option("--protocol", over.protocol,
                  "em-firefly | random-ch | max-energy-ch");

  std::uint32_t scenario = 1;
  std::vector<double> values;
  std::uint32_t seeds_per_point = 3;
  std::string protocols_csv = "em-firefly,random-ch,max-energy-ch";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* sweep = app.add_subcommand("sweep", "run a scenario sweep");
  add_common(sweep);
  sweep->add_option("--scenario", scenario, "scenario id (1|2|3)")->required();
  sweep->add_option("--values", values,
                    "swept values (default: the scenario grid)");
  sweep->add_option("--seeds", seeds_per_point, "seeds per sweep point");
  sweep->add_option("--protocols", protocols_csv, "comma-separated policies");
  sweep->add_option("--jobs", jobs, "concurrent runs");

  std::uint64_t gso_seed = 1;
  std::uint32_t gso_iterations = 200;
  std::uint32_t gso_swarm = 100;
  double gso_step = 0.03;
  double gso_sensing = 3.0;
  std::string gso_out;
  CLI::App* gso = app.add_subcommand(
      "gso-bench", "run the glowworm kernel on the two-peak objective");
  gso->add_option("--out", gso_out, "output directory for the trace CSV");
  gso->add_option("--seed", gso_seed, "RNG seed");
  gso->add_option("--iters", gso_iterations, "iterations");
  gso->add_option("--swarm", gso_swarm, "swarm size");
  gso->add_option("--step", gso_step, "movement step size");
  gso->add_option("--sensing-radius", gso_sensing, "sensing radius");

  try {
    app.parse(argc, argv);
    if (run->parsed()) {
      collect_overrides(run);
      return cmd_run(config_path, out_dir, over);
    }
    if (sweep->parsed()) {
      collect_overrides(sweep);
      return cmd_sweep(scenario, config_path, out_dir, over, values,
                       seeds_per_point, protocols_csv, jobs);
    }
    if (gso->parsed())
      return cmd_gso_bench(gso_out, gso_seed, gso_iterations, gso_swarm,
                           gso_step, gso_sensing);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    print_error("", e.what());
    return app.exit(e);
  } catch (const emff::ConfigError& e) {
    print_error(e.field(), e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error("", e.what());
    return 1;
  }
  return 0;
}
