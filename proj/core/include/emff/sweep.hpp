#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "emff/config.hpp"
#include "emff/simulation.hpp"

namespace emff {

struct SweepSpec {
  std::uint32_t scenario_id{1};
  std::string variable;  // "node_count" | "disk_radius_m" | "initial_energy_j"
  std::vector<double> values;
  std::vector<std::uint64_t> seeds;
  std::vector<ChPolicy> protocols;
  SimulationConfig base;
  std::vector<std::string> base_defaulted_fields;

  void validate() const;
};

/// Node-count sweep at disk radius 20 m and 200 J per node.
SweepSpec scenario_1(const SimulationConfig& base,
                     std::vector<double> node_counts,
                     std::vector<std::uint64_t> seeds,
                     std::vector<ChPolicy> protocols);

/// Disk-radius sweep; the seeded unit layout rescales into each disk.
SweepSpec scenario_2(const SimulationConfig& base, std::vector<double> radii,
                     std::vector<std::uint64_t> seeds,
                     std::vector<ChPolicy> protocols);

/// Initial-energy sweep with fixed geometry.
SweepSpec scenario_3(const SimulationConfig& base,
                     std::vector<double> energies,
                     std::vector<std::uint64_t> seeds,
                     std::vector<ChPolicy> protocols);

/// The fully materialized config for one (point, seed, protocol) run.
SimulationConfig config_for_point(const SweepSpec& spec, double value,
                                  std::uint64_t seed, ChPolicy protocol);

struct AggregateRow {
  std::uint32_t scenario_id{0};
  std::string variable;
  double value{0.0};
  ChPolicy protocol{ChPolicy::EmFirefly};
  std::size_t seed_count{0};
  double fnd_mean{0.0}, fnd_stddev{0.0};
  double hnd_mean{0.0}, hnd_stddev{0.0};
  double lnd_mean{0.0}, lnd_stddev{0.0};
  double final_load_mean{0.0}, final_load_stddev{0.0};
};

struct SweepResult {
  std::vector<std::filesystem::path> files;  // per-run CSV/JSON plus aggregate
  std::vector<AggregateRow> aggregate;
};

/// Runs every (value, seed, protocol) combination, writing one round CSV and
/// one JSON summary per run plus aggregate.csv. Runs execute concurrently up
/// to `jobs`; outputs are byte-stable regardless of the job count. On a write
/// failure a partial-output manifest is left in `out_dir` and the error is
/// rethrown.
SweepResult run_sweep(const SweepSpec& spec, const std::filesystem::path& out_dir,
                      unsigned jobs = 1);

}  // namespace emff
