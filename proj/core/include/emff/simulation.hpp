#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "emff/config.hpp"
#include "emff/protocol.hpp"

namespace emff {

struct SimulationSummary {
  LifetimeReport lifetime;
  std::optional<double> final_max_relative_load;  // last round where defined
  std::uint32_t rounds_executed{0};
  std::uint32_t final_alive{0};
  double final_total_residual{0.0};
};

struct SimulationResult {
  std::vector<RoundRecord> records;
  SimulationSummary summary;
};

/// Seeded random placement (uniform over the deployment disk or square),
/// sector plan, and membership assignment.
Network build_network(const SimulationConfig& cfg);

/// Full run: rounds execute until the horizon, until every node is dead, or
/// until no alive node could ever pay another full packet transmission.
/// Deterministic under (config, seed).
SimulationResult run_simulation(const SimulationConfig& cfg);

}  // namespace emff
