#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace emff {

struct Glowworm {
  std::vector<double> position;
  double luciferin{0.0};
  double decision_radius{0.0};
};

struct GsoConfig {
  double decay{0.4};            // fraction of luciferin lost per iteration
  double luciferin_gain{0.6};   // weight of the objective value
  double step_size{0.03};
  double sensing_radius{3.0};   // hard upper bound on the decision radius
  double range_gain{0.08};      // correction gain of the adaptive range
  std::uint32_t target_neighbors{5};
  double initial_range{3.0};
  double initial_luciferin{5.0};
  std::uint32_t swarm_size{100};
  std::uint32_t max_iterations{200};
  std::uint32_t dimension{2};
  double lower_bound{-5.0};
  double upper_bound{5.0};
  std::uint64_t rng_seed{1};

  void validate() const;  // throws ConfigError

  friend bool operator==(const GsoConfig&, const GsoConfig&) = default;
};

/// (1 - decay) * old + gain * objective value.
double update_luciferin(double old_luciferin, double fitness_value,
                        const GsoConfig& cfg);

/// Indices j != i strictly inside worm i's decision radius with strictly
/// higher luciferin, in ascending index order.
std::vector<std::size_t> brighter_neighbors(std::size_t i,
                                            std::span<const Glowworm> swarm);

/// Move probability per neighbor, proportional to the luciferin surplus.
/// Empty neighbor set yields an empty distribution (the worm stays put).
std::vector<double> move_probabilities(std::size_t i,
                                       std::span<const std::size_t> neighbors,
                                       std::span<const Glowworm> swarm);

/// Unit-direction step of length step_size from `worm` toward `toward`;
/// coincident positions leave the worm in place.
std::vector<double> step_position(const Glowworm& worm, const Glowworm& toward,
                                  const GsoConfig& cfg);

/// min(sensing_radius, max(0, r + gain * (target_neighbors - neighbor_count))).
double update_decision_range(double decision_radius, std::size_t neighbor_count,
                             const GsoConfig& cfg);

struct GsoTraceRow {
  std::uint32_t iteration{0};
  double best_luciferin{0.0};
  double mean_luciferin{0.0};
  double mean_decision_radius{0.0};
};

struct GsoResult {
  std::vector<Glowworm> swarm;
  std::vector<GsoTraceRow> trace;
};

using Objective = std::function<double(std::span<const double>)>;

/// Seeded synchronous loop: per iteration, luciferin update from the current
/// positions, one probabilistic move per worm toward a brighter neighbor
/// (neighborhoods and luciferin taken from the iteration-start snapshot), then
/// the adaptive range update. Positions stay clamped to the configured box.
GsoResult run_gso(const Objective& objective, const GsoConfig& cfg);

/// Two equal Gaussian peaks at (+2, 0) and (-2, 0) in the first two
/// coordinates; the standard multimodal check for the kernel.
double two_peak_objective(std::span<const double> x);

}  // namespace emff
