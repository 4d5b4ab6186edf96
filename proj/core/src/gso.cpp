#include "emff/gso.hpp"

#include <algorithm>
#include <cmath>

#include "emff/errors.hpp"
#include "emff/rng.hpp"

namespace emff {

void GsoConfig::validate() const {
  if (decay < 0.0 || decay > 1.0)
    throw ConfigError("gso.decay", "must lie in [0, 1]");
  if (luciferin_gain <= 0.0)
    throw ConfigError("gso.luciferin_gain", "must be positive");
  if (step_size < 0.0) throw ConfigError("gso.step_size", "must be non-negative");
  if (sensing_radius <= 0.0)
    throw ConfigError("gso.sensing_radius", "must be positive");
  if (initial_range <= 0.0 || initial_range > sensing_radius)
    throw ConfigError("gso.initial_range", "must lie in (0, sensing_radius]");
  if (initial_luciferin < 0.0)
    throw ConfigError("gso.initial_luciferin", "must be non-negative");
  if (swarm_size < 2) throw ConfigError("gso.swarm_size", "must be at least 2");
  if (dimension == 0) throw ConfigError("gso.dimension", "must be at least 1");
  if (lower_bound >= upper_bound)
    throw ConfigError("gso.lower_bound", "must be below upper_bound");
}

double update_luciferin(double old_luciferin, double fitness_value,
                        const GsoConfig& cfg) {
  return (1.0 - cfg.decay) * old_luciferin + cfg.luciferin_gain * fitness_value;
}

namespace {

double position_distance(std::span<const double> a, std::span<const double> b) {
  double sq = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double diff = a[d] - b[d];
    sq += diff * diff;
  }
  return std::sqrt(sq);
}

}  // namespace

std::vector<std::size_t> brighter_neighbors(std::size_t i,
                                            std::span<const Glowworm> swarm) {
  std::vector<std::size_t> out;
  const Glowworm& self = swarm[i];
  for (std::size_t j = 0; j < swarm.size(); ++j) {
    if (j == i) continue;
    if (swarm[j].luciferin <= self.luciferin) continue;
    if (position_distance(swarm[j].position, self.position) < self.decision_radius)
      out.push_back(j);
  }
  return out;
}

std::vector<double> move_probabilities(std::size_t i,
                                       std::span<const std::size_t> neighbors,
                                       std::span<const Glowworm> swarm) {
  std::vector<double> probs(neighbors.size(), 0.0);
  if (neighbors.empty()) return probs;
  double total = 0.0;
  for (std::size_t k = 0; k < neighbors.size(); ++k) {
    probs[k] = swarm[neighbors[k]].luciferin - swarm[i].luciferin;
    total += probs[k];
  }
  for (double& p : probs) p /= total;
  return probs;
}

std::vector<double> step_position(const Glowworm& worm, const Glowworm& toward,
                                  const GsoConfig& cfg) {
  std::vector<double> next = worm.position;
  const double dist = position_distance(toward.position, worm.position);
  if (dist == 0.0) return next;  // direction undefined; stay put
  for (std::size_t d = 0; d < next.size(); ++d)
    next[d] += cfg.step_size * (toward.position[d] - worm.position[d]) / dist;
  return next;
}

double update_decision_range(double decision_radius, std::size_t neighbor_count,
                             const GsoConfig& cfg) {
  const double corrected =
      decision_radius + cfg.range_gain * (static_cast<double>(cfg.target_neighbors) -
                                          static_cast<double>(neighbor_count));
  return std::min(cfg.sensing_radius, std::max(0.0, corrected));
}

GsoResult run_gso(const Objective& objective, const GsoConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.rng_seed);

  GsoResult result;
  result.swarm.resize(cfg.swarm_size);
  for (Glowworm& worm : result.swarm) {
    worm.position.resize(cfg.dimension);
    for (double& coord : worm.position)
      coord = rng.uniform(cfg.lower_bound, cfg.upper_bound);
    worm.luciferin = cfg.initial_luciferin;
    worm.decision_radius = cfg.initial_range;
  }

  result.trace.reserve(cfg.max_iterations);
  std::vector<Glowworm>& swarm = result.swarm;

  for (std::uint32_t iter = 1; iter <= cfg.max_iterations; ++iter) {
    for (Glowworm& worm : swarm)
      worm.luciferin = update_luciferin(worm.luciferin, objective(worm.position), cfg);

    // Moves and range corrections are computed against the iteration-start
    // snapshot and applied synchronously.
    const std::vector<Glowworm> snapshot = swarm;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      const std::vector<std::size_t> neighbors = brighter_neighbors(i, snapshot);
      if (!neighbors.empty()) {
        const std::vector<double> probs = move_probabilities(i, neighbors, snapshot);
        const double u = rng.uniform01();
        std::size_t chosen = neighbors.back();
        double cumulative = 0.0;
        for (std::size_t k = 0; k < neighbors.size(); ++k) {
          cumulative += probs[k];
          if (u < cumulative) {
            chosen = neighbors[k];
            break;
          }
        }
        std::vector<double> next = step_position(snapshot[i], snapshot[chosen], cfg);
        for (double& coord : next)
          coord = std::clamp(coord, cfg.lower_bound, cfg.upper_bound);
        swarm[i].position = std::move(next);
      }
      swarm[i].decision_radius =
          update_decision_range(snapshot[i].decision_radius, neighbors.size(), cfg);
    }

    GsoTraceRow row;
    row.iteration = iter;
    row.best_luciferin = swarm.front().luciferin;
    double luciferin_sum = 0.0;
    double radius_sum = 0.0;
    for (const Glowworm& worm : swarm) {
      row.best_luciferin = std::max(row.best_luciferin, worm.luciferin);
      luciferin_sum += worm.luciferin;
      radius_sum += worm.decision_radius;
    }
    row.mean_luciferin = luciferin_sum / static_cast<double>(swarm.size());
    row.mean_decision_radius = radius_sum / static_cast<double>(swarm.size());
    result.trace.push_back(row);
  }
  return result;
}

double two_peak_objective(std::span<const double> x) {
  const double x0 = x.empty() ? 0.0 : x[0];
  const double x1 = x.size() < 2 ? 0.0 : x[1];
  const double width_sq = 2.25;  // Gaussian width 1.5
  const double right = (x0 - 2.0) * (x0 - 2.0) + x1 * x1;
  const double left = (x0 + 2.0) * (x0 + 2.0) + x1 * x1;
  return std::exp(-right / width_sq) + std::exp(-left / width_sq);
}

}  // namespace emff
