#include "emff/simulation.hpp"

#include <cmath>
#include <numbers>

#include "emff/rng.hpp"

namespace emff {

Network build_network(const SimulationConfig& cfg) {
  cfg.validate();
  Rng placement(derive_seed(cfg.rng_seed, 0));

  std::vector<NodeState> nodes;
  nodes.reserve(cfg.node_count);
  for (std::uint32_t id = 0; id < cfg.node_count; ++id) {
    Point2D pos;
    if (cfg.deployment.shape == DeploymentShape::Disk) {
      const double r = cfg.deployment.size * std::sqrt(placement.uniform01());
      const double theta = 2.0 * std::numbers::pi * placement.uniform01();
      pos = {cfg.center.x + r * std::cos(theta),
             cfg.center.y + r * std::sin(theta)};
    } else {
      pos = {placement.uniform(0.0, cfg.deployment.size),
             placement.uniform(0.0, cfg.deployment.size)};
    }
    nodes.push_back(make_node(id, pos, cfg.initial_energy, cfg.radio));
  }
  return build_network(std::move(nodes), cfg.center, cfg.sector_count,
                       cfg.radio, cfg.channel, cfg.buffer_packets);
}

SimulationResult run_simulation(const SimulationConfig& cfg) {
  cfg.validate();

  SimulationResult result;
  if (cfg.horizon_rounds == 0) {
    result.summary.lifetime.fnd_censored = true;
    result.summary.lifetime.hnd_censored = true;
    result.summary.final_alive = cfg.node_count;
    result.summary.final_total_residual =
        static_cast<double>(cfg.node_count) * cfg.initial_energy;
    return result;
  }

  Network net = build_network(cfg);
  Rng protocol_rng(derive_seed(cfg.rng_seed, 1));

  RoundOptions opt;
  opt.policy = cfg.protocol;
  opt.tx_range = cfg.tx_range;
  opt.weights = cfg.weights;
  opt.attraction = cfg.attraction;
  opt.load_metric = cfg.load_metric;

  // Once no alive node can pay a full zero-distance packet, no sector can
  // ever deliver again; further rounds would only burn the remaining charge.
  const double min_delivery_cost = net.radio.tx_cost(net.radio.packet_bits, 0.0);

  for (std::uint32_t round = 1; round <= cfg.horizon_rounds; ++round) {
    RoundRecord rec = run_round(net, opt, protocol_rng, round);
    result.records.push_back(std::move(rec));
    if (result.records.back().alive_count == 0) break;

    double best_residual = 0.0;
    for (const NodeState& node : net.nodes)
      if (node.alive)
        best_residual = std::max(best_residual, residual_energy(node));
    if (best_residual < min_delivery_cost) break;
  }

  result.summary.lifetime = network_lifetime(result.records, cfg.node_count);
  result.summary.rounds_executed =
      static_cast<std::uint32_t>(result.records.size());
  result.summary.final_alive = result.records.back().alive_count;
  result.summary.final_total_residual = result.records.back().total_residual;
  for (auto it = result.records.rbegin(); it != result.records.rend(); ++it) {
    if (it->max_relative_load) {
      result.summary.final_max_relative_load = it->max_relative_load;
      break;
    }
  }
  return result;
}

}  // namespace emff
