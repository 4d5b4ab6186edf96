#include "emff/energy.hpp"

#include <algorithm>
#include <stdexcept>

#include "emff/errors.hpp"

namespace emff {

NodeState make_node(std::uint32_t id, const Point2D& position,
                    double initial_energy, const RadioModel& radio) {
  NodeState node;
  node.id = id;
  node.position = position;
  node.initial_energy = initial_energy;
  node.alive = initial_energy >= radio.death_threshold();
  return node;
}

double residual_energy(const NodeState& node) {
  return std::max(0.0, node.initial_energy - node.consumed_energy);
}

namespace {

// Draws up to `cost` from the node's remaining charge and applies the death
// rule. Returns the amount actually debited.
double debit(NodeState& node, double cost, const RadioModel& radio,
             bool is_transfer) {
  const double spent = std::min(cost, residual_energy(node));
  node.consumed_energy += spent;
  if (is_transfer) node.cumulative_tx_cost += spent;
  if (residual_energy(node) < radio.death_threshold()) node.alive = false;
  return spent;
}

}  // namespace

double consume_tx(NodeState& node, std::uint64_t bits, double distance,
                  const RadioModel& radio) {
  if (!node.alive) throw DeadNodeError(node.id);
  if (distance < 0.0) throw std::invalid_argument("consume_tx: negative distance");
  return debit(node, radio.tx_cost(bits, distance), radio, /*is_transfer=*/true);
}

double consume_rx(NodeState& node, std::uint64_t bits, const RadioModel& radio) {
  if (!node.alive) throw DeadNodeError(node.id);
  return debit(node, radio.rx_cost(bits), radio, /*is_transfer=*/false);
}

}  // namespace emff
