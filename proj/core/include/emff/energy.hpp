#pragma once

#include <cstdint>
#include <optional>

#include "emff/geometry.hpp"

namespace emff {

/// First-order radio cost model: electronics energy per bit on both ends plus
/// a distance-squared amplifier term on transmit. Sensing and processing
/// energy are outside the model.
struct RadioModel {
  double e_elec{50e-9};     // J/bit
  double eps_amp{100e-12};  // J/bit/m^2
  std::uint32_t packet_bits{4000};
  std::uint32_t hello_bits{200};

  double tx_cost(std::uint64_t bits, double distance) const {
    return e_elec * static_cast<double>(bits) +
           eps_amp * static_cast<double>(bits) * distance * distance;
  }
  double rx_cost(std::uint64_t bits) const {
    return e_elec * static_cast<double>(bits);
  }
  /// A node that cannot pay one zero-distance HELLO is operationally dead.
  double death_threshold() const {
    return e_elec * static_cast<double>(hello_bits);
  }

  friend bool operator==(const RadioModel&, const RadioModel&) = default;
};

struct NodeState {
  std::uint32_t id{0};
  Point2D position;
  double initial_energy{0.0};
  double consumed_energy{0.0};
  bool alive{true};
  std::optional<std::uint32_t> sector;
  double cumulative_tx_cost{0.0};
};

/// Fresh node; born dead if the initial charge is already below the radio's
/// death threshold.
NodeState make_node(std::uint32_t id, const Point2D& position,
                    double initial_energy, const RadioModel& radio);

/// initial - consumed, clamped at zero.
double residual_energy(const NodeState& node);

/// Debits a transmission of `bits` over `distance`. The charge is clamped at
/// the remaining energy; the node is marked dead once its residual falls below
/// the death threshold. Returns the energy actually drawn. Throws
/// DeadNodeError on a dead node.
double consume_tx(NodeState& node, std::uint64_t bits, double distance,
                  const RadioModel& radio);

/// Debits a receive of `bits` (electronics only; does not count as transfer
/// for the relative-load metric). Same death and clamping rules as consume_tx.
double consume_rx(NodeState& node, std::uint64_t bits, const RadioModel& radio);

}  // namespace emff
