#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "emff/energy.hpp"
#include "emff/geometry.hpp"
#include "emff/rng.hpp"
#include "emff/selection.hpp"

namespace emff {

enum class InterferenceMode { Off, SameRoundTransmitters };

/// Deterministic inverse-power path loss with a 1 m near-field clamp.
struct ChannelModel {
  double tx_power{0.1};            // W
  double path_loss_exponent{2.0};
  double noise_floor{1e-9};        // W
  InterferenceMode interference{InterferenceMode::Off};

  void validate() const;  // throws ConfigError

  friend bool operator==(const ChannelModel&, const ChannelModel&) = default;
};

/// Received power over noise plus interference; interferers contribute with
/// the same path-loss form. The concurrent set is ignored when interference
/// is off.
double compute_sinr(const Point2D& node, const Point2D& receiver,
                    const ChannelModel& channel,
                    std::span<const Point2D> concurrent_tx);

struct ClusterInfoEntry {
  std::uint32_t id{0};
  double residual_energy{0.0};
  double distance_to_sink{0.0};
  std::optional<std::uint32_t> hop_count;
  double sinr{0.0};
};

/// Per-sector election table, ascending by node id; rebuilt every round.
using ClusterInfoTable = std::vector<ClusterInfoEntry>;

enum class ChPolicy { EmFirefly, RandomCh, MaxEnergyCh };

std::string_view ch_policy_name(ChPolicy p);
std::optional<ChPolicy> parse_ch_policy(std::string_view name);

enum class LoadMetric { Cumulative, PerRound };

struct RoundRecord {
  std::uint32_t round{0};
  std::vector<std::optional<std::uint32_t>> cluster_heads;    // per sector
  std::vector<std::vector<std::uint32_t>> attraction_queues;  // per sector (em-firefly only)
  std::vector<double> tx_cost;                                // per node, this round
  std::vector<std::uint32_t> deaths;                          // ids that died this round
  std::uint32_t alive_count{0};
  std::optional<double> max_relative_load;                    // empty once all nodes are dead
  double total_residual{0.0};
  std::uint32_t sink_deliveries{0};
};

/// Mutable state of one simulation run.
struct Network {
  std::vector<NodeState> nodes;
  SectorPlan plan;
  std::vector<std::vector<std::uint32_t>> sector_members;  // ids, ascending
  RadioModel radio;
  ChannelModel channel;
  std::uint32_t buffer_packets{150};

  std::uint32_t alive_count() const;
  double total_initial() const;
  double total_residual() const;
  double total_consumed() const;
};

/// Assembles a network from explicit nodes: builds the sector plan around
/// `center` and assigns every node to its wedge.
Network build_network(std::vector<NodeState> nodes, const Point2D& center,
                      std::uint32_t sector_count, const RadioModel& radio,
                      const ChannelModel& channel, std::uint32_t buffer_packets);

/// Phase-2 exchange for one sector: the sink broadcast costs each alive member
/// one control receive, each member replies over its sink distance, and the
/// members that survived form the refreshed table (residual energy after the
/// reply, sink distance, BFS hop count, SINR at the sink).
ClusterInfoTable hello_exchange(Network& net, std::uint32_t sector,
                                double tx_range);

/// Cumulative transmission cost over residual energy, maximized over alive
/// nodes; empty when none are alive.
std::optional<double> max_relative_load(const Network& net);

struct RoundOptions {
  ChPolicy policy{ChPolicy::EmFirefly};
  double tx_range{250.0};
  FitnessWeights weights;
  AttractionParams attraction;
  LoadMetric load_metric{LoadMetric::Cumulative};
};

/// One full round: per sector, HELLO exchange, head election under the chosen
/// policy, head announcement (one control receive per alive member), one data
/// packet per member to the head (accepted up to the buffer cap), and one
/// aggregated packet from the head to the sink. `rng` is consumed only by the
/// random-ch policy.
RoundRecord run_round(Network& net, const RoundOptions& opt, Rng& rng,
                      std::uint32_t round_index);

struct LifetimeReport {
  std::uint32_t fnd{0};  // last round before the first death
  bool fnd_censored{false};
  std::uint32_t hnd{0};  // last round before half the nodes are dead
  bool hnd_censored{false};
  std::uint32_t lnd{0};  // last round that delivered to any sink
};

LifetimeReport network_lifetime(std::span<const RoundRecord> records,
                                std::uint32_t node_count);

}  // namespace emff
