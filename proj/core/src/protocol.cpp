#include "emff/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "emff/errors.hpp"

namespace emff {

void ChannelModel::validate() const {
  if (tx_power <= 0.0) throw ConfigError("channel.tx_power_w", "must be positive");
  if (path_loss_exponent <= 0.0)
    throw ConfigError("channel.path_loss_exponent", "must be positive");
  if (noise_floor <= 0.0)
    throw ConfigError("channel.noise_floor_w", "must be positive");
}

std::string_view ch_policy_name(ChPolicy p) {
  switch (p) {
    case ChPolicy::EmFirefly: return "em-firefly";
    case ChPolicy::RandomCh: return "random-ch";
    case ChPolicy::MaxEnergyCh: return "max-energy-ch";
  }
  return "unknown";
}

std::optional<ChPolicy> parse_ch_policy(std::string_view name) {
  if (name == "em-firefly") return ChPolicy::EmFirefly;
  if (name == "random-ch") return ChPolicy::RandomCh;
  if (name == "max-energy-ch") return ChPolicy::MaxEnergyCh;
  return std::nullopt;
}

namespace {

double received_power(const Point2D& from, const Point2D& at,
                      const ChannelModel& channel) {
  const double d = std::max(euclidean_distance(from, at), 1.0);
  return channel.tx_power * std::pow(d, -channel.path_loss_exponent);
}

}  // namespace

double compute_sinr(const Point2D& node, const Point2D& receiver,
                    const ChannelModel& channel,
                    std::span<const Point2D> concurrent_tx) {
  const double signal = received_power(node, receiver, channel);
  double interference = 0.0;
  if (channel.interference == InterferenceMode::SameRoundTransmitters) {
    for (const Point2D& tx : concurrent_tx)
      interference += received_power(tx, receiver, channel);
  }
  return signal / (channel.noise_floor + interference);
}

std::uint32_t Network::alive_count() const {
  std::uint32_t count = 0;
  for (const NodeState& node : nodes) count += node.alive ? 1 : 0;
  return count;
}

double Network::total_initial() const {
  double sum = 0.0;
  for (const NodeState& node : nodes) sum += node.initial_energy;
  return sum;
}

double Network::total_residual() const {
  double sum = 0.0;
  for (const NodeState& node : nodes) sum += residual_energy(node);
  return sum;
}

double Network::total_consumed() const {
  double sum = 0.0;
  for (const NodeState& node : nodes) sum += node.consumed_energy;
  return sum;
}

Network build_network(std::vector<NodeState> nodes, const Point2D& center,
                      std::uint32_t sector_count, const RadioModel& radio,
                      const ChannelModel& channel, std::uint32_t buffer_packets) {
  Network net;
  net.nodes = std::move(nodes);
  net.radio = radio;
  net.channel = channel;
  net.buffer_packets = buffer_packets;

  std::vector<Point2D> positions;
  positions.reserve(net.nodes.size());
  for (const NodeState& node : net.nodes) positions.push_back(node.position);
  net.plan = build_sector_plan(positions, center, sector_count);

  net.sector_members.assign(sector_count, {});
  for (NodeState& node : net.nodes) {
    node.sector = assign_sector(net.plan, node.position);
    net.sector_members[*node.sector].push_back(node.id);
  }
  for (auto& members : net.sector_members)
    std::sort(members.begin(), members.end());
  return net;
}

ClusterInfoTable hello_exchange(Network& net, std::uint32_t sector,
                                double tx_range) {
  const Point2D sink = net.plan.sinks[sector];

  // Sink broadcast: one control receive per alive member.
  for (std::uint32_t id : net.sector_members[sector]) {
    NodeState& node = net.nodes[id];
    if (node.alive) consume_rx(node, net.radio.hello_bits, net.radio);
  }
  // Replies over each member's distance to the sink. A node that cannot pay
  // the full reply dies here and drops out of the table.
  for (std::uint32_t id : net.sector_members[sector]) {
    NodeState& node = net.nodes[id];
    if (node.alive)
      consume_tx(node, net.radio.hello_bits,
                 euclidean_distance(node.position, sink), net.radio);
  }

  std::vector<std::uint32_t> survivors;
  std::vector<Point2D> positions;
  for (std::uint32_t id : net.sector_members[sector]) {
    if (net.nodes[id].alive) {
      survivors.push_back(id);
      positions.push_back(net.nodes[id].position);
    }
  }

  const std::vector<std::optional<std::uint32_t>> hops =
      hop_counts_to_target(positions, sink, tx_range);

  ClusterInfoTable table;
  table.reserve(survivors.size());
  std::vector<Point2D> others;
  for (std::size_t k = 0; k < survivors.size(); ++k) {
    const NodeState& node = net.nodes[survivors[k]];
    others.clear();
    if (net.channel.interference == InterferenceMode::SameRoundTransmitters) {
      for (std::size_t j = 0; j < survivors.size(); ++j)
        if (j != k) others.push_back(positions[j]);
    }
    ClusterInfoEntry entry;
    entry.id = node.id;
    entry.residual_energy = residual_energy(node);
    entry.distance_to_sink = euclidean_distance(node.position, sink);
    entry.hop_count = hops[k];
    entry.sinr = compute_sinr(node.position, sink, net.channel, others);
    table.push_back(entry);
  }
  return table;
}

std::optional<double> max_relative_load(const Network& net) {
  std::optional<double> worst;
  for (const NodeState& node : net.nodes) {
    if (!node.alive) continue;
    const double ratio = node.cumulative_tx_cost / residual_energy(node);
    if (!worst || ratio > *worst) worst = ratio;
  }
  return worst;
}

namespace {

std::optional<std::uint32_t> elect_head(const Network& net,
                                        const ClusterInfoTable& table,
                                        const RoundOptions& opt, Rng& rng,
                                        std::vector<std::uint32_t>& queue_out) {
  switch (opt.policy) {
    case ChPolicy::EmFirefly: {
      std::vector<ClusterMember> members;
      members.reserve(table.size());
      for (const ClusterInfoEntry& entry : table) {
        ClusterMember m;
        m.id = entry.id;
        m.position = net.nodes[entry.id].position;
        m.features = {entry.residual_energy, entry.sinr, entry.distance_to_sink,
                      entry.hop_count};
        members.push_back(m);
      }
      return elect_cluster_head(members, opt.weights, opt.attraction, &queue_out);
    }
    case ChPolicy::RandomCh:
      return table[rng.uniform_index(table.size())].id;
    case ChPolicy::MaxEnergyCh: {
      std::size_t best = 0;
      for (std::size_t i = 1; i < table.size(); ++i)
        if (table[i].residual_energy > table[best].residual_energy) best = i;
      return table[best].id;  // ties keep the lower id (table is ascending)
    }
  }
  return std::nullopt;
}

}  // namespace

RoundRecord run_round(Network& net, const RoundOptions& opt, Rng& rng,
                      std::uint32_t round_index) {
  const std::size_t n = net.nodes.size();
  const std::uint32_t sectors = net.plan.sector_count;

  RoundRecord rec;
  rec.round = round_index;
  rec.cluster_heads.assign(sectors, std::nullopt);
  rec.attraction_queues.assign(sectors, {});
  rec.tx_cost.assign(n, 0.0);

  std::vector<char> alive_before(n);
  std::vector<double> tx_before(n);
  for (std::size_t i = 0; i < n; ++i) {
    alive_before[i] = net.nodes[i].alive ? 1 : 0;
    tx_before[i] = net.nodes[i].cumulative_tx_cost;
  }

  for (std::uint32_t s = 0; s < sectors; ++s) {
    const ClusterInfoTable table = hello_exchange(net, s, opt.tx_range);
    if (table.empty()) continue;  // sector idle this round

    const std::optional<std::uint32_t> head_id =
        elect_head(net, table, opt, rng, rec.attraction_queues[s]);
    if (!head_id) continue;  // no reachable candidate; sector idle
    rec.cluster_heads[s] = head_id;

    NodeState& head = net.nodes[*head_id];
    const Point2D head_pos = head.position;

    // Head identity reaches every alive member (head included) via the sink.
    for (std::uint32_t id : net.sector_members[s]) {
      NodeState& node = net.nodes[id];
      if (node.alive) consume_rx(node, net.radio.hello_bits, net.radio);
    }

    // Data collection: one packet per member, accepted up to the buffer cap.
    // A packet counts as delivered only when the sender paid the full cost.
    std::uint32_t accepted = 0;
    for (std::uint32_t id : net.sector_members[s]) {
      if (id == *head_id) continue;
      NodeState& node = net.nodes[id];
      if (!node.alive) continue;
      const double d = euclidean_distance(node.position, head_pos);
      const double need = net.radio.tx_cost(net.radio.packet_bits, d);
      const double paid = consume_tx(node, net.radio.packet_bits, d, net.radio);
      if (paid >= need && head.alive && accepted < net.buffer_packets) {
        consume_rx(head, net.radio.packet_bits, net.radio);
        ++accepted;
      }
    }

    // Aggregate and forward one packet to the sink.
    if (head.alive) {
      const double d = euclidean_distance(head_pos, net.plan.sinks[s]);
      const double need = net.radio.tx_cost(net.radio.packet_bits, d);
      const double paid = consume_tx(head, net.radio.packet_bits, d, net.radio);
      if (paid >= need) ++rec.sink_deliveries;
    }
  }

  double residual_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const NodeState& node = net.nodes[i];
    rec.tx_cost[i] = node.cumulative_tx_cost - tx_before[i];
    if (alive_before[i] && !node.alive)
      rec.deaths.push_back(node.id);
    if (node.alive) ++rec.alive_count;
    residual_sum += residual_energy(node);

    if (node.alive) {
      const double numerator = opt.load_metric == LoadMetric::Cumulative
                                   ? node.cumulative_tx_cost
                                   : rec.tx_cost[i];
      const double ratio = numerator / residual_energy(node);
      if (!rec.max_relative_load || ratio > *rec.max_relative_load)
        rec.max_relative_load = ratio;
    }
  }
  rec.total_residual = residual_sum;
  return rec;
}

LifetimeReport network_lifetime(std::span<const RoundRecord> records,
                                std::uint32_t node_count) {
  LifetimeReport report;
  if (records.empty()) {
    report.fnd_censored = true;
    report.hnd_censored = true;
    return report;
  }

  const std::uint32_t last_round = records.back().round;
  const std::uint32_t half = (node_count + 1) / 2;

  bool first_death_seen = false;
  std::uint32_t dead = 0;
  bool half_seen = false;
  for (const RoundRecord& rec : records) {
    if (!first_death_seen && !rec.deaths.empty()) {
      report.fnd = rec.round - 1;
      first_death_seen = true;
    }
    dead += static_cast<std::uint32_t>(rec.deaths.size());
    if (!half_seen && dead >= half) {
      report.hnd = rec.round - 1;
      half_seen = true;
    }
    if (rec.sink_deliveries > 0) report.lnd = rec.round;
  }
  if (!first_death_seen) {
    report.fnd = last_round;
    report.fnd_censored = true;
  }
  if (!half_seen) {
    report.hnd = last_round;
    report.hnd_censored = true;
  }
  return report;
}

}  // namespace emff
