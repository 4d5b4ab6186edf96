#include "emff/selection.hpp"

#include <algorithm>
#include <cmath>

#include "emff/errors.hpp"

namespace emff {

void AttractionParams::validate() const {
  if (beta0 <= 0.0) throw ConfigError("attraction.beta0", "must be positive");
  if (light_gamma < 0.0)
    throw ConfigError("attraction.light_gamma", "must be non-negative");
  if (alpha < 0.0 || alpha > 1.0)
    throw ConfigError("attraction.alpha", "must lie in [0, 1]");
  if (queue_size == 0)
    throw ConfigError("attraction.queue_size", "must be at least 1");
}

void FitnessWeights::validate() const {
  for (double w : {w1, w2, w3, w4}) {
    if (w < 0.0 || w > 1.0)
      throw ConfigError("weights", "each weight must lie in [0, 1]");
  }
  if (std::abs(w1 + w2 + w3 + w4 - 1.0) > 1e-9)
    throw ConfigError("weights", "w1 + w2 + w3 + w4 must equal 1");
}

double attraction(double r, const AttractionParams& params) {
  return params.beta0 * std::exp(-params.light_gamma * r * r);
}

double node_attraction_score(std::size_t candidate,
                             std::span<const ClusterMember> cluster,
                             const AttractionParams& params) {
  const ClusterMember& self = cluster[candidate];
  double mean_dist = 0.0;
  if (cluster.size() > 1) {
    double sum = 0.0;
    for (std::size_t j = 0; j < cluster.size(); ++j) {
      if (j == candidate) continue;
      sum += euclidean_distance(self.position, cluster[j].position);
    }
    mean_dist = sum / static_cast<double>(cluster.size() - 1);
  }
  return self.features.residual_energy *
         std::exp(-params.light_gamma * mean_dist * mean_dist);
}

Point2D firefly_step(const Point2D& x_i, const Point2D& x_j,
                     const AttractionParams& params, Rng& rng) {
  const double pull = attraction(euclidean_distance(x_i, x_j), params);
  Point2D delta;
  delta.x = pull * (x_j.x - x_i.x) + params.alpha * (rng.uniform01() - 0.5);
  delta.y = pull * (x_j.y - x_i.y) + params.alpha * (rng.uniform01() - 0.5);
  return delta;
}

std::vector<std::uint32_t> top_k_queue(
    std::span<const std::pair<std::uint32_t, double>> scores, std::uint32_t k) {
  std::vector<std::pair<std::uint32_t, double>> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  const std::size_t take = std::min<std::size_t>(k, sorted.size());
  std::vector<std::uint32_t> queue;
  queue.reserve(take);
  for (std::size_t i = 0; i < take; ++i) queue.push_back(sorted[i].first);
  return queue;
}

NormalizedCluster normalize_features(std::span<const NodeFeatures> cluster) {
  NormalizedCluster out;
  const std::size_t n = cluster.size();
  out.per_node.resize(n);
  if (n == 0) return out;

  double sum_energy = 0.0, sum_sinr = 0.0, sum_dist = 0.0, sum_hops = 0.0;
  for (const NodeFeatures& f : cluster) {
    if (!f.hops)
      throw std::invalid_argument("normalize_features: unreachable node in cluster");
    sum_energy += f.residual_energy;
    sum_sinr += f.sinr;
    sum_dist += f.distance;
    sum_hops += static_cast<double>(*f.hops);
  }

  const double uniform = 1.0 / static_cast<double>(n);
  out.degenerate_energy = sum_energy <= 0.0;
  out.degenerate_sinr = sum_sinr <= 0.0;
  out.degenerate_distance = sum_dist <= 0.0;
  out.degenerate_hops = sum_hops <= 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    const NodeFeatures& f = cluster[i];
    NormalizedFeatures& v = out.per_node[i];
    v.energy = out.degenerate_energy ? uniform : f.residual_energy / sum_energy;
    v.sinr = out.degenerate_sinr ? uniform : f.sinr / sum_sinr;
    v.distance = out.degenerate_distance ? uniform : f.distance / sum_dist;
    v.hops = out.degenerate_hops ? uniform
                                 : static_cast<double>(*f.hops) / sum_hops;
  }
  return out;
}

double fitness(const NormalizedFeatures& f, const FitnessWeights& w) {
  w.validate();
  return w.w1 * f.energy + w.w2 * f.sinr + w.w3 * (1.0 - f.distance) +
         w.w4 * (1.0 - f.hops);
}

std::optional<std::uint32_t> elect_cluster_head(
    std::span<const ClusterMember> cluster, const FitnessWeights& weights,
    const AttractionParams& params, std::vector<std::uint32_t>* queue_out) {
  weights.validate();
  params.validate();

  // Only sink-reachable members stand for election.
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < cluster.size(); ++i)
    if (cluster[i].features.hops) eligible.push_back(i);
  if (eligible.empty()) return std::nullopt;

  std::vector<std::pair<std::uint32_t, double>> scores;
  scores.reserve(eligible.size());
  for (std::size_t idx : eligible)
    scores.emplace_back(cluster[idx].id, node_attraction_score(idx, cluster, params));

  const std::vector<std::uint32_t> queue = top_k_queue(scores, params.queue_size);
  if (queue_out) *queue_out = queue;

  std::vector<NodeFeatures> features;
  features.reserve(eligible.size());
  for (std::size_t idx : eligible) features.push_back(cluster[idx].features);
  const NormalizedCluster normalized = normalize_features(features);

  std::optional<std::uint32_t> winner;
  double best = 0.0;
  for (std::size_t k = 0; k < eligible.size(); ++k) {
    const std::uint32_t id = cluster[eligible[k]].id;
    if (std::find(queue.begin(), queue.end(), id) == queue.end()) continue;
    const double f = fitness(normalized.per_node[k], weights);
    if (!winner || f > best || (f == best && id < *winner)) {
      winner = id;
      best = f;
    }
  }
  return winner;
}

}  // namespace emff
