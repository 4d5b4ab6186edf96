#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "emff/geometry.hpp"
#include "emff/rng.hpp"

namespace emff {

struct AttractionParams {
  double beta0{1.0};          // attraction at r = 0
  double light_gamma{1e-4};   // 1/m^2, decay gain of the distance kernel
  double alpha{0.5};          // random-step weight in [0, 1]
  std::uint32_t queue_size{3};

  void validate() const;  // throws ConfigError

  friend bool operator==(const AttractionParams&, const AttractionParams&) = default;
};

/// Election inputs collected for one node during the HELLO phase. `hops` is
/// empty when the sink is unreachable this round; such a node cannot stand as
/// cluster head.
struct NodeFeatures {
  double residual_energy{0.0};
  double sinr{0.0};
  double distance{0.0};  // node-to-sink, meters
  std::optional<std::uint32_t> hops;
};

struct FitnessWeights {
  double w1{0.4};  // residual energy
  double w2{0.2};  // SINR
  double w3{0.2};  // distance (inverted)
  double w4{0.2};  // hop count (inverted)

  void validate() const;  // each in [0,1], sum 1 within 1e-9

  friend bool operator==(const FitnessWeights&, const FitnessWeights&) = default;
};

/// beta0 * exp(-gamma * r^2).
double attraction(double r, const AttractionParams& params);

struct ClusterMember {
  std::uint32_t id{0};
  Point2D position;
  NodeFeatures features;
};

/// Residual energy discounted by the attraction kernel at r = mean distance
/// from the candidate to the other cluster members (0 for a singleton).
double node_attraction_score(std::size_t candidate,
                             std::span<const ClusterMember> cluster,
                             const AttractionParams& params);

/// Displacement toward a brighter position: attraction pull plus an
/// alpha-weighted uniform jitter, one independent draw per coordinate.
/// Exposed for kernel and benchmark use; protocol nodes never move.
Point2D firefly_step(const Point2D& x_i, const Point2D& x_j,
                     const AttractionParams& params, Rng& rng);

/// The min(k, n) ids with the highest scores, descending; ties go to the
/// lower id.
std::vector<std::uint32_t> top_k_queue(
    std::span<const std::pair<std::uint32_t, double>> scores, std::uint32_t k);

struct NormalizedFeatures {
  double energy{0.0};
  double sinr{0.0};
  double distance{0.0};
  double hops{0.0};
};

struct NormalizedCluster {
  std::vector<NormalizedFeatures> per_node;
  bool degenerate_energy{false};
  bool degenerate_sinr{false};
  bool degenerate_distance{false};
  bool degenerate_hops{false};
};

/// Share-of-sum normalization per feature family; a zero-sum family degrades
/// to the uniform 1/n share and is flagged. All entries must carry a finite
/// hop count.
NormalizedCluster normalize_features(std::span<const NodeFeatures> cluster);

/// w1*E + w2*S + w3*(1-R) + w4*(1-H). Throws ConfigError on invalid weights.
double fitness(const NormalizedFeatures& f, const FitnessWeights& w);

/// Full election for one cluster: attraction scores over the sink-reachable
/// members, top-k queue, features normalized over those members, winner by
/// maximal fitness within the queue. Ties resolve to the lower id; nullopt
/// when no member is reachable. `queue_out`, when given, receives the queue.
std::optional<std::uint32_t> elect_cluster_head(
    std::span<const ClusterMember> cluster, const FitnessWeights& weights,
    const AttractionParams& params,
    std::vector<std::uint32_t>* queue_out = nullptr);

}  // namespace emff
