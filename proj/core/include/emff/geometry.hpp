#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace emff {

struct Point2D {
  double x{0.0};
  double y{0.0};

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

double euclidean_distance(const Point2D& a, const Point2D& b);

/// Enclosing circle of the deployment plus equal angular sectors. Each sector
/// owns one sink, placed on the sector's angular bisector at half the circle
/// radius from the center.
struct SectorPlan {
  Point2D center;
  double radius{0.0};
  std::uint32_t sector_count{6};
  std::vector<Point2D> sinks;

  friend bool operator==(const SectorPlan&, const SectorPlan&) = default;
};

/// Radius is the distance of the farthest node to `center`. Throws ConfigError
/// on an empty node list or zero sector count.
SectorPlan build_sector_plan(std::span<const Point2D> node_positions,
                             const Point2D& center,
                             std::uint32_t sector_count);

/// Wedge index floor(sector_count * theta / 2pi) with theta the atan2 angle of
/// p - center normalized to [0, 2pi); the exact center maps to sector 0.
/// Throws OutOfRegionError when p lies outside the circle.
std::uint32_t assign_sector(const SectorPlan& plan, const Point2D& p);

/// BFS shortest hop count from `source` to `target` over the given alive
/// nodes, where consecutive waypoints must lie within tx_range. Direct reach
/// is 1 hop; nullopt when no path exists.
std::optional<std::uint32_t> hop_count(
    std::uint32_t source, const Point2D& target,
    const std::vector<std::pair<std::uint32_t, Point2D>>& alive_positions,
    double tx_range);

/// Hop counts for all positions at once via a single BFS rooted at `target`.
std::vector<std::optional<std::uint32_t>> hop_counts_to_target(
    std::span<const Point2D> positions, const Point2D& target, double tx_range);

}  // namespace emff
