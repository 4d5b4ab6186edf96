#include "emff/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "emff/errors.hpp"

namespace emff {

double euclidean_distance(const Point2D& a, const Point2D& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

SectorPlan build_sector_plan(std::span<const Point2D> node_positions,
                             const Point2D& center,
                             std::uint32_t sector_count) {
  if (node_positions.empty())
    throw ConfigError("node_positions", "at least one node is required");
  if (sector_count == 0)
    throw ConfigError("sector_count", "must be at least 1");

  SectorPlan plan;
  plan.center = center;
  plan.sector_count = sector_count;
  for (const Point2D& p : node_positions)
    plan.radius = std::max(plan.radius, euclidean_distance(center, p));

  plan.sinks.reserve(sector_count);
  const double wedge = 2.0 * std::numbers::pi / sector_count;
  for (std::uint32_t s = 0; s < sector_count; ++s) {
    const double bisector = (s + 0.5) * wedge;
    plan.sinks.push_back({center.x + 0.5 * plan.radius * std::cos(bisector),
                          center.y + 0.5 * plan.radius * std::sin(bisector)});
  }
  return plan;
}

std::uint32_t assign_sector(const SectorPlan& plan, const Point2D& p) {
  if (euclidean_distance(plan.center, p) > plan.radius)
    throw OutOfRegionError("point lies outside the enclosing circle");

  const double dx = p.x - plan.center.x;
  const double dy = p.y - plan.center.y;
  double theta = 0.0;  // the exact center maps to sector 0
  if (dx != 0.0 || dy != 0.0) {
    theta = std::atan2(dy, dx);
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  }
  auto idx = static_cast<std::uint32_t>(
      plan.sector_count * theta / (2.0 * std::numbers::pi));
  return std::min(idx, plan.sector_count - 1);  // guard theta rounding to 2pi
}

std::vector<std::optional<std::uint32_t>> hop_counts_to_target(
    std::span<const Point2D> positions, const Point2D& target, double tx_range) {
  const std::size_t n = positions.size();
  std::vector<std::optional<std::uint32_t>> hops(n);

  std::vector<std::size_t> frontier;
  std::vector<std::size_t> unvisited;
  for (std::size_t i = 0; i < n; ++i) {
    if (euclidean_distance(positions[i], target) <= tx_range) {
      hops[i] = 1;
      frontier.push_back(i);
    } else {
      unvisited.push_back(i);
    }
  }

  std::uint32_t level = 1;
  while (!frontier.empty() && !unvisited.empty()) {
    ++level;
    std::vector<std::size_t> next;
    for (std::size_t f : frontier) {
      for (std::size_t k = 0; k < unvisited.size();) {
        const std::size_t cand = unvisited[k];
        if (euclidean_distance(positions[cand], positions[f]) <= tx_range) {
          hops[cand] = level;
          next.push_back(cand);
          unvisited[k] = unvisited.back();
          unvisited.pop_back();
        } else {
          ++k;
        }
      }
    }
    frontier = std::move(next);
  }
  return hops;
}

std::optional<std::uint32_t> hop_count(
    std::uint32_t source, const Point2D& target,
    const std::vector<std::pair<std::uint32_t, Point2D>>& alive_positions,
    double tx_range) {
  std::vector<Point2D> positions;
  positions.reserve(alive_positions.size());
  std::size_t source_index = alive_positions.size();
  for (std::size_t i = 0; i < alive_positions.size(); ++i) {
    positions.push_back(alive_positions[i].second);
    if (alive_positions[i].first == source) source_index = i;
  }
  if (source_index == alive_positions.size())
    throw std::invalid_argument("hop_count: source id not among alive nodes");
  return hop_counts_to_target(positions, target, tx_range)[source_index];
}

}  // namespace emff
