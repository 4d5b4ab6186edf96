#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "emff/errors.hpp"
#include "emff/geometry.hpp"
#include "emff/rng.hpp"

using namespace emff;

TEST_CASE("euclidean distance basics") {
  CHECK(euclidean_distance({0, 0}, {0, 0}) == 0.0);
  CHECK(euclidean_distance({0, 0}, {3, 4}) == 5.0);
  CHECK(euclidean_distance({1, 2}, {4, 6}) == 5.0);
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Point2D a{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    const Point2D b{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    const Point2D c{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    CHECK(euclidean_distance(a, b) == euclidean_distance(b, a));
    CHECK(euclidean_distance(a, c) <=
          euclidean_distance(a, b) + euclidean_distance(b, c) + 1e-12);
    CHECK(euclidean_distance(a, b) >= 0.0);
  }
}

TEST_CASE("sector plan radius is the farthest node distance") {
  SUBCASE("single node at distance 20") {
    const std::vector<Point2D> nodes{{20, 0}};
    const SectorPlan plan = build_sector_plan(nodes, {0, 0}, 6);
    CHECK(plan.radius == 20.0);
    CHECK(plan.sinks.size() == 6);
  }
  SUBCASE("all nodes at the center degenerate to radius 0 and sector 0") {
    const std::vector<Point2D> nodes{{0, 0}, {0, 0}, {0, 0}};
    const SectorPlan plan = build_sector_plan(nodes, {0, 0}, 6);
    CHECK(plan.radius == 0.0);
    for (const Point2D& p : nodes) CHECK(assign_sector(plan, p) == 0);
  }
  SUBCASE("max over distances 5, 12, 40") {
    const std::vector<Point2D> nodes{{5, 0}, {0, 12}, {-40, 0}};
    CHECK(build_sector_plan(nodes, {0, 0}, 6).radius == 40.0);
  }
  SUBCASE("empty node list is a configuration error") {
    const std::vector<Point2D> none;
    CHECK_THROWS_AS(build_sector_plan(none, {0, 0}, 6), ConfigError);
  }
}

TEST_CASE("sinks sit on the sector bisectors at half the radius") {
  const std::vector<Point2D> nodes{{30, 0}};
  const SectorPlan plan = build_sector_plan(nodes, {0, 0}, 6);
  for (std::uint32_t s = 0; s < 6; ++s) {
    const double angle = (s + 0.5) * std::numbers::pi / 3.0;
    CHECK(plan.sinks[s].x == doctest::Approx(15 * std::cos(angle)));
    CHECK(plan.sinks[s].y == doctest::Approx(15 * std::sin(angle)));
  }
}

TEST_CASE("sector assignment follows the wedge index") {
  const std::vector<Point2D> nodes{{10, 0}};
  const SectorPlan plan = build_sector_plan(nodes, {0, 0}, 6);

  CHECK(assign_sector(plan, {5, 0}) == 0);  // angle 0 starts wedge 0

  const double theta = 359.0 * std::numbers::pi / 180.0;
  CHECK(assign_sector(plan, {5 * std::cos(theta), 5 * std::sin(theta)}) == 5);

  CHECK(assign_sector(plan, {0, 0}) == 0);  // the exact center

  CHECK_THROWS_AS(assign_sector(plan, {11, 0}), OutOfRegionError);
}

TEST_CASE("sector assignment is a partition and idempotent") {
  Rng rng(57);
  std::vector<Point2D> nodes;
  for (int i = 0; i < 400; ++i) {
    const double r = 50 * std::sqrt(rng.uniform01());
    const double t = 2 * std::numbers::pi * rng.uniform01();
    nodes.push_back({r * std::cos(t), r * std::sin(t)});
  }
  const SectorPlan plan = build_sector_plan(nodes, {0, 0}, 6);
  for (const Point2D& p : nodes) {
    const std::uint32_t s = assign_sector(plan, p);
    CHECK(s < 6);
    CHECK(assign_sector(plan, p) == s);
  }
}

TEST_CASE("hop count over a sector graph") {
  SUBCASE("direct reach is one hop") {
    const std::vector<std::pair<std::uint32_t, Point2D>> alive{{4, {0, 0}}};
    CHECK(hop_count(4, {100, 0}, alive, 250.0) == 1);
  }
  SUBCASE("two-hop chain") {
    const std::vector<std::pair<std::uint32_t, Point2D>> alive{{0, {0, 0}},
                                                               {1, {200, 0}}};
    CHECK(hop_count(0, {400, 0}, alive, 250.0) == 2);
    CHECK(hop_count(1, {400, 0}, alive, 250.0) == 1);
  }
  SUBCASE("isolated node is unreachable") {
    const std::vector<std::pair<std::uint32_t, Point2D>> alive{{0, {0, 0}}};
    CHECK_FALSE(hop_count(0, {1000, 0}, alive, 250.0).has_value());
  }
  SUBCASE("unknown source id is rejected") {
    const std::vector<std::pair<std::uint32_t, Point2D>> alive{{0, {0, 0}}};
    CHECK_THROWS_AS(hop_count(9, {1, 0}, alive, 250.0), std::invalid_argument);
  }
}

TEST_CASE("hop count is 1 exactly when the target is within range") {
  Rng rng(91);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<std::uint32_t, Point2D>> alive;
    const int n = 2 + static_cast<int>(rng.uniform_index(10));
    for (int i = 0; i < n; ++i)
      alive.push_back({static_cast<std::uint32_t>(i),
                       {rng.uniform(-300, 300), rng.uniform(-300, 300)}});
    const Point2D target{rng.uniform(-300, 300), rng.uniform(-300, 300)};
    const double range = rng.uniform(50, 400);
    for (const auto& [id, pos] : alive) {
      const auto hops = hop_count(id, target, alive, range);
      const bool direct = euclidean_distance(pos, target) <= range;
      if (direct) {
        CHECK(hops == 1);
      } else if (hops) {
        CHECK(*hops >= 2);
      }
    }
  }
}

TEST_CASE("removing an alive node never shortens another node's path") {
  Rng rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng.uniform_index(8));
    std::vector<Point2D> positions;
    for (int i = 0; i < n; ++i)
      positions.push_back({rng.uniform(0, 600), rng.uniform(0, 600)});
    const Point2D target{rng.uniform(0, 600), rng.uniform(0, 600)};
    const double range = 180.0;

    const auto before = hop_counts_to_target(positions, target, range);
    const std::size_t removed = rng.uniform_index(positions.size());
    std::vector<Point2D> pruned;
    for (std::size_t i = 0; i < positions.size(); ++i)
      if (i != removed) pruned.push_back(positions[i]);
    const auto after = hop_counts_to_target(pruned, target, range);

    std::size_t k = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (i == removed) continue;
      if (!before[i]) {
        CHECK_FALSE(after[k].has_value());  // removal cannot create paths
      } else if (after[k]) {
        CHECK(*after[k] >= *before[i]);
      }
      ++k;
    }
  }
}
