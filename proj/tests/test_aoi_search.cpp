#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sataoi/aoi_search.hpp"

using namespace sataoi;

namespace {

ObstacleMap walled_room(int cells, double cs) {
  const double side = cells * cs;
  return rasterize_rects(cells, cells, cs, {0, 0},
                         {{0, 0, side, cs}, {0, side - cs, side, side}, {0, 0, cs, side}, {side - cs, 0, side, side}});
}

}  // namespace

TEST_CASE("angle pairs") {
  const RobotSpec spec;
  const auto pairs = angle_pairs({}, spec);
  CHECK(pairs.size() == 312);
  CHECK(pairs.front() == AnglePair{0.0, -kPi / 2});
  CHECK(pairs[12].angle2 == kPi / 2);
  CHECK(pairs[13] == AnglePair{kPi / 12, -kPi / 2});

  SearchParams coarse;
  coarse.angular_resolution = kPi / 2;
  CHECK(angle_pairs(coarse, spec).size() == 12);

  SearchParams bad;
  bad.angular_resolution = 0.5;
  CHECK_THROWS_AS(angle_pairs(bad, spec), ParamError);
  bad = {};
  bad.envelope_coefficient = 0.0;
  CHECK_THROWS_AS(bad.validate(), ParamError);
  bad = {};
  bad.node_stride = 0;
  CHECK_THROWS_AS(bad.validate(), ParamError);

  RobotSpec narrow;
  narrow.swing_min = -0.3;
  narrow.swing_max = 0.6;
  const AngleGrid g = make_angle_grid({}, narrow);
  CHECK(g.angle2.front() == -0.6);
  CHECK(g.angle2.back() <= 0.3);
  for (double a2 : g.angle2) CHECK(narrow.swing_in_range(-a2));
}

TEST_CASE("node feasibility") {
  const RobotSpec spec = RobotSpec::troweling_default();
  const PointIndex none = PointIndex::build({});
  const auto first = node_feasible(spec, none, {0, 0}, {});
  REQUIRE(first);
  CHECK(*first == AnglePair{0.0, -kPi / 2});

  // 400 mm corridor: the disc alone needs 700 mm.
  const ObstacleMap corridor = rasterize_rects(300, 100, 10, {0, 0}, {{0, 0, 3000, 300}, {0, 700, 3000, 1000}});
  const auto pts = obstacle_points(corridor);
  const PointIndex obstacles = PointIndex::build(pts);
  const Vec2 mid = corridor.cell_center(150, 50);
  CHECK_FALSE(node_feasible(spec, obstacles, mid, {}));
  for (const auto& p : angle_pairs({}, spec)) REQUIRE(is_collision(spec, obstacles, mid, p.angle1, p.angle2));

  // Open floor, far from any obstacle.
  const std::vector<Vec2> wall{{-3000, -3000}, {3000, 3000}};
  const PointIndex sparse = PointIndex::build(wall);
  const double clearance = 995 + 142 + 437.5 + 350 + spec.safety_margin;
  CHECK(clearance < 3000 * 1.41);
  const auto w = node_feasible(spec, sparse, {0, 0}, {});
  REQUIRE(w);
  CHECK_FALSE(is_collision(spec, sparse, {0, 0}, w->angle1, w->angle2));
}

TEST_CASE("search start validation") {
  const RobotSpec spec = RobotSpec::troweling_default();
  ObstacleMap m = walled_room(80, 50);
  CHECK_THROWS_AS(troweling_search(m, spec, {0, 0}), SearchError);
  try {
    troweling_search(m, spec, {0, 0});
  } catch (const SearchError& e) {
    CHECK(e.kind() == SearchError::Kind::StartOnObstacle);
  }
  try {
    troweling_search(m, spec, {80, 3});
  } catch (const SearchError& e) {
    CHECK(e.kind() == SearchError::Kind::OutOfBounds);
  }
  // A free cell hugging the wall cannot hold the disc.
  const AoiResult r = troweling_search(m, spec, {1, 1});
  CHECK(r.status == SearchStatus::InfeasibleStart);
  CHECK(r.feasible_centers.empty());
  CHECK(r.aoi_cells.empty());
}

TEST_CASE("empty room matches exhaustive oracle") {
  const RobotSpec spec = RobotSpec::troweling_default();
  const ObstacleMap room = walled_room(200, 25);  // 5 m x 5 m
  const CellCoord start{100, 100};
  const AoiResult r = troweling_search(room, spec, start);
  REQUIRE(r.ok());
  const auto oracle = testing::component_of(room, testing::exhaustive_feasibility(room, spec, kPi / 12), start);
  CHECK(testing::sorted(r.feasible_centers) == oracle);
  CHECK(r.aoi_cells == testing::brute_force_envelope(room, oracle, spec.disc_radius));
  CHECK(r.feasible_centers.front() == room.id(start));
  CHECK(r.stats.explored_nodes >= r.feasible_centers.size());

  const PointIndex obstacles = PointIndex::build(obstacle_points(room));
  for (std::size_t k = 0; k < r.feasible_centers.size(); ++k) {
    const auto& w = r.witness_angles[k];
    REQUIRE_FALSE(is_collision(spec, obstacles, room.cell_center(r.feasible_centers[k]), w.angle1, w.angle2));
  }
  for (std::size_t id : r.aoi_cells) REQUIRE(room.at_id(id) == Cell::Free);
  CHECK(r.witness_for(room.id(start)).has_value());
  CHECK_FALSE(r.witness_for(0).has_value());
}

TEST_CASE("search is deterministic") {
  const RobotSpec spec = RobotSpec::troweling_default();
  std::mt19937_64 rng(8);
  const ObstacleMap m = testing::random_walled_map(rng, {});
  const auto feasible = testing::exhaustive_feasibility(m, spec, kPi / 12);
  const auto it = std::find(feasible.begin(), feasible.end(), 1);
  REQUIRE(it != feasible.end());
  const CellCoord start = m.coord(static_cast<std::size_t>(it - feasible.begin()));
  const AoiResult a = troweling_search(m, spec, start);
  const AoiResult b = troweling_search(m, spec, start);
  CHECK(a.feasible_centers == b.feasible_centers);
  CHECK(a.witness_angles == b.witness_angles);
  CHECK(a.aoi_cells == b.aoi_cells);
  CHECK(a.stats.collision_checks == b.stats.collision_checks);
}

TEST_CASE("node stride") {
  const RobotSpec spec = RobotSpec::troweling_default();
  const ObstacleMap room = walled_room(120, 40);
  SearchParams p;
  p.node_stride = 3;
  const AoiResult r = troweling_search(room, spec, {60, 60}, p);
  REQUIRE(r.ok());
  for (std::size_t id : r.feasible_centers) {
    const CellCoord c = room.coord(id);
    REQUIRE((c.i - 60) % 3 == 0);
    REQUIRE((c.j - 60) % 3 == 0);
  }
  // Coarser search, same envelope definition.
  CHECK(r.aoi_cells == testing::brute_force_envelope(room, testing::sorted(r.feasible_centers), spec.disc_radius));
}

TEST_CASE("envelope") {
  const ObstacleMap open(101, 101, 10, {0, 0});
  CHECK(envelope(open, {}, 350).empty());
  const std::vector<std::size_t> one{open.id(50, 50)};
  const auto disc = envelope(open, one, 350);
  CHECK(disc.size() == 3853);
  CHECK(disc == testing::brute_force_envelope(open, one, 350));
  CHECK_THROWS_AS(envelope(open, one, 0.0), ParamError);

  ObstacleMap blocked = open;
  blocked.set(51, 50, Cell::Obstacle);
  const auto d2 = envelope(blocked, one, 350);
  CHECK(d2.size() == 3852);
  CHECK(std::find(d2.begin(), d2.end(), blocked.id(51, 50)) == d2.end());

  // Dense blob of centers: interior pruning must not change the result.
  std::mt19937_64 rng(4);
  std::vector<std::size_t> blob;
  for (int j = 20; j < 80; ++j) {
    for (int i = 20; i < 80; ++i) {
      if (rng() % 7 != 0) blob.push_back(open.id(i, j));
    }
  }
  for (double radius : {5.0, 10.0, 14.0, 15.0, 25.0, 30.0, 75.0, 350.0}) {
    REQUIRE(envelope(open, blob, radius) == testing::brute_force_envelope(open, blob, radius));
  }
}
