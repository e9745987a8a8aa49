#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sataoi/spatial_index.hpp"

using namespace sataoi;

TEST_CASE("empty index") {
  const PointIndex idx = PointIndex::build({});
  CHECK(idx.size() == 0);
  CHECK(idx.query_ball({0, 0}, 1e9).empty());
  CHECK_FALSE(idx.any_in_ball({0, 0}, 1e9));
}

TEST_CASE("single point and closed-ball boundary") {
  const std::vector<Vec2> one{{0, 0}};
  CHECK(PointIndex::build(one).size() == 1);

  const std::vector<Vec2> pts{{0, 0}, {1, 0}};
  const PointIndex idx = PointIndex::build(pts);
  const auto hit = idx.query_ball({0, 0}, 0.0);
  REQUIRE(hit.size() == 1);
  CHECK(hit[0] == Vec2{0, 0});

  const std::vector<Vec2> disc{{0, 300}, {0, 351}};
  const PointIndex d = PointIndex::build(disc);
  const auto in = d.query_ball({0, 0}, 350);
  REQUIRE(in.size() == 1);
  CHECK(in[0] == Vec2{0, 300});
  CHECK(d.any_in_ball({0, 0}, 350));

  const std::vector<Vec2> far{{0, 351}};
  CHECK_FALSE(PointIndex::build(far).any_in_ball({0, 0}, 350));
  CHECK(PointIndex::build(far).any_in_ball({0, 0}, 351));
}

TEST_CASE("negative radius is rejected") {
  const std::vector<Vec2> pts{{0, 0}};
  const PointIndex idx = PointIndex::build(pts);
  CHECK_THROWS_AS(idx.query_ball({0, 0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(idx.any_in_ball({0, 0}, -1.0), std::invalid_argument);
}

TEST_CASE("matches linear scan") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> c(-5000, 5000), r(0, 1500);
  std::vector<Vec2> pts(10000);
  for (auto& p : pts) p = {c(rng), c(rng)};
  // Duplicates and grid-aligned points exercise bucket edges.
  for (int k = 0; k < 200; ++k) pts.push_back(pts[static_cast<std::size_t>(k)]);
  for (int k = 0; k < 100; ++k) pts.push_back({k * 10.0 + 5.0, 5.0});

  for (double bucket : {0.0, 10.0, 250.0}) {
    const PointIndex idx = PointIndex::build(pts, bucket);
    const PointIndex again = PointIndex::build(pts, bucket);
    for (int q = 0; q < 1000; ++q) {
      const Vec2 center{c(rng) * 1.2, c(rng) * 1.2};
      const double radius = q % 10 == 0 ? 0.0 : r(rng);
      auto got = idx.query_ball_indices(center, radius);
      std::sort(got.begin(), got.end());
      REQUIRE(got == testing::brute_force_ball(pts, center, radius));
      REQUIRE(idx.any_in_ball(center, radius) == !got.empty());
      auto got2 = again.query_ball_indices(center, radius);
      std::sort(got2.begin(), got2.end());
      REQUIRE(got2 == got);
    }
  }
}

TEST_CASE("large build matches linear scan") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> c(0, 20000), r(0, 800);
  std::vector<Vec2> pts(100000);
  for (auto& p : pts) p = {c(rng), c(rng)};
  const PointIndex idx = PointIndex::build(pts);
  for (int q = 0; q < 100; ++q) {
    const Vec2 center{c(rng), c(rng)};
    const double radius = r(rng);
    auto got = idx.query_ball_indices(center, radius);
    std::sort(got.begin(), got.end());
    REQUIRE(got == testing::brute_force_ball(pts, center, radius));
  }
}

TEST_CASE("visit_ball stops early") {
  std::vector<Vec2> pts;
  for (int k = 0; k < 50; ++k) pts.push_back({static_cast<double>(k), 0.0});
  const PointIndex idx = PointIndex::build(pts);
  int calls = 0;
  const bool stopped = idx.visit_ball({0, 0}, 100.0, [&](const Vec2&) { return ++calls == 3; });
  CHECK(stopped);
  CHECK(calls == 3);
}
