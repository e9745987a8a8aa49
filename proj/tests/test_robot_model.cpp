#include <doctest.h>

#include <random>

#include "sataoi/robot_model.hpp"

using namespace sataoi;

namespace {

RobotSpec plain_spec() { return RobotSpec{}; }

void check_near(const Vec2& a, const Vec2& b, double tol = 1e-9) {
  CHECK(std::abs(a.x - b.x) <= tol);
  CHECK(std::abs(a.y - b.y) <= tol);
}

}  // namespace

TEST_CASE("default parameters") {
  const RobotSpec s = plain_spec();
  CHECK(s.vehicle_length == 875.0);
  CHECK(s.vehicle_width == 830.0);
  CHECK(s.swing_offset == 142.0);
  CHECK(s.arm_length == 995.0);
  CHECK(s.disc_radius == 350.0);
  CHECK(s.safety_margin == 0.0);
  CHECK(RobotSpec::troweling_default().safety_margin == doctest::Approx(7.0710678118654755));
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("spec validation") {
  RobotSpec s;
  s.arm_length = 300.0;
  CHECK_THROWS_AS(s.validate(), RobotSpecError);
  s = {};
  s.swing_min = 0.1;
  CHECK_THROWS_AS(s.validate(), RobotSpecError);
  s = {};
  s.safety_margin = -1.0;
  CHECK_THROWS_AS(s.validate(), RobotSpecError);
  s = {};
  s.vehicle_width = 0.0;
  CHECK_THROWS_AS(s.validate(), RobotSpecError);
}

TEST_CASE("frames_from_pose") {
  const RobotSpec s = plain_spec();
  Frames f = frames_from_pose(s, {1137, 0, 0, 0});
  check_near(f.vehicle_center, {1137, 0});
  check_near(f.swing_center, {995, 0});
  check_near(f.disc_center, {0, 0});

  f = frames_from_pose(s, {0, 1137, kPi / 2, 0});
  check_near(f.swing_center, {0, 995}, 1e-9);
  check_near(f.disc_center, {0, 0}, 1e-9);

  f = frames_from_pose(s, {0, 0, 0, kPi / 2});
  check_near(f.swing_center, {-142, 0});
  check_near(f.disc_center, {-142, -995}, 1e-9);

  CHECK_THROWS_AS(frames_from_pose(s, {0, 0, 0, 2.0}), SwingRangeError);
}

TEST_CASE("frames_from_disc") {
  const RobotSpec s = plain_spec();
  Frames f = frames_from_disc(s, {{0, 0}, 0, 0});
  check_near(f.swing_center, {995, 0});
  check_near(f.vehicle_center, {1137, 0});
  CHECK(f.yaw == 0.0);
  CHECK(f.swing == 0.0);
  check_near(f.capsule_far, {645, 0});
  check_near(f.capsule_center, {322.5, 0});
  check_near(f.arm_dir, {-1, 0});

  f = frames_from_disc(s, {{0, 0}, 0, kPi / 2});
  CHECK(f.yaw == doctest::Approx(kPi / 2));
  CHECK(f.swing == doctest::Approx(-kPi / 2));
  check_near(f.swing_center, {995, 0});
  check_near(f.vehicle_center, {995, 142}, 1e-9);

  CHECK_THROWS_AS(frames_from_disc(s, {{0, 0}, 0, -2.0}), SwingRangeError);
  // yaw normalizes into [0, 2pi)
  CHECK(frames_from_disc(s, {{0, 0}, 0, -kPi / 2}).yaw == doctest::Approx(1.5 * kPi));
}

TEST_CASE("kinematic invariants on random placements") {
  RobotSpec s = plain_spec();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> pos(-20000, 20000), a1(0, kTwoPi), a2(-kPi / 2, kPi / 2);
  std::uniform_real_distribution<double> shift(-5000, 5000), turn(-kPi, kPi);
  for (int k = 0; k < 2000; ++k) {
    const DiscPlacement p{{pos(rng), pos(rng)}, a1(rng), a2(rng)};
    const Frames f = frames_from_disc(s, p);
    REQUIRE(std::abs(distance(f.swing_center, f.disc_center) - s.arm_length) <= 1e-6);
    REQUIRE(std::abs(distance(f.vehicle_center, f.swing_center) - s.swing_offset) <= 1e-6);
    REQUIRE(std::abs(distance(f.disc_center, f.capsule_far) - (s.arm_length - s.disc_radius)) <= 1e-6);
    REQUIRE(std::abs(norm(f.heading) - 1.0) <= 1e-9);
    REQUIRE(std::abs(norm(f.arm_dir) - 1.0) <= 1e-9);

    const Frames back = frames_from_pose(s, pose_of(f));
    REQUIRE(distance(back.disc_center, f.disc_center) <= 1e-6);
    REQUIRE(distance(back.swing_center, f.swing_center) <= 1e-6);
    REQUIRE(distance(back.capsule_center, f.capsule_center) <= 1e-6);

    // Rigid motion about the disc center.
    const Vec2 t{shift(rng), shift(rng)};
    const double phi = turn(rng);
    if (!s.swing_in_range(-p.angle2)) continue;
    const Frames moved = frames_from_disc(s, {p.disc_center + t, p.angle1 + phi, p.angle2});
    auto xf = [&](const Vec2& v) { return rotate(v - p.disc_center, phi) + p.disc_center + t; };
    REQUIRE(distance(moved.vehicle_center, xf(f.vehicle_center)) <= 1e-6);
    REQUIRE(distance(moved.capsule_far, xf(f.capsule_far)) <= 1e-6);
  }
}
