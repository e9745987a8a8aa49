#pragma once

// Two-round collision predicates for the troweling robot against a set of
// obstacle points.
//
// Round 1 discards obstacles outside the circumscribed circle of a part
// (a ball query on the index). Round 2 runs the exact shape test on the
// survivors: a projection box test for the vehicle rectangle and a
// segment-distance test for the arm + disc capsule. Every threshold is
// inflated by the robot's safety margin. Ties on round 2 count as collision.

#include <optional>
#include <string_view>

#include "sataoi/geometry.hpp"
#include "sataoi/robot_model.hpp"
#include "sataoi/spatial_index.hpp"

namespace sataoi {

enum class CollisionCause { None, DiscOverlap, CapsuleOverlap, VehicleOverlap };

std::string_view to_string(CollisionCause cause);

struct CollisionVerdict {
  CollisionCause cause = CollisionCause::None;
  std::optional<Vec2> witness;  // first colliding obstacle

  bool collides() const { return cause != CollisionCause::None; }
  explicit operator bool() const { return collides(); }

  static CollisionVerdict clear() { return {}; }
  static CollisionVerdict hit(CollisionCause cause, const Vec2& at) { return {cause, at}; }
};

// Slack added to round-1 reject radii so boundary ties always reach round 2.
inline constexpr double kRejectSlack = 1e-9;

CollisionVerdict vehicle_collides(const RobotSpec& spec, const Frames& frames, const PointIndex& obstacles);
CollisionVerdict capsule_collides(const RobotSpec& spec, const Frames& frames, const PointIndex& obstacles);

// Disc quick check: any obstacle within R + delta of the disc center.
CollisionVerdict disc_collides(const RobotSpec& spec, const Vec2& disc_center, const PointIndex& obstacles);

// Full check for a disc-anchored placement: disc, then capsule, then
// vehicle, stopping at the first hit. Throws SwingRangeError when -angle2 is
// outside the swing range.
CollisionVerdict is_collision(const RobotSpec& spec, const PointIndex& obstacles, const Vec2& disc_center,
                              double angle1, double angle2);

// Same as is_collision with the disc quick check skipped; for callers that
// already know the disc is clear.
CollisionVerdict arm_or_vehicle_collision(const RobotSpec& spec, const PointIndex& obstacles,
                                          const DiscPlacement& placement);

// Direct point-in-shape test against the inflated union of the capsule and
// the vehicle rectangle. Shares no code with the two-round path and is used
// as ground truth in tests.
bool oracle_collides(const RobotSpec& spec, const Frames& frames, const Vec2& obstacle);

}  // namespace sataoi
