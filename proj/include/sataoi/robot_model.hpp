#pragma once

// Swing-arm troweling robot: physical parameters and the kinematic chain
// linking disc center, swing-arm center and vehicle center.
//
// Frame conventions (all in world millimeters):
//   V_c = S_c + L_vs * h                 h  = (cos yaw, sin yaw)
//   S_c = D_c + L_s * (cos(yaw+s), sin(yaw+s))
// The arm + disc avoidance region is the capsule around segment
// [D'_c, D_c] with radius R, where D'_c = S_c + R * h' and h' is the unit
// vector from S_c towards D_c. Its center C is the midpoint of that segment.

#include <stdexcept>
#include <string>

#include "sataoi/geometry.hpp"

namespace sataoi {

class SwingRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class RobotSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RobotSpec {
  double vehicle_length = 875.0;  // V_l
  double vehicle_width = 830.0;   // V_w
  double swing_offset = 142.0;    // L_vs, vehicle center ahead of arm pivot
  double arm_length = 995.0;      // L_s, pivot to disc center
  double disc_radius = 350.0;     // R
  double swing_min = -kPi / 2.0;
  double swing_max = kPi / 2.0;
  double safety_margin = 0.0;     // delta, inflates every collision threshold

  // The prototype robot with the margin set to half a 10 mm cell diagonal.
  static RobotSpec troweling_default();

  // Throws RobotSpecError when the parameter invariants do not hold.
  void validate() const;

  bool swing_in_range(double s) const { return s >= swing_min && s <= swing_max; }

  // Circumscribed radius of the margin-inflated vehicle rectangle.
  double vehicle_reject_radius() const;
  // Circumscribed radius of the margin-inflated arm capsule.
  double capsule_reject_radius() const;
  // Half-length of the capsule core segment, (L_s - R) / 2.
  double capsule_half_length() const { return 0.5 * (arm_length - disc_radius); }
};

// Half of the diagonal of a square cell, the default safety margin.
double half_cell_diagonal(double cell_size);

struct Pose {
  double x = 0.0;    // vehicle center
  double y = 0.0;
  double yaw = 0.0;  // [0, 2pi)
  double s = 0.0;    // swing-arm angle
};

struct DiscPlacement {
  Vec2 disc_center;
  double angle1 = 0.0;  // arm direction from disc center to pivot
  double angle2 = 0.0;  // vehicle rotation relative to the arm

  double yaw() const { return normalize_angle(angle1 + angle2); }
  double swing() const { return -angle2; }
};

struct Frames {
  Vec2 disc_center;    // D_c
  Vec2 swing_center;   // S_c
  Vec2 vehicle_center; // V_c
  Vec2 heading;        // h
  Vec2 arm_dir;        // h', unit S_c -> D_c
  Vec2 capsule_center; // C
  Vec2 capsule_far;    // D'_c
  double yaw = 0.0;
  double swing = 0.0;
};

Frames frames_from_pose(const RobotSpec& spec, const Pose& pose);
Frames frames_from_disc(const RobotSpec& spec, const DiscPlacement& placement);

// Vehicle pose read back from a frame set.
Pose pose_of(const Frames& frames);

}  // namespace sataoi
