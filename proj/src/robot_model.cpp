#include "sataoi/robot_model.hpp"

#include <cmath>
#include <sstream>

namespace sataoi {

RobotSpec RobotSpec::troweling_default() {
  RobotSpec spec;
  spec.safety_margin = half_cell_diagonal(10.0);
  return spec;
}

double half_cell_diagonal(double cell_size) { return cell_size * std::numbers::sqrt2 / 2.0; }

void RobotSpec::validate() const {
  auto fail = [](const std::string& what) { throw RobotSpecError("invalid robot spec: " + what); };
  const double all[] = {vehicle_length, vehicle_width, swing_offset, arm_length,
                        disc_radius,    swing_min,     swing_max,    safety_margin};
  for (double v : all) {
    if (!std::isfinite(v)) fail("non-finite parameter");
  }
  if (vehicle_length <= 0.0) fail("vehicle length must be positive");
  if (vehicle_width <= 0.0) fail("vehicle width must be positive");
  if (disc_radius <= 0.0) fail("disc radius must be positive");
  if (arm_length <= disc_radius) fail("arm length must exceed disc radius");
  if (swing_offset < 0.0) fail("swing offset must be non-negative");
  if (safety_margin < 0.0) fail("safety margin must be non-negative");
  if (!(swing_min <= 0.0 && 0.0 <= swing_max)) fail("swing range must contain 0");
}

double RobotSpec::vehicle_reject_radius() const {
  return std::hypot(0.5 * vehicle_length + safety_margin, 0.5 * vehicle_width + safety_margin);
}

double RobotSpec::capsule_reject_radius() const {
  return 0.5 * (arm_length + disc_radius) + safety_margin;
}

namespace {

void check_swing(const RobotSpec& spec, double s) {
  if (!spec.swing_in_range(s)) {
    std::ostringstream os;
    os << "swing angle " << s << " outside [" << spec.swing_min << ", " << spec.swing_max << "]";
    throw SwingRangeError(os.str());
  }
}

void fill_capsule(const RobotSpec& spec, Frames& f) {
  f.capsule_far = f.swing_center + spec.disc_radius * f.arm_dir;
  f.capsule_center = f.swing_center + (0.5 * (spec.arm_length + spec.disc_radius)) * f.arm_dir;
}

}  // namespace

Frames frames_from_pose(const RobotSpec& spec, const Pose& pose) {
  check_swing(spec, pose.s);
  Frames f;
  f.yaw = normalize_angle(pose.yaw);
  f.swing = pose.s;
  f.heading = unit_from_angle(pose.yaw);
  f.vehicle_center = {pose.x, pose.y};
  f.swing_center = f.vehicle_center - spec.swing_offset * f.heading;
  const Vec2 pivot_from_disc = unit_from_angle(pose.yaw + pose.s);
  f.disc_center = f.swing_center - spec.arm_length * pivot_from_disc;
  f.arm_dir = -pivot_from_disc;
  fill_capsule(spec, f);
  return f;
}

Frames frames_from_disc(const RobotSpec& spec, const DiscPlacement& placement) {
  check_swing(spec, placement.swing());
  Frames f;
  f.yaw = placement.yaw();
  f.swing = placement.swing();
  const Vec2 pivot_from_disc = unit_from_angle(placement.angle1);
  f.disc_center = placement.disc_center;
  f.swing_center = f.disc_center + spec.arm_length * pivot_from_disc;
  f.arm_dir = -pivot_from_disc;
  f.heading = unit_from_angle(placement.angle1 + placement.angle2);
  f.vehicle_center = f.swing_center + spec.swing_offset * f.heading;
  fill_capsule(spec, f);
  return f;
}

Pose pose_of(const Frames& frames) {
  return {frames.vehicle_center.x, frames.vehicle_center.y, frames.yaw, frames.swing};
}

}  // namespace sataoi
