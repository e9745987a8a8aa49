#include "sataoi/collision.hpp"

#include <algorithm>
#include <cmath>

namespace sataoi {

std::string_view to_string(CollisionCause cause) {
  switch (cause) {
    case CollisionCause::None: return "none";
    case CollisionCause::DiscOverlap: return "disc";
    case CollisionCause::CapsuleOverlap: return "capsule";
    case CollisionCause::VehicleOverlap: return "vehicle";
  }
  return "unknown";
}

CollisionVerdict vehicle_collides(const RobotSpec& spec, const Frames& frames, const PointIndex& obstacles) {
  const double half_len = 0.5 * spec.vehicle_length + spec.safety_margin;
  const double half_wid = 0.5 * spec.vehicle_width + spec.safety_margin;
  const Vec2 center = frames.vehicle_center;
  const Vec2 h = frames.heading;
  std::optional<Vec2> witness;
  obstacles.visit_ball(center, spec.vehicle_reject_radius() + kRejectSlack, [&](const Vec2& o) {
    const Vec2 v = o - center;
    if (std::abs(dot(v, h)) <= half_len && perp_component(v, h) <= half_wid) {
      witness = o;
      return true;
    }
    return false;
  });
  if (witness) return CollisionVerdict::hit(CollisionCause::VehicleOverlap, *witness);
  return CollisionVerdict::clear();
}

CollisionVerdict capsule_collides(const RobotSpec& spec, const Frames& frames, const PointIndex& obstacles) {
  const double reach = spec.disc_radius + spec.safety_margin;
  const double half_len = spec.capsule_half_length();
  const Vec2 c = frames.capsule_center;
  const Vec2 h = frames.arm_dir;
  std::optional<Vec2> witness;
  obstacles.visit_ball(c, spec.capsule_reject_radius() + kRejectSlack, [&](const Vec2& o) {
    const Vec2 v = o - c;
    bool hit = false;
    if (std::abs(dot(v, h)) <= half_len) {
      hit = perp_component(v, h) <= reach;
    } else {
      hit = std::min(distance(o, frames.capsule_far), distance(o, frames.disc_center)) <= reach;
    }
    if (hit) witness = o;
    return hit;
  });
  if (witness) return CollisionVerdict::hit(CollisionCause::CapsuleOverlap, *witness);
  return CollisionVerdict::clear();
}

CollisionVerdict disc_collides(const RobotSpec& spec, const Vec2& disc_center, const PointIndex& obstacles) {
  std::optional<Vec2> witness;
  obstacles.visit_ball(disc_center, spec.disc_radius + spec.safety_margin, [&](const Vec2& o) {
    witness = o;
    return true;
  });
  if (witness) return CollisionVerdict::hit(CollisionCause::DiscOverlap, *witness);
  return CollisionVerdict::clear();
}

CollisionVerdict arm_or_vehicle_collision(const RobotSpec& spec, const PointIndex& obstacles,
                                          const DiscPlacement& placement) {
  const Frames frames = frames_from_disc(spec, placement);
  if (auto v = capsule_collides(spec, frames, obstacles)) return v;
  return vehicle_collides(spec, frames, obstacles);
}

CollisionVerdict is_collision(const RobotSpec& spec, const PointIndex& obstacles, const Vec2& disc_center,
                              double angle1, double angle2) {
  const DiscPlacement placement{disc_center, angle1, angle2};
  // Derive frames first so an out-of-range swing is reported even when the
  // disc itself collides.
  const Frames frames = frames_from_disc(spec, placement);
  if (auto v = disc_collides(spec, disc_center, obstacles)) return v;
  if (auto v = capsule_collides(spec, frames, obstacles)) return v;
  return vehicle_collides(spec, frames, obstacles);
}

bool oracle_collides(const RobotSpec& spec, const Frames& frames, const Vec2& obstacle) {
  const double margin = spec.safety_margin;
  if (point_segment_distance(obstacle, frames.capsule_far, frames.disc_center) <= spec.disc_radius + margin) {
    return true;
  }
  const Vec2 local = obstacle - frames.vehicle_center;
  const double along = dot(local, frames.heading);
  const double across = dot(local, perp(frames.heading));
  return std::abs(along) <= 0.5 * spec.vehicle_length + margin &&
         std::abs(across) <= 0.5 * spec.vehicle_width + margin;
}

}  // namespace sataoi
