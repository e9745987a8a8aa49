#include "sataoi/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace sataoi {

double normalize_angle(double radians) {
  double a = std::fmod(radians, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  if (a >= kTwoPi) a = 0.0;
  return a;
}

AngleRad AngleRad::normalized() const { return AngleRad(normalize_angle(value_)); }

Vec2 unit_from_angle(double radians) { return {std::cos(radians), std::sin(radians)}; }

Vec2 rotate(const Vec2& v, double radians) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = squared_norm(ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  // Pick the nearer endpoint explicitly at the clamps so the result is
  // symmetric in (a, b).
  if (t == 0.0) return distance(p, a);
  if (t == 1.0) return distance(p, b);
  return std::abs(cross(ab, p - a)) / std::sqrt(len2);
}

double perp_component(const Vec2& v, const Vec2& u) {
  const double along = dot(v, u);
  const double radicand = squared_norm(v) - along * along;
  if (radicand >= 0.0) return std::sqrt(radicand);
  assert(radicand >= -1e-6 && "perp_component: u is not a unit vector");
  return 0.0;
}

}  // namespace sataoi
