#pragma once

// 2D vector primitives and distance kernels. Lengths are millimeters,
// angles are radians.

#include <cmath>
#include <numbers>

namespace sataoi {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// z-component of the 3D cross product.
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

constexpr double squared_norm(const Vec2& v) { return dot(v, v); }

inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

inline double distance(const Vec2& a, const Vec2& b) { return norm(a - b); }

constexpr double squared_distance(const Vec2& a, const Vec2& b) { return squared_norm(a - b); }

// Counterclockwise quarter turn.
constexpr Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

inline bool is_finite(const Vec2& v) { return std::isfinite(v.x) && std::isfinite(v.y); }

// Heading angle with canonical form in [0, 2pi).
class AngleRad {
 public:
  constexpr AngleRad() = default;
  constexpr explicit AngleRad(double radians) : value_(radians) {}

  constexpr double value() const { return value_; }
  AngleRad normalized() const;

 private:
  double value_ = 0.0;
};

// Wraps an angle into [0, 2pi).
double normalize_angle(double radians);

Vec2 unit_from_angle(double radians);
inline Vec2 unit_from_angle(AngleRad a) { return unit_from_angle(a.value()); }

Vec2 rotate(const Vec2& v, double radians);

// Euclidean distance from p to the closed segment [a, b]. a == b is allowed.
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

// Length of the component of v orthogonal to the unit vector u, i.e.
// sqrt(|v|^2 - (v.u)^2). A radicand in [-1e-6, 0) from rounding is clamped
// to zero; anything more negative means u was not unit length (asserted).
double perp_component(const Vec2& v, const Vec2& u);

}  // namespace sataoi
