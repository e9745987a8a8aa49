#pragma once

// Immutable spatial index over 2D points answering closed-ball queries.
//
// Points are bucketed into a uniform grid stored row-major in CSR form, so
// the buckets a query touches in one grid row form a single contiguous run
// of points. Distances are compared in squared form.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sataoi/geometry.hpp"

namespace sataoi {

class PointIndex {
 public:
  PointIndex() = default;

  // bucket_size <= 0 picks a size from the point density.
  static PointIndex build(std::span<const Vec2> points, double bucket_size = 0.0);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  double bucket_size() const { return bucket_; }

  // Point i of the construction list.
  const Vec2& point(std::size_t i) const { return points_[ids_[i]]; }

  // Points with |p - center| <= radius. Throws std::invalid_argument for a
  // negative or non-finite radius.
  std::vector<Vec2> query_ball(const Vec2& center, double radius) const;
  // Same query, answered as indices into the construction list.
  std::vector<std::size_t> query_ball_indices(const Vec2& center, double radius) const;
  // Stops at the first hit.
  bool any_in_ball(const Vec2& center, double radius) const;

  // Calls fn(point) for every point in the closed ball until fn returns
  // true. Returns whether fn stopped the scan.
  template <class Fn>
  bool visit_ball(const Vec2& center, double radius, Fn&& fn) const {
    return scan(center, radius, [&](std::size_t slot) { return fn(points_[slot]); });
  }

 private:
  template <class Fn>
  bool scan(const Vec2& center, double radius, Fn&& on_slot) const;

  double bucket_ = 1.0;
  double min_x_ = 0.0;
  double min_y_ = 0.0;
  std::int64_t nx_ = 0;
  std::int64_t ny_ = 0;
  std::vector<Vec2> points_;               // bucket order
  std::vector<std::uint32_t> original_;    // slot -> construction index
  std::vector<std::uint32_t> ids_;         // construction index -> slot
  std::vector<std::uint32_t> bucket_start_;  // nx*ny + 1 offsets
};

void check_query_radius(double radius);

template <class Fn>
bool PointIndex::scan(const Vec2& center, double radius, Fn&& on_slot) const {
  check_query_radius(radius);
  if (points_.empty()) return false;
  const double r2 = radius * radius;
  auto clamp_to = [](double v, std::int64_t hi) {
    if (!(v > 0.0)) return std::int64_t{0};
    if (v >= static_cast<double>(hi)) return hi;
    return static_cast<std::int64_t>(v);
  };
  // One bucket of slack on each side absorbs rounding in the floor.
  const double fx0 = (center.x - radius - min_x_) / bucket_ - 1.0;
  const double fx1 = (center.x + radius - min_x_) / bucket_ + 1.0;
  const double fy0 = (center.y - radius - min_y_) / bucket_ - 1.0;
  const double fy1 = (center.y + radius - min_y_) / bucket_ + 1.0;
  if (fx1 < 0.0 || fy1 < 0.0 || fx0 >= static_cast<double>(nx_) ||
      fy0 >= static_cast<double>(ny_)) {
    return false;
  }
  const std::int64_t ix0 = clamp_to(fx0, nx_ - 1);
  const std::int64_t ix1 = clamp_to(fx1, nx_ - 1);
  const std::int64_t iy0 = clamp_to(fy0, ny_ - 1);
  const std::int64_t iy1 = clamp_to(fy1, ny_ - 1);
  for (std::int64_t iy = iy0; iy <= iy1; ++iy) {
    const std::uint32_t begin = bucket_start_[iy * nx_ + ix0];
    const std::uint32_t end = bucket_start_[iy * nx_ + ix1 + 1];
    for (std::uint32_t slot = begin; slot < end; ++slot) {
      const Vec2 d = points_[slot] - center;
      if (d.x * d.x + d.y * d.y <= r2 && on_slot(slot)) return true;
    }
  }
  return false;
}

}  // namespace sataoi
