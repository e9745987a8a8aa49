#include "sataoi/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sataoi {

void check_query_radius(double radius) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("ball query radius must be finite and non-negative");
  }
}

PointIndex PointIndex::build(std::span<const Vec2> points, double bucket_size) {
  if (points.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("PointIndex: too many points");
  }
  PointIndex idx;
  if (points.empty()) return idx;

  double max_x = points[0].x, max_y = points[0].y;
  idx.min_x_ = points[0].x;
  idx.min_y_ = points[0].y;
  for (const Vec2& p : points) {
    if (!is_finite(p)) throw std::invalid_argument("PointIndex: non-finite point");
    idx.min_x_ = std::min(idx.min_x_, p.x);
    idx.min_y_ = std::min(idx.min_y_, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double span_x = max_x - idx.min_x_;
  const double span_y = max_y - idx.min_y_;
  const double n = static_cast<double>(points.size());

  double b = bucket_size;
  if (!(b > 0.0)) {
    const double area = std::max(span_x, 1.0) * std::max(span_y, 1.0);
    b = std::sqrt(area / n);
  }
  b = std::max(b, std::max({span_x, span_y, 1.0}) * 1e-6);
  // Cap the bucket table at a few buckets per point.
  const double max_buckets = 4.0 * n + 1024.0;
  while ((std::floor(span_x / b) + 1.0) * (std::floor(span_y / b) + 1.0) > max_buckets) b *= 2.0;
  idx.bucket_ = b;
  idx.nx_ = static_cast<std::int64_t>(std::floor(span_x / b)) + 1;
  idx.ny_ = static_cast<std::int64_t>(std::floor(span_y / b)) + 1;

  auto bucket_of = [&](const Vec2& p) {
    const auto ix = std::min<std::int64_t>(static_cast<std::int64_t>((p.x - idx.min_x_) / b), idx.nx_ - 1);
    const auto iy = std::min<std::int64_t>(static_cast<std::int64_t>((p.y - idx.min_y_) / b), idx.ny_ - 1);
    return iy * idx.nx_ + ix;
  };

  const std::size_t buckets = static_cast<std::size_t>(idx.nx_ * idx.ny_);
  idx.bucket_start_.assign(buckets + 1, 0);
  std::vector<std::int64_t> bucket_ids(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    bucket_ids[i] = bucket_of(points[i]);
    ++idx.bucket_start_[bucket_ids[i] + 1];
  }
  for (std::size_t k = 0; k < buckets; ++k) idx.bucket_start_[k + 1] += idx.bucket_start_[k];

  std::vector<std::uint32_t> fill(idx.bucket_start_.begin(), idx.bucket_start_.end() - 1);
  idx.points_.resize(points.size());
  idx.original_.resize(points.size());
  idx.ids_.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::uint32_t slot = fill[bucket_ids[i]]++;
    idx.points_[slot] = points[i];
    idx.original_[slot] = static_cast<std::uint32_t>(i);
    idx.ids_[i] = slot;
  }
  return idx;
}

std::vector<Vec2> PointIndex::query_ball(const Vec2& center, double radius) const {
  std::vector<Vec2> out;
  scan(center, radius, [&](std::size_t slot) {
    out.push_back(points_[slot]);
    return false;
  });
  return out;
}

std::vector<std::size_t> PointIndex::query_ball_indices(const Vec2& center, double radius) const {
  std::vector<std::size_t> out;
  scan(center, radius, [&](std::size_t slot) {
    out.push_back(original_[slot]);
    return false;
  });
  return out;
}

bool PointIndex::any_in_ball(const Vec2& center, double radius) const {
  return scan(center, radius, [](std::size_t) { return true; });
}

}  // namespace sataoi
