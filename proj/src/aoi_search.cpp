#include "sataoi/aoi_search.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <deque>
#include <string>

namespace sataoi {

void SearchParams::validate() const {
  if (!(angular_resolution > 0.0) || !std::isfinite(angular_resolution)) {
    throw ParamError("angular resolution must be positive");
  }
  const double steps = kTwoPi / angular_resolution;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
    throw ParamError("angular resolution must divide 2pi into a whole number of steps");
  }
  if (!(envelope_coefficient > 0.0) || !std::isfinite(envelope_coefficient)) {
    throw ParamError("envelope coefficient must be positive");
  }
  if (node_stride < 1) throw ParamError("node stride must be at least 1");
}

std::vector<AnglePair> AngleGrid::pairs() const {
  std::vector<AnglePair> out;
  out.reserve(size());
  for (double a1 : angle1) {
    for (double a2 : angle2) out.push_back({a1, a2});
  }
  return out;
}

AngleGrid make_angle_grid(const SearchParams& params, const RobotSpec& spec) {
  params.validate();
  AngleGrid grid;
  const double step = params.angular_resolution;
  const auto turns = static_cast<int>(std::round(kTwoPi / step));
  for (int k = 0; k < turns; ++k) grid.angle1.push_back(k * step);

  // angle2 = -s, so its range is the negated swing range.
  const double lo = -spec.swing_max;
  const double hi = -spec.swing_min;
  const double tol = 1e-9;
  for (int k = 0;; ++k) {
    double a = lo + k * step;
    if (a > hi + tol) break;
    grid.angle2.push_back(std::min(a, hi));
  }
  return grid;
}

std::vector<AnglePair> angle_pairs(const SearchParams& params, const RobotSpec& spec) {
  return make_angle_grid(params, spec).pairs();
}

NodeCheck check_node(const RobotSpec& spec, const PointIndex& obstacles, const Vec2& node_center,
                     const AngleGrid& grid) {
  NodeCheck result;
  ++result.collision_checks;
  if (disc_collides(spec, node_center, obstacles)) return result;
  for (double a1 : grid.angle1) {
    bool capsule_checked = false;
    for (double a2 : grid.angle2) {
      const Frames frames = frames_from_disc(spec, {node_center, a1, a2});
      if (!capsule_checked) {
        capsule_checked = true;
        if (capsule_collides(spec, frames, obstacles)) {
          // Every angle2 under this angle1 shares the same capsule.
          result.collision_checks += grid.angle2.size();
          break;
        }
      }
      ++result.collision_checks;
      if (!vehicle_collides(spec, frames, obstacles)) {
        result.witness = AnglePair{a1, a2};
        return result;
      }
    }
  }
  return result;
}

std::optional<AnglePair> node_feasible(const RobotSpec& spec, const PointIndex& obstacles, const Vec2& node_center,
                                       const SearchParams& params) {
  return check_node(spec, obstacles, node_center, make_angle_grid(params, spec)).witness;
}

std::optional<AnglePair> AoiResult::witness_for(std::size_t cell) const {
  for (std::size_t k = 0; k < feasible_centers.size(); ++k) {
    if (feasible_centers[k] == cell) return witness_angles[k];
  }
  return std::nullopt;
}

AoiResult troweling_search(const ObstacleMap& map, const RobotSpec& spec, CellCoord start,
                           const SearchParams& params) {
  const auto t0 = std::chrono::steady_clock::now();
  spec.validate();
  params.validate();
  if (!map.in_bounds(start)) {
    throw SearchError(SearchError::Kind::OutOfBounds, "start cell (" + std::to_string(start.i) + ", " +
                                                          std::to_string(start.j) + ") is outside the map");
  }
  if (!map.is_free(start)) {
    throw SearchError(SearchError::Kind::StartOnObstacle, "start cell (" + std::to_string(start.i) + ", " +
                                                              std::to_string(start.j) + ") is an obstacle");
  }

  const AngleGrid grid = make_angle_grid(params, spec);
  const auto obstacle_pts = obstacle_points(map);
  const PointIndex obstacles = PointIndex::build(obstacle_pts, map.cell_size());

  AoiResult result;
  result.start = start;

  enum : std::uint8_t { kUnvisited = 0, kFeasible = 1, kInfeasible = 2 };
  std::vector<std::uint8_t> state(map.cell_count(), kUnvisited);

  auto evaluate = [&](std::size_t id) {
    const NodeCheck check = check_node(spec, obstacles, map.cell_center(id), grid);
    ++result.stats.explored_nodes;
    result.stats.collision_checks += check.collision_checks;
    state[id] = check.witness ? kFeasible : kInfeasible;
    if (check.witness) {
      result.feasible_centers.push_back(id);
      result.witness_angles.push_back(*check.witness);
    }
    return check.witness.has_value();
  };

  const std::size_t start_id = map.id(start);
  if (!evaluate(start_id)) {
    result.status = SearchStatus::InfeasibleStart;
    result.feasible_centers.clear();
    result.witness_angles.clear();
    result.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
  }

  std::deque<std::size_t> frontier{start_id};
  const int stride = params.node_stride;
  while (!frontier.empty()) {
    const CellCoord current = map.coord(frontier.front());
    frontier.pop_front();
    for (const CellCoord& step : kNeighborOrder) {
      const CellCoord n{current.i + stride * step.i, current.j + stride * step.j};
      if (!map.in_bounds(n) || !map.is_free(n)) continue;
      const std::size_t id = map.id(n);
      if (state[id] != kUnvisited) continue;
      if (evaluate(id)) frontier.push_back(id);
    }
  }

  result.aoi_cells = envelope(map, result.feasible_centers, params.envelope_coefficient * spec.disc_radius);
  result.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::vector<std::size_t> envelope(const ObstacleMap& map, std::span<const std::size_t> centers, double radius) {
  if (!(radius > 0.0)) throw ParamError("envelope radius must be positive");
  std::vector<std::size_t> out;
  if (centers.empty()) return out;

  const auto free_ids = free_cells(map);
  const auto free_pts = free_points(map);
  const PointIndex free_index = PointIndex::build(free_pts, map.cell_size());

  std::vector<std::uint8_t> is_center(map.cell_count(), 0);
  for (std::size_t c : centers) is_center[c] = 1;

  // Skipping centers whose eight neighbors are all centers loses nothing
  // beyond the centers themselves: for a cell q within the radius of such a
  // center p, the neighbor of p towards q is strictly closer to q whenever
  // q != p, so descending from p ends at a non-interior center or at q.
  auto interior = [&](std::size_t id) {
    const CellCoord c = map.coord(id);
    for (const CellCoord& step : kNeighborOrder) {
      const CellCoord n{c.i + step.i, c.j + step.j};
      if (!map.in_bounds(n) || !is_center[map.id(n)]) return false;
    }
    return true;
  };

  std::vector<std::uint8_t> covered(map.cell_count(), 0);
  for (std::size_t c : centers) {
    if (map.at_id(c) == Cell::Free) covered[c] = 1;
    if (interior(c)) continue;
    for (std::size_t k : free_index.query_ball_indices(map.cell_center(c), radius)) covered[free_ids[k]] = 1;
  }
  for (std::size_t id = 0; id < covered.size(); ++id) {
    if (covered[id]) out.push_back(id);
  }
  return out;
}

}  // namespace sataoi
