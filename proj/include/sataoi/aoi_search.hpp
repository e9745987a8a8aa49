#pragma once

// Area-of-interest search. The disc center is flood-filled over free cells
// from a start cell: a neighbor joins the search when at least one sampled
// (angle1, angle2) placement of the robot with its disc there is collision
// free. The AOI is the union of troweling discs over all admitted centers,
// clipped to free cells.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sataoi/collision.hpp"
#include "sataoi/obstacle_map.hpp"
#include "sataoi/robot_model.hpp"
#include "sataoi/spatial_index.hpp"

namespace sataoi {

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SearchError : public std::runtime_error {
 public:
  enum class Kind { OutOfBounds, StartOnObstacle };
  SearchError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct SearchParams {
  double angular_resolution = kPi / 12.0;
  double envelope_coefficient = 1.0;  // envelope radius = coefficient * R
  int node_stride = 1;                // neighbor step in cells

  void validate() const;
};

struct AnglePair {
  double angle1 = 0.0;
  double angle2 = 0.0;
  bool operator==(const AnglePair&) const = default;
};

// Sampled angles. Pairs are enumerated angle1-major, both ascending.
struct AngleGrid {
  std::vector<double> angle1;  // 0, step, ..., 2pi - step
  std::vector<double> angle2;  // -swing_max ... -swing_min, both ends included

  std::size_t size() const { return angle1.size() * angle2.size(); }
  std::vector<AnglePair> pairs() const;
};

AngleGrid make_angle_grid(const SearchParams& params, const RobotSpec& spec);
std::vector<AnglePair> angle_pairs(const SearchParams& params, const RobotSpec& spec);

struct NodeCheck {
  std::optional<AnglePair> witness;
  std::size_t collision_checks = 0;
};

// First collision-free pair in enumeration order, if any. The disc check
// does not depend on the angles, so it runs once; the capsule check depends
// only on angle1 and runs once per angle1.
NodeCheck check_node(const RobotSpec& spec, const PointIndex& obstacles, const Vec2& node_center,
                     const AngleGrid& grid);

std::optional<AnglePair> node_feasible(const RobotSpec& spec, const PointIndex& obstacles, const Vec2& node_center,
                                       const SearchParams& params);

enum class SearchStatus { Ok, InfeasibleStart };

struct SearchStats {
  std::size_t explored_nodes = 0;    // cells whose feasibility was evaluated
  std::size_t collision_checks = 0;  // placements evaluated
  double elapsed_seconds = 0.0;
};

struct AoiResult {
  SearchStatus status = SearchStatus::Ok;
  CellCoord start;
  std::vector<std::size_t> feasible_centers;  // admission (BFS) order
  std::vector<AnglePair> witness_angles;      // parallel to feasible_centers
  std::vector<std::size_t> aoi_cells;         // ascending cell ids
  SearchStats stats;

  bool ok() const { return status == SearchStatus::Ok; }
  std::optional<AnglePair> witness_for(std::size_t cell) const;
};

// Throws SearchError for a start outside the map or on an obstacle, and
// ParamError for invalid params. An infeasible start yields an empty result
// with status InfeasibleStart.
AoiResult troweling_search(const ObstacleMap& map, const RobotSpec& spec, CellCoord start,
                           const SearchParams& params = {});

// Free cells whose center lies within the closed ball of the given radius
// around at least one of the centers. Ascending ids.
std::vector<std::size_t> envelope(const ObstacleMap& map, std::span<const std::size_t> centers, double radius);

// Neighbor offsets in visiting order: E, NE, N, NW, W, SW, S, SE.
inline constexpr CellCoord kNeighborOrder[8] = {{1, 0},  {1, 1},   {0, 1},  {-1, 1},
                                                {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};

}  // namespace sataoi
