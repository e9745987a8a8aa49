#pragma once

// Occupancy grid of square cells, each Free or Obstacle.
//
// Cell (i, j) spans [origin.x + i*cell, origin.x + (i+1)*cell] x
// [origin.y + j*cell, origin.y + (j+1)*cell]; j grows upwards. Anything
// outside the grid counts as Obstacle.
//
// ASCII format:
//   <width_cells> <height_cells> <cell_size_mm> <origin_x_mm> <origin_y_mm>
//   <height_cells rows of width_cells chars from '#', '.'; top row first>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sataoi/geometry.hpp"

namespace sataoi {

enum class Cell : std::uint8_t { Free = 0, Obstacle = 1 };

struct CellCoord {
  int i = 0;  // column, grows with x
  int j = 0;  // row, grows with y
  bool operator==(const CellCoord&) const = default;
};

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ObstacleMap {
 public:
  ObstacleMap(int width_cells, int height_cells, double cell_size = 10.0, Vec2 origin = {},
              Cell fill = Cell::Free);

  int width() const { return width_; }
  int height() const { return height_; }
  double cell_size() const { return cell_size_; }
  const Vec2& origin() const { return origin_; }
  std::size_t cell_count() const { return cells_.size(); }

  bool in_bounds(int i, int j) const { return i >= 0 && j >= 0 && i < width_ && j < height_; }
  bool in_bounds(CellCoord c) const { return in_bounds(c.i, c.j); }

  std::size_t id(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(i);
  }
  std::size_t id(CellCoord c) const { return id(c.i, c.j); }
  CellCoord coord(std::size_t id) const {
    return {static_cast<int>(id % static_cast<std::size_t>(width_)),
            static_cast<int>(id / static_cast<std::size_t>(width_))};
  }

  // Out-of-bounds reads as Obstacle.
  Cell at(int i, int j) const { return in_bounds(i, j) ? cells_[id(i, j)] : Cell::Obstacle; }
  Cell at(CellCoord c) const { return at(c.i, c.j); }
  bool is_free(int i, int j) const { return at(i, j) == Cell::Free; }
  bool is_free(CellCoord c) const { return is_free(c.i, c.j); }
  Cell at_id(std::size_t id) const { return cells_[id]; }

  void set(int i, int j, Cell value);

  Vec2 cell_center(int i, int j) const {
    return {origin_.x + (i + 0.5) * cell_size_, origin_.y + (j + 0.5) * cell_size_};
  }
  Vec2 cell_center(CellCoord c) const { return cell_center(c.i, c.j); }
  Vec2 cell_center(std::size_t id) const { return cell_center(coord(id)); }

  std::size_t obstacle_cell_count() const;

  bool operator==(const ObstacleMap&) const = default;

 private:
  int width_;
  int height_;
  double cell_size_;
  Vec2 origin_;
  std::vector<Cell> cells_;
};

struct MapStats {
  double map_area_m2 = 0.0;
  double obstacle_area_m2 = 0.0;
  double obstacle_proportion_pct = 0.0;
  std::size_t obstacle_cell_count = 0;
  std::size_t free_cell_count = 0;
};

struct RectSpec {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;
};

// 'A' cells (AOI marks in result grids) read as Free.
ObstacleMap parse_ascii_grid(std::string_view text);
std::string serialize_ascii(const ObstacleMap& map);

// One "x_min,y_min,x_max,y_max" per line; '#' lines and blank lines skipped.
std::vector<RectSpec> parse_rect_list(std::string_view text);

// A cell becomes Obstacle when its square overlaps a rectangle with
// positive area. Parts of rectangles outside the grid are ignored.
ObstacleMap rasterize_rects(int width_cells, int height_cells, double cell_size, Vec2 origin,
                            const std::vector<RectSpec>& rects);

// Obstacle cell centers followed by the centers of the one-cell ring just
// outside the grid.
std::vector<Vec2> obstacle_points(const ObstacleMap& map);
std::size_t boundary_ring_size(const ObstacleMap& map);

std::vector<Vec2> free_points(const ObstacleMap& map);
// Ids of Free cells, parallel to free_points.
std::vector<std::size_t> free_cells(const ObstacleMap& map);

MapStats compute_stats(const ObstacleMap& map);
// Proportion in percent from areas, as tabulated for survey maps.
double obstacle_proportion_pct(double map_area_m2, double obstacle_area_m2);

std::string read_text_file(const std::string& path);

}  // namespace sataoi
