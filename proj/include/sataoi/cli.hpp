#pragma once

// Command-line surface: config parsing, output documents and the `run`,
// `stats` and `check` subcommands.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "sataoi/aoi_search.hpp"
#include "sataoi/obstacle_map.hpp"
#include "sataoi/robot_model.hpp"

namespace sataoi::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kInfeasibleStart = 2 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MapFormat { AsciiGrid, RectList };
enum class RenderFormat { Ppm, Svg };

// Grid geometry for rectangle-list maps, written WxH@CELL+OX+OY.
struct GridDims {
  int width_cells = 0;
  int height_cells = 0;
  double cell_size = 10.0;
  Vec2 origin;
};

GridDims parse_grid_dims(std::string_view text);

struct RobotConfig {
  RobotSpec spec;
  bool margin_given = false;
};

// Flat key=value text:
//   V_l_mm, V_w_mm, L_vs_mm, L_s_mm, R_mm, swing_min_rad, swing_max_rad
// are required; safety_margin_mm is optional. '#' starts a comment line.
RobotConfig parse_robot_config(std::string_view text);

struct RunConfig {
  std::string map_path;
  MapFormat map_format = MapFormat::AsciiGrid;
  std::optional<GridDims> rect_grid_dims;
  std::string robot_path;
  CellCoord start;
  SearchParams search;
  std::optional<double> margin_mm;  // overrides the robot file
  std::string out_dir;
  RenderFormat render_format = RenderFormat::Ppm;
};

inline constexpr std::string_view kAoiGridFile = "aoi_grid.txt";
inline constexpr std::string_view kStatsFile = "stats.txt";
inline constexpr std::string_view kRenderPpmFile = "render.ppm";
inline constexpr std::string_view kRenderSvgFile = "render.svg";

ObstacleMap load_map(const std::string& path, MapFormat format, const std::optional<GridDims>& dims);

// Margin precedence: explicit override, robot file, half cell diagonal.
RobotSpec resolve_robot(const RobotConfig& robot, std::optional<double> margin_mm, const ObstacleMap& map);

// Fixed-order key=value document. Areas keep 4 decimals, percents 2.
std::string emit_stats(const AoiResult& result, const MapStats& map_stats, double cell_size);
std::string format_map_stats(const MapStats& map_stats);

// Map grid with 'A' on AOI cells.
std::string serialize_aoi_grid(const ObstacleMap& map, const AoiResult& result);

struct Rgb {
  unsigned char r, g, b;
  bool operator==(const Rgb&) const = default;
};
inline constexpr Rgb kObstacleColor{0, 0, 0};
inline constexpr Rgb kFreeColor{255, 255, 255};
inline constexpr Rgb kAoiColor{255, 215, 0};
inline constexpr Rgb kStartColor{255, 0, 0};

// Binary P6 image, one pixel per cell, top map row first.
std::string render_ppm(const ObstacleMap& map, const AoiResult& result);
// One rect per horizontal run of same-colored cells.
std::string render_svg(const ObstacleMap& map, const AoiResult& result);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Entry point for the sataoi executable.
int main(int argc, char** argv);

}  // namespace sataoi::cli
