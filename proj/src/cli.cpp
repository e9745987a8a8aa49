#include "sataoi/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace sataoi::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

// Per-cell class for rendering: 0 obstacle, 1 free, 2 aoi, 3 start.
std::vector<std::uint8_t> classify(const ObstacleMap& map, const AoiResult& result) {
  std::vector<std::uint8_t> cls(map.cell_count());
  for (std::size_t id = 0; id < cls.size(); ++id) cls[id] = map.at_id(id) == Cell::Free ? 1 : 0;
  for (std::size_t id : result.aoi_cells) cls[id] = 2;
  if (map.in_bounds(result.start)) cls[map.id(result.start)] = 3;
  return cls;
}

constexpr Rgb kPalette[4] = {kObstacleColor, kFreeColor, kAoiColor, kStartColor};

CellCoord parse_cell(std::string_view text) {
  const auto comma = text.find(',');
  int x = 0, y = 0;
  if (comma == std::string_view::npos || !parse_number(text.substr(0, comma), x) ||
      !parse_number(text.substr(comma + 1), y)) {
    throw ConfigError("expected X,Y cell coordinates, got '" + std::string(text) + "'");
  }
  return {x, y};
}

Vec2 parse_point(std::string_view text) {
  const auto comma = text.find(',');
  double x = 0.0, y = 0.0;
  if (comma == std::string_view::npos || !parse_number(text.substr(0, comma), x) ||
      !parse_number(text.substr(comma + 1), y) || !std::isfinite(x) || !std::isfinite(y)) {
    throw ConfigError("expected X,Y in millimeters, got '" + std::string(text) + "'");
  }
  return {x, y};
}

MapFormat parse_map_format(const std::string& s) {
  if (s == "ascii") return MapFormat::AsciiGrid;
  if (s == "rects") return MapFormat::RectList;
  throw ConfigError("unknown map format '" + s + "'");
}

}  // namespace

GridDims parse_grid_dims(std::string_view text) {
  // WxH@CELL+OX+OY; origin offsets may be negative, e.g. 10x10@50+-100+0.
  const auto bad = [&] { return ConfigError("expected WxH@CELL+OX+OY, got '" + std::string(text) + "'"); };
  const auto x = text.find('x');
  const auto at = text.find('@');
  if (x == std::string_view::npos || at == std::string_view::npos || at < x) throw bad();
  const auto plus1 = text.find('+', at);
  if (plus1 == std::string_view::npos) throw bad();
  const auto plus2 = text.find('+', plus1 + 1);
  if (plus2 == std::string_view::npos) throw bad();
  GridDims d;
  if (!parse_number(text.substr(0, x), d.width_cells) || d.width_cells <= 0) throw bad();
  if (!parse_number(text.substr(x + 1, at - x - 1), d.height_cells) || d.height_cells <= 0) throw bad();
  if (!parse_number(text.substr(at + 1, plus1 - at - 1), d.cell_size) || !(d.cell_size > 0.0)) throw bad();
  if (!parse_number(text.substr(plus1 + 1, plus2 - plus1 - 1), d.origin.x)) throw bad();
  if (!parse_number(text.substr(plus2 + 1), d.origin.y)) throw bad();
  return d;
}

RobotConfig parse_robot_config(std::string_view text) {
  std::map<std::string, double, std::less<>> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view line = trim(text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos));
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("robot config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key(trim(line.substr(0, eq)));
    double v = 0.0;
    if (!parse_number(line.substr(eq + 1), v) || !std::isfinite(v)) {
      throw ConfigError("robot config line " + std::to_string(line_no) + ": bad value for " + key);
    }
    values[key] = v;
  }

  RobotConfig cfg;
  const std::pair<const char*, double*> required[] = {
      {"V_l_mm", &cfg.spec.vehicle_length}, {"V_w_mm", &cfg.spec.vehicle_width},
      {"L_vs_mm", &cfg.spec.swing_offset},  {"L_s_mm", &cfg.spec.arm_length},
      {"R_mm", &cfg.spec.disc_radius},      {"swing_min_rad", &cfg.spec.swing_min},
      {"swing_max_rad", &cfg.spec.swing_max}};
  for (const auto& [key, field] : required) {
    const auto it = values.find(key);
    if (it == values.end()) throw ConfigError(std::string("robot config: missing ") + key);
    *field = it->second;
    values.erase(it);
  }
  if (const auto it = values.find("safety_margin_mm"); it != values.end()) {
    cfg.spec.safety_margin = it->second;
    cfg.margin_given = true;
    values.erase(it);
  }
  if (!values.empty()) throw ConfigError("robot config: unknown key " + values.begin()->first);
  cfg.spec.validate();
  return cfg;
}

ObstacleMap load_map(const std::string& path, MapFormat format, const std::optional<GridDims>& dims) {
  const std::string text = read_text_file(path);
  if (format == MapFormat::AsciiGrid) return parse_ascii_grid(text);
  if (!dims) throw ConfigError("rectangle maps need --grid WxH@CELL+OX+OY");
  return rasterize_rects(dims->width_cells, dims->height_cells, dims->cell_size, dims->origin, parse_rect_list(text));
}

RobotSpec resolve_robot(const RobotConfig& robot, std::optional<double> margin_mm, const ObstacleMap& map) {
  RobotSpec spec = robot.spec;
  if (margin_mm) {
    spec.safety_margin = *margin_mm;
  } else if (!robot.margin_given) {
    spec.safety_margin = half_cell_diagonal(map.cell_size());
  }
  spec.validate();
  return spec;
}

std::string format_map_stats(const MapStats& s) {
  std::string out;
  out += "map_area_m2=" + fixed(s.map_area_m2, 4) + '\n';
  out += "obstacle_area_m2=" + fixed(s.obstacle_area_m2, 4) + '\n';
  out += "obstacle_proportion_pct=" + fixed(s.obstacle_proportion_pct, 2) + '\n';
  out += "obstacle_cell_count=" + std::to_string(s.obstacle_cell_count) + '\n';
  out += "free_cell_count=" + std::to_string(s.free_cell_count) + '\n';
  return out;
}

std::string emit_stats(const AoiResult& result, const MapStats& map_stats, double cell_size) {
  const double cell_area_m2 = cell_size * cell_size / 1e6;
  const double aoi_area = static_cast<double>(result.aoi_cells.size()) * cell_area_m2;
  const double aoi_pct = map_stats.map_area_m2 > 0.0 ? 100.0 * aoi_area / map_stats.map_area_m2 : 0.0;
  std::string out;
  out += std::string("status=") + (result.ok() ? "ok" : "error") + '\n';
  out += std::string("error=") + (result.ok() ? "none" : "infeasible_start") + '\n';
  out += "map_area_m2=" + fixed(map_stats.map_area_m2, 4) + '\n';
  out += "obstacle_area_m2=" + fixed(map_stats.obstacle_area_m2, 4) + '\n';
  out += "obstacle_proportion_pct=" + fixed(map_stats.obstacle_proportion_pct, 2) + '\n';
  out += "aoi_area_m2=" + fixed(aoi_area, 4) + '\n';
  out += "aoi_proportion_pct=" + fixed(aoi_pct, 2) + '\n';
  out += "aoi_cell_count=" + std::to_string(result.aoi_cells.size()) + '\n';
  out += "feasible_center_count=" + std::to_string(result.feasible_centers.size()) + '\n';
  out += "start_cell=" + std::to_string(result.start.i) + ',' + std::to_string(result.start.j) + '\n';
  out += "explored_nodes=" + std::to_string(result.stats.explored_nodes) + '\n';
  out += "collision_checks=" + std::to_string(result.stats.collision_checks) + '\n';
  out += "elapsed_seconds=" + fixed(result.stats.elapsed_seconds, 6) + '\n';
  return out;
}

std::string serialize_aoi_grid(const ObstacleMap& map, const AoiResult& result) {
  std::string out = serialize_ascii(map);
  // Body row r (0-based) holds map row height-1-r; the header ends at the first LF.
  const std::size_t body = out.find('\n') + 1;
  const auto row_len = static_cast<std::size_t>(map.width()) + 1;
  for (std::size_t id : result.aoi_cells) {
    const CellCoord c = map.coord(id);
    const auto r = static_cast<std::size_t>(map.height() - 1 - c.j);
    out[body + r * row_len + static_cast<std::size_t>(c.i)] = 'A';
  }
  return out;
}

std::string render_ppm(const ObstacleMap& map, const AoiResult& result) {
  const auto cls = classify(map, result);
  std::string out = "P6\n" + std::to_string(map.width()) + ' ' + std::to_string(map.height()) + "\n255\n";
  const std::size_t header = out.size();
  out.resize(header + 3 * map.cell_count());
  std::size_t k = header;
  for (int j = map.height() - 1; j >= 0; --j) {
    for (int i = 0; i < map.width(); ++i) {
      const Rgb c = kPalette[cls[map.id(i, j)]];
      out[k++] = static_cast<char>(c.r);
      out[k++] = static_cast<char>(c.g);
      out[k++] = static_cast<char>(c.b);
    }
  }
  return out;
}

std::string render_svg(const ObstacleMap& map, const AoiResult& result) {
  const auto cls = classify(map, result);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << map.width() << "\" height=\"" << map.height()
     << "\" viewBox=\"0 0 " << map.width() << ' ' << map.height() << "\" shape-rendering=\"crispEdges\">\n";
  for (int j = map.height() - 1; j >= 0; --j) {
    const int row = map.height() - 1 - j;
    int i = 0;
    while (i < map.width()) {
      const std::uint8_t c = cls[map.id(i, j)];
      int run_end = i + 1;
      while (run_end < map.width() && cls[map.id(run_end, j)] == c) ++run_end;
      const Rgb rgb = kPalette[c];
      char fill[8];
      std::snprintf(fill, sizeof(fill), "#%02x%02x%02x", rgb.r, rgb.g, rgb.b);
      os << "<rect x=\"" << i << "\" y=\"" << row << "\" width=\"" << (run_end - i) << "\" height=\"1\" fill=\""
         << fill << "\"/>\n";
      i = run_end;
    }
  }
  os << "</svg>\n";
  return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const ObstacleMap map = load_map(config.map_path, config.map_format, config.rect_grid_dims);
    const RobotConfig robot = parse_robot_config(read_text_file(config.robot_path));
    const RobotSpec spec = resolve_robot(robot, config.margin_mm, map);

    const AoiResult result = troweling_search(map, spec, config.start, config.search);

    const std::filesystem::path dir(config.out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / kAoiGridFile, serialize_aoi_grid(map, result));
    write_file(dir / kStatsFile, emit_stats(result, compute_stats(map), map.cell_size()));
    if (config.render_format == RenderFormat::Ppm) {
      write_file(dir / kRenderPpmFile, render_ppm(map, result));
    } else {
      write_file(dir / kRenderSvgFile, render_svg(map, result));
    }

    if (!result.ok()) {
      err << "sataoi: start cell (" << config.start.i << ", " << config.start.j
          << ") admits no collision-free placement\n";
      return kInfeasibleStart;
    }
    out << "aoi_cells=" << result.aoi_cells.size() << " feasible_centers=" << result.feasible_centers.size()
        << " elapsed_seconds=" << fixed(result.stats.elapsed_seconds, 3) << '\n';
    return kSuccess;
  } catch (const std::exception& e) {
    err << "sataoi: " << e.what() << '\n';
    return kInputError;
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Area-of-interest delimitation for swing-arm troweling robots"};
  app.require_subcommand(1);

  std::string map_path, robot_path, map_format = "ascii", grid, start, out_dir, render = "ppm";
  double areso_deg = 15.0, envelope_coeff = 1.0;
  int stride = 1;
  std::optional<double> margin;

  auto* run_cmd = app.add_subcommand("run", "Delimit the area of interest from a start cell");
  run_cmd->add_option("--map", map_path, "Obstacle map file")->required();
  run_cmd->add_option("--map-format", map_format, "ascii or rects")->check(CLI::IsMember({"ascii", "rects"}));
  run_cmd->add_option("--grid", grid, "Grid for rectangle maps: WxH@CELL+OX+OY");
  run_cmd->add_option("--robot", robot_path, "Robot config file")->required();
  run_cmd->add_option("--start", start, "Start cell X,Y")->required();
  run_cmd->add_option("--out-dir", out_dir, "Output directory")->required();
  run_cmd->add_option("--areso-deg", areso_deg, "Angular resolution in degrees");
  run_cmd->add_option("--envelope-coeff", envelope_coeff, "Envelope radius as a multiple of the disc radius");
  run_cmd->add_option("--margin-mm", margin, "Safety margin in mm (default: robot file, else half cell diagonal)");
  run_cmd->add_option("--node-stride", stride, "Search step in cells");
  run_cmd->add_option("--render-format", render, "ppm or svg")->check(CLI::IsMember({"ppm", "svg"}));

  auto* stats_cmd = app.add_subcommand("stats", "Print obstacle statistics of a map");
  stats_cmd->add_option("--map", map_path, "Obstacle map file")->required();
  stats_cmd->add_option("--map-format", map_format, "ascii or rects")->check(CLI::IsMember({"ascii", "rects"}));
  stats_cmd->add_option("--grid", grid, "Grid for rectangle maps: WxH@CELL+OX+OY");

  std::string disc;
  double angle1 = 0.0, angle2 = 0.0;
  auto* check_cmd = app.add_subcommand("check", "Collision check for one disc placement");
  check_cmd->add_option("--robot", robot_path, "Robot config file")->required();
  check_cmd->add_option("--map", map_path, "Obstacle map file")->required();
  check_cmd->add_option("--map-format", map_format, "ascii or rects")->check(CLI::IsMember({"ascii", "rects"}));
  check_cmd->add_option("--grid", grid, "Grid for rectangle maps: WxH@CELL+OX+OY");
  check_cmd->add_option("--disc", disc, "Disc center X,Y in mm")->required();
  check_cmd->add_option("--angle1", angle1, "Arm angle in radians")->required();
  check_cmd->add_option("--angle2", angle2, "Vehicle angle relative to the arm in radians")->required();
  check_cmd->add_option("--margin-mm", margin, "Safety margin in mm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    const MapFormat format = parse_map_format(map_format);
    std::optional<GridDims> dims;
    if (!grid.empty()) dims = parse_grid_dims(grid);

    if (*run_cmd) {
      RunConfig cfg;
      cfg.map_path = map_path;
      cfg.map_format = format;
      cfg.rect_grid_dims = dims;
      cfg.robot_path = robot_path;
      cfg.start = parse_cell(start);
      cfg.search.angular_resolution = areso_deg * kPi / 180.0;
      cfg.search.envelope_coefficient = envelope_coeff;
      cfg.search.node_stride = stride;
      cfg.margin_mm = margin;
      cfg.out_dir = out_dir;
      cfg.render_format = render == "svg" ? RenderFormat::Svg : RenderFormat::Ppm;
      return run(cfg, std::cout, std::cerr);
    }
    if (*stats_cmd) {
      std::cout << format_map_stats(compute_stats(load_map(map_path, format, dims)));
      return kSuccess;
    }
    if (*check_cmd) {
      const ObstacleMap map = load_map(map_path, format, dims);
      const RobotSpec spec = resolve_robot(parse_robot_config(read_text_file(robot_path)), margin, map);
      const auto pts = obstacle_points(map);
      const PointIndex obstacles = PointIndex::build(pts, map.cell_size());
      const CollisionVerdict v = is_collision(spec, obstacles, parse_point(disc), angle1, angle2);
      std::cout << "collision=" << (v.collides() ? "true" : "false") << " cause=" << to_string(v.cause);
      if (v.witness) std::cout << " witness=" << v.witness->x << ',' << v.witness->y;
      std::cout << '\n';
      return kSuccess;
    }
  } catch (const std::exception& e) {
    std::cerr << "sataoi: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace sataoi::cli
