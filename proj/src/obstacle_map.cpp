#include "sataoi/obstacle_map.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace sataoi {

FormatError::FormatError(const std::string& what, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

ObstacleMap::ObstacleMap(int width_cells, int height_cells, double cell_size, Vec2 origin, Cell fill)
    : width_(width_cells), height_(height_cells), cell_size_(cell_size), origin_(origin) {
  if (width_cells <= 0 || height_cells <= 0) throw std::invalid_argument("map dimensions must be positive");
  if (!(cell_size > 0.0) || !std::isfinite(cell_size)) throw std::invalid_argument("cell size must be positive");
  if (!is_finite(origin)) throw std::invalid_argument("map origin must be finite");
  cells_.assign(static_cast<std::size_t>(width_cells) * static_cast<std::size_t>(height_cells), fill);
}

void ObstacleMap::set(int i, int j, Cell value) {
  if (!in_bounds(i, j)) throw std::out_of_range("cell outside map");
  cells_[id(i, j)] = value;
}

std::size_t ObstacleMap::obstacle_cell_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), Cell::Obstacle));
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t at = s.find(sep, pos);
    parts.push_back(s.substr(pos, at == std::string_view::npos ? std::string_view::npos : at - pos));
    if (at == std::string_view::npos) break;
    pos = at + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Shortest representation that round-trips.
std::string format_decimal(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

ObstacleMap parse_ascii_grid(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines.front().empty()) throw FormatError("missing header", 1);

  const auto fields = split_on(lines[0], ' ');
  if (fields.size() != 5) throw FormatError("header needs 5 space-separated fields", 1);
  int width = 0, height = 0;
  double cell = 0.0, ox = 0.0, oy = 0.0;
  if (!parse_number(fields[0], width) || width <= 0) throw FormatError("bad width", 1);
  if (!parse_number(fields[1], height) || height <= 0) throw FormatError("bad height", 1);
  if (!parse_number(fields[2], cell) || !(cell > 0.0) || !std::isfinite(cell)) {
    throw FormatError("bad cell size", 1);
  }
  if (!parse_number(fields[3], ox) || !std::isfinite(ox)) throw FormatError("bad origin x", 1);
  if (!parse_number(fields[4], oy) || !std::isfinite(oy)) throw FormatError("bad origin y", 1);

  // A single trailing newline leaves one empty final line.
  if (lines.size() > 1 && lines.back().empty()) lines.pop_back();
  const std::size_t body = lines.size() - 1;
  if (body == 0) throw FormatError("empty body", 2);
  if (body != static_cast<std::size_t>(height)) {
    throw FormatError("expected " + std::to_string(height) + " rows, found " + std::to_string(body),
                      std::min(body, static_cast<std::size_t>(height)) + 2);
  }

  ObstacleMap map(width, height, cell, {ox, oy});
  for (std::size_t r = 0; r < body; ++r) {
    const std::size_t line_no = r + 2;
    const std::string_view row = lines[r + 1];
    if (row.size() != static_cast<std::size_t>(width)) {
      throw FormatError("row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(width),
                        line_no);
    }
    const int j = height - 1 - static_cast<int>(r);
    for (int i = 0; i < width; ++i) {
      switch (row[static_cast<std::size_t>(i)]) {
        case '#': map.set(i, j, Cell::Obstacle); break;
        case '.':
        case 'A': break;
        default:
          throw FormatError(std::string("unknown cell character '") + row[static_cast<std::size_t>(i)] + "'",
                            line_no);
      }
    }
  }
  return map;
}

std::string serialize_ascii(const ObstacleMap& map) {
  std::string out = std::to_string(map.width()) + ' ' + std::to_string(map.height()) + ' ' +
                    format_decimal(map.cell_size()) + ' ' + format_decimal(map.origin().x) + ' ' +
                    format_decimal(map.origin().y) + '\n';
  out.reserve(out.size() + map.cell_count() + static_cast<std::size_t>(map.height()));
  for (int j = map.height() - 1; j >= 0; --j) {
    for (int i = 0; i < map.width(); ++i) out += map.is_free(i, j) ? '.' : '#';
    out += '\n';
  }
  return out;
}

std::vector<RectSpec> parse_rect_list(std::string_view text) {
  std::vector<RectSpec> rects;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string_view line = trim(lines[n]);
    if (line.empty() || line.front() == '#') continue;
    const auto parts = split_on(line, ',');
    if (parts.size() != 4) throw FormatError("rectangle needs x_min,y_min,x_max,y_max", n + 1);
    double v[4];
    for (int k = 0; k < 4; ++k) {
      if (!parse_number(trim(parts[static_cast<std::size_t>(k)]), v[k]) || !std::isfinite(v[k])) {
        throw FormatError("bad number in rectangle", n + 1);
      }
    }
    if (!(v[0] < v[2] && v[1] < v[3])) throw FormatError("rectangle must have x_min < x_max and y_min < y_max", n + 1);
    rects.push_back({v[0], v[1], v[2], v[3]});
  }
  return rects;
}

ObstacleMap rasterize_rects(int width_cells, int height_cells, double cell_size, Vec2 origin,
                            const std::vector<RectSpec>& rects) {
  ObstacleMap map(width_cells, height_cells, cell_size, origin);
  for (const RectSpec& r : rects) {
    const double fi0 = std::floor((r.x_min - origin.x) / cell_size);
    const double fi1 = std::ceil((r.x_max - origin.x) / cell_size) - 1.0;
    const double fj0 = std::floor((r.y_min - origin.y) / cell_size);
    const double fj1 = std::ceil((r.y_max - origin.y) / cell_size) - 1.0;
    if (fi1 < 0.0 || fj1 < 0.0 || fi0 >= width_cells || fj0 >= height_cells) continue;
    const int i0 = static_cast<int>(std::max(fi0, 0.0));
    const int i1 = static_cast<int>(std::min(fi1, static_cast<double>(width_cells - 1)));
    const int j0 = static_cast<int>(std::max(fj0, 0.0));
    const int j1 = static_cast<int>(std::min(fj1, static_cast<double>(height_cells - 1)));
    for (int j = j0; j <= j1; ++j) {
      for (int i = i0; i <= i1; ++i) map.set(i, j, Cell::Obstacle);
    }
  }
  return map;
}

std::size_t boundary_ring_size(const ObstacleMap& map) {
  return 2 * static_cast<std::size_t>(map.width() + map.height()) + 4;
}

std::vector<Vec2> obstacle_points(const ObstacleMap& map) {
  std::vector<Vec2> pts;
  pts.reserve(map.obstacle_cell_count() + boundary_ring_size(map));
  for (int j = 0; j < map.height(); ++j) {
    for (int i = 0; i < map.width(); ++i) {
      if (!map.is_free(i, j)) pts.push_back(map.cell_center(i, j));
    }
  }
  const int w = map.width(), h = map.height();
  for (int i = -1; i <= w; ++i) {
    pts.push_back(map.cell_center(i, -1));
    pts.push_back(map.cell_center(i, h));
  }
  for (int j = 0; j < h; ++j) {
    pts.push_back(map.cell_center(-1, j));
    pts.push_back(map.cell_center(w, j));
  }
  return pts;
}

std::vector<std::size_t> free_cells(const ObstacleMap& map) {
  std::vector<std::size_t> ids;
  ids.reserve(map.cell_count() - map.obstacle_cell_count());
  for (std::size_t id = 0; id < map.cell_count(); ++id) {
    if (map.at_id(id) == Cell::Free) ids.push_back(id);
  }
  return ids;
}

std::vector<Vec2> free_points(const ObstacleMap& map) {
  const auto ids = free_cells(map);
  std::vector<Vec2> pts;
  pts.reserve(ids.size());
  for (std::size_t id : ids) pts.push_back(map.cell_center(id));
  return pts;
}

double obstacle_proportion_pct(double map_area_m2, double obstacle_area_m2) {
  return map_area_m2 > 0.0 ? 100.0 * obstacle_area_m2 / map_area_m2 : 0.0;
}

MapStats compute_stats(const ObstacleMap& map) {
  MapStats s;
  const double cell_area_m2 = map.cell_size() * map.cell_size() / 1e6;
  s.obstacle_cell_count = map.obstacle_cell_count();
  s.free_cell_count = map.cell_count() - s.obstacle_cell_count;
  s.map_area_m2 = static_cast<double>(map.cell_count()) * cell_area_m2;
  s.obstacle_area_m2 = static_cast<double>(s.obstacle_cell_count) * cell_area_m2;
  s.obstacle_proportion_pct = obstacle_proportion_pct(s.map_area_m2, s.obstacle_area_m2);
  return s;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace sataoi
