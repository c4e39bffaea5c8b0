#include "planesum/point_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "planesum/errors.hpp"

namespace planesum {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Parses a signed decimal integer starting at text[pos]; advances pos.
Coord parse_coord(std::string_view text, std::size_t& pos, std::size_t line) {
  const std::size_t start = pos;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  Coord value = 0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line, start + 1, "integer out of range");
  if (ec != std::errc() || (ptr != last && !is_blank(*ptr) && *ptr != ',' && *ptr != ';')) {
    throw ParseError(line, start + 1, "expected a signed decimal integer");
  }
  if (value > kInputCoordinateCap || value < -kInputCoordinateCap) {
    throw ParseError(line, start + 1, "coordinate exceeds the input cap of 2^20");
  }
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

ParsedPointSet parse_point_set(std::string_view text) {
  std::vector<Point> pts;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    std::size_t pos = 0;
    const auto skip = [&] {
      while (pos < line.size() && is_blank(line[pos])) ++pos;
    };
    skip();
    if (pos == line.size() || line[pos] == '#') continue;

    const Coord x = parse_coord(line, pos, line_no);
    const std::size_t after_x = pos;
    skip();
    if (pos == after_x || pos == line.size()) throw ParseError(line_no, pos + 1, "expected two coordinates");
    const Coord y = parse_coord(line, pos, line_no);
    skip();
    if (pos != line.size()) throw ParseError(line_no, pos + 1, "unexpected trailing text");
    pts.push_back({x, y});
    lines.push_back(line_no);
  }

  ParsedPointSet out;
  out.points = PointSet(pts);
  if (out.points.size() != pts.size()) {
    std::set<Point> seen;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (!seen.insert(pts[k]).second) {
        std::ostringstream msg;
        msg << "line " << lines[k] << ": duplicate point " << pts[k] << " dropped";
        out.warnings.push_back(msg.str());
      }
    }
  }
  return out;
}

std::string serialize_point_set(const PointSet& s) {
  std::string out;
  for (const Point& p : s) {
    out += std::to_string(p.x);
    out += ' ';
    out += std::to_string(p.y);
    out += '\n';
  }
  return out;
}

ParsedPointSet read_point_set_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_point_set(buf.str());
}

std::string to_compact(const PointSet& s) {
  std::string out;
  for (const Point& p : s) {
    if (!out.empty()) out += ';';
    out += std::to_string(p.x);
    out += ',';
    out += std::to_string(p.y);
  }
  return out;
}

PointSet parse_compact(std::string_view text) {
  std::vector<Point> pts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const Coord x = parse_coord(text, pos, 1);
    if (pos >= text.size() || text[pos] != ',') throw ParseError(1, pos + 1, "expected ','");
    ++pos;
    const Coord y = parse_coord(text, pos, 1);
    pts.push_back({x, y});
    if (pos < text.size()) {
      if (text[pos] != ';') throw ParseError(1, pos + 1, "expected ';'");
      ++pos;
    }
  }
  return PointSet(std::move(pts));
}

}  // namespace planesum
