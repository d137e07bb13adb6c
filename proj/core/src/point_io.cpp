#include "holesat/point_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace holesat {

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    Point p;
    std::string extra;
    if (!(fields >> p.x >> p.y) || (fields >> extra)) {
      throw std::runtime_error("point file line " + std::to_string(line_no) +
                               ": expected two integers, got '" + line + "'");
    }
    points.push_back(p);
  }
  return points;
}

PointSet read_point_set(std::istream& in) { return PointSet(parse_points(in)); }

PointSet load_point_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open point file " + path.string());
  return read_point_set(in);
}

void write_points(std::ostream& out, const PointSet& s, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  for (const auto& p : s) out << p.x << ' ' << p.y << '\n';
}

void save_point_set(const std::filesystem::path& path, const PointSet& s,
                    const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write point file " + path.string());
  write_points(out, s, comment);
}

}  // namespace holesat
