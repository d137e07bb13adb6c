#pragma once

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "holesat/geometry.hpp"

namespace holesat::testing {

inline PointSet random_point_set(std::mt19937_64& rng, int n, Coord range = 1000) {
  std::uniform_int_distribution<Coord> coord(-range, range);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    pts.push_back({coord(rng), coord(rng)});
    if (!find_collinear_triple(pts).empty()) pts.pop_back();
  }
  return PointSet(std::move(pts));
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("holesat-test-" + name + "-" +
                                                      std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

// Solver and checker found at configure time, or empty.
inline std::string configured(const char* value) {
  std::string v = value;
  return v.ends_with("NOTFOUND") ? std::string() : v;
}

}  // namespace holesat::testing
