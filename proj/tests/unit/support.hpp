#pragma once

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <doctest.h>

namespace so32::test {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(12345);
  return gen;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace so32::test
