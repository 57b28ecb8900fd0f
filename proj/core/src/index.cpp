#include "so32/index.hpp"

#include <cmath>

namespace so32 {

std::string to_string(ModeIndex mode) {
  return "(" + std::to_string(mode.l) + "," + std::to_string(mode.m) + ")";
}

ModeIndex mode_at(std::size_t flat) noexcept {
  const int l = static_cast<int>(std::sqrt(static_cast<double>(flat)));
  // sqrt may land one off for large flat indices
  int ll = l;
  while (static_cast<std::size_t>((ll + 1) * (ll + 1)) <= flat) ++ll;
  while (static_cast<std::size_t>(ll * ll) > flat) --ll;
  return {ll, static_cast<int>(flat) - ll * ll - ll};
}

Truncation::Truncation(int l_max) : l_max_(l_max) {
  if (l_max < 0) throw DomainError("l_max must be non-negative");
}

std::vector<ModeIndex> lattice(const Truncation& trunc) {
  std::vector<ModeIndex> modes;
  modes.reserve(trunc.size());
  for (int l = 0; l <= trunc.l_max(); ++l)
    for (int m = -l; m <= l; ++m) modes.push_back({l, m});
  return modes;
}

}  // namespace so32
