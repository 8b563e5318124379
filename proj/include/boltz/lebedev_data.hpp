#pragma once

#include <span>

namespace boltz::detail {

struct LebedevPoint {
  double x, y, z, w;
};

struct LebedevGrid {
  int order;
  std::span<const LebedevPoint> points;
};

/// Embedded full-sphere Lebedev grids (generated by tools/gen_lebedev.py).
std::span<const LebedevGrid> lebedev_grids();

}  // namespace boltz::detail
