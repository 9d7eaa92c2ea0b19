#include "schwartzlab/grid.hpp"

#include <cmath>
#include <string>

#include "schwartzlab/errors.hpp"

namespace schwartzlab {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(Group group, double half_width, int points)
    : group_(group), half_width_(half_width), n_(points),
      spacing_(group == Group::line ? 2.0 * half_width / points : 1.0 / points) {}

Grid Grid::line(double half_width, int points) {
  if (!power_of_two(points) || points < 64)
    throw InputError("grid N must be a power of two >= 64 (got " + std::to_string(points) + ")");
  if (!std::isfinite(half_width) || half_width < 4.0)
    throw InputError("grid L must be >= 4");
  return Grid(Group::line, half_width, points);
}

Grid Grid::circle(int points) {
  if (!power_of_two(points) || points < 64)
    throw InputError("circle N must be a power of two >= 64 (got " + std::to_string(points) + ")");
  return Grid(Group::circle, 0.5, points);
}

}  // namespace schwartzlab
