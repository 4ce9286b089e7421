#include "oqmi/sweep.hpp"

#include <stdexcept>

namespace oqmi {

double SweepRecord::at(const std::string& name) const {
  for (const auto& [key, value] : values)
    if (key == name) return value;
  throw std::out_of_range("sweep record has no column '" + name + "'");
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("a sweep needs at least 2 steps");
  if (!(lo <= hi)) throw std::invalid_argument("sweep bounds are reversed");
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  grid.back() = hi;
  return grid;
}

}  // namespace oqmi
