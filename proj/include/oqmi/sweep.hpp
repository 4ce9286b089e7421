#pragma once

#include <string>
#include <utility>
#include <vector>

namespace oqmi {

// One point of a noise sweep. Column order is insertion order.
struct SweepRecord {
  double p = 0.0;
  std::vector<std::pair<std::string, double>> values;

  double at(const std::string& name) const;
};

// steps points from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t steps);

}  // namespace oqmi
