#pragma once

#include <cstddef>
#include <vector>

#include "oqmi/qcore.hpp"

namespace oqmi::detail {

// Row-major strides: party 0 is the most significant digit.
inline std::vector<std::size_t> strides(const Dims& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
  return s;
}

// For every joint local index over `parties` (enumerated row-major in the
// order of `parties`), the contribution it makes to the full index.
inline std::vector<std::size_t> subsystem_offsets(const Dims& dims, const PartySet& parties) {
  const auto full = strides(dims);
  std::vector<std::size_t> offsets{0};
  for (std::size_t p : parties) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[p]);
    for (std::size_t base : offsets)
      for (std::size_t k = 0; k < dims[p]; ++k) next.push_back(base + k * full[p]);
    offsets = std::move(next);
  }
  return offsets;
}

inline Dims restrict_dims(const Dims& dims, const PartySet& parties) {
  Dims out;
  out.reserve(parties.size());
  for (std::size_t p : parties) out.push_back(dims[p]);
  return out;
}

}  // namespace oqmi::detail
