#pragma once

#include "oqmi/qcore.hpp"

namespace oqmi {

struct Bipartition {
  PartySet left;
  PartySet right;

  // left and its complement in an n-party system.
  static Bipartition split(const PartySet& left, std::size_t n);
  void check_against(std::size_t n) const;
};

// log2 of the trace norm of the partial transpose on cut.left, in bits.
double log_negativity(const DensityMatrix& rho, const Bipartition& cut);

}  // namespace oqmi
