#include "oqmi/negativity.hpp"

#include <cmath>
#include <stdexcept>

namespace oqmi {

Bipartition Bipartition::split(const PartySet& left, std::size_t n) {
  left.check_against(n);
  Bipartition cut{left, left.complement(n)};
  cut.check_against(n);
  return cut;
}

void Bipartition::check_against(std::size_t n) const {
  if (left.empty() || right.empty()) throw std::invalid_argument("both sides of a cut must be nonempty");
  if (!left.disjoint(right) || left.size() + right.size() != n)
    throw std::invalid_argument("cut sides must partition all parties");
  left.check_against(n);
  right.check_against(n);
}

double log_negativity(const DensityMatrix& rho, const Bipartition& cut) {
  cut.check_against(rho.parties());
  double trace_norm = 0.0;
  for (double lambda : hermitian_eigenvalues(partial_transpose(rho, cut.left)))
    trace_norm += std::abs(lambda);
  const double en = std::log2(trace_norm);
  // PPT states land a hair below zero from rounding.
  return (en < 0.0 && en >= -kPositivityTolerance) ? 0.0 : en;
}

}  // namespace oqmi
