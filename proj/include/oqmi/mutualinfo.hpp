#pragma once

#include <map>
#include <string_view>

#include "oqmi/entropy.hpp"
#include "oqmi/qcore.hpp"

namespace oqmi {

enum class MIQuantity { BipartiteQmi, CommonInfo, SharedTwoParty, OperationalQmi, ConventionalIx };

std::string_view to_string(MIQuantity q);

// Memoizes marginal entropies of one state, keyed by the party bitmask. Meant
// to live for a single quantity evaluation; not shared across threads.
class MarginalEntropyCache {
 public:
  explicit MarginalEntropyCache(const DensityMatrix& rho,
                                EntropyKind kind = EntropyKind::von_neumann());

  double operator()(const PartySet& parties);
  double full();
  std::size_t parties() const { return rho_.parties(); }

 private:
  const DensityMatrix& rho_;
  EntropyKind kind_;
  std::map<unsigned, double> cache_;
};

// S(A) + S(B) - S(AB) for a two-party state.
double bipartite_qmi(const DensityMatrix& rho);
// S(X) + S(Y) - S(XY) for two disjoint groups of parties.
double mutual_information(const DensityMatrix& rho, const PartySet& x, const PartySet& y);

// Alternating inclusion-exclusion over all nonempty marginals; may be negative.
double common_information(const DensityMatrix& rho);

// Sum of the (n-1)-party marginal entropies minus (n-1) S(full).
double operational_qmi(const DensityMatrix& rho);
double generalized_oqmi(const DensityMatrix& rho, const EntropyKind& kind);

// operational_qmi - common_information, defined for three parties only.
double shared_two_party(const DensityMatrix& rho);

// Sum of single-party entropies minus S(full).
double conventional_ix(const DensityMatrix& rho);

struct Theorem2Bounds {
  double lower;  // I_x - (n-2) S(full)
  double value;  // operational_qmi
  double upper;  // I_x + 2 S(full)
};

Theorem2Bounds theorem2_bounds(const DensityMatrix& rho);

double evaluate(MIQuantity quantity, const DensityMatrix& rho);

}  // namespace oqmi
