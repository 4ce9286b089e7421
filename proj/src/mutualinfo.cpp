#include "oqmi/mutualinfo.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace oqmi {

namespace {

// Calls fn(PartySet) for every size-k subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    fn(PartySet(std::move(idx)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

double sum_marginals(MarginalEntropyCache& s, std::size_t k) {
  double total = 0.0;
  for_each_subset(s.parties(), k, [&](const PartySet& t) { total += s(t); });
  return total;
}

double operational_from_cache(MarginalEntropyCache& s) {
  const std::size_t n = s.parties();
  if (n < 2) throw std::invalid_argument("mutual information needs at least two parties");
  return sum_marginals(s, n - 1) - static_cast<double>(n - 1) * s.full();
}

}  // namespace

std::string_view to_string(MIQuantity q) {
  switch (q) {
    case MIQuantity::BipartiteQmi: return "qmi";
    case MIQuantity::CommonInfo: return "ic";
    case MIQuantity::SharedTwoParty: return "is2";
    case MIQuantity::OperationalQmi: return "oqmi";
    case MIQuantity::ConventionalIx: return "ix";
  }
  return "?";
}

MarginalEntropyCache::MarginalEntropyCache(const DensityMatrix& rho, EntropyKind kind)
    : rho_(rho), kind_(kind) {
  if (rho.parties() > 8 * sizeof(unsigned))
    throw std::invalid_argument("too many parties for the marginal cache");
}

double MarginalEntropyCache::operator()(const PartySet& parties) {
  const unsigned key = parties.mask();
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const double s = generalized_entropy(partial_trace(rho_, parties), kind_);
  cache_.emplace(key, s);
  return s;
}

double MarginalEntropyCache::full() { return (*this)(PartySet::all(rho_.parties())); }

double bipartite_qmi(const DensityMatrix& rho) {
  if (rho.parties() != 2)
    throw std::invalid_argument("bipartite QMI needs exactly two parties; use mutual_information");
  return mutual_information(rho, PartySet{0}, PartySet{1});
}

double mutual_information(const DensityMatrix& rho, const PartySet& x, const PartySet& y) {
  if (x.empty() || y.empty() || !x.disjoint(y))
    throw std::invalid_argument("mutual information needs two nonempty disjoint groups");
  MarginalEntropyCache s(rho);
  return s(x) + s(y) - s(x.unite(y));
}

double common_information(const DensityMatrix& rho) {
  const std::size_t n = rho.parties();
  if (n < 3) throw std::invalid_argument("common information needs n >= 3; use bipartite_qmi");
  MarginalEntropyCache s(rho);
  double total = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    total += sign * sum_marginals(s, k);
  }
  return total;
}

double operational_qmi(const DensityMatrix& rho) {
  MarginalEntropyCache s(rho);
  return operational_from_cache(s);
}

double generalized_oqmi(const DensityMatrix& rho, const EntropyKind& kind) {
  MarginalEntropyCache s(rho, kind);
  return operational_from_cache(s);
}

double shared_two_party(const DensityMatrix& rho) {
  if (rho.parties() != 3) throw std::invalid_argument("shared two-party information is defined for three parties");
  return operational_qmi(rho) - common_information(rho);
}

double conventional_ix(const DensityMatrix& rho) {
  if (rho.parties() < 2) throw std::invalid_argument("mutual information needs at least two parties");
  MarginalEntropyCache s(rho);
  return sum_marginals(s, 1) - s.full();
}

Theorem2Bounds theorem2_bounds(const DensityMatrix& rho) {
  MarginalEntropyCache s(rho);
  const auto n = static_cast<double>(s.parties());
  const double full = s.full();
  const double ix = sum_marginals(s, 1) - full;
  return {ix - (n - 2.0) * full, operational_from_cache(s), ix + 2.0 * full};
}

double evaluate(MIQuantity quantity, const DensityMatrix& rho) {
  switch (quantity) {
    case MIQuantity::BipartiteQmi: return bipartite_qmi(rho);
    case MIQuantity::CommonInfo: return common_information(rho);
    case MIQuantity::SharedTwoParty: return shared_two_party(rho);
    case MIQuantity::OperationalQmi: return operational_qmi(rho);
    case MIQuantity::ConventionalIx: return conventional_ix(rho);
  }
  throw std::invalid_argument("unknown quantity");
}

}  // namespace oqmi
