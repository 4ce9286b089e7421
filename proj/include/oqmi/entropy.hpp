#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "oqmi/qcore.hpp"

namespace oqmi {

// All entropies are in bits.

class ProbabilityDistribution {
 public:
  // Weights in [-1e-12, 0) are clipped to 0; the total must be 1 within 1e-10.
  explicit ProbabilityDistribution(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<double> weights_;
};

struct EntropyKind {
  enum class Tag { VonNeumann, Renyi, Tsallis };

  Tag tag = Tag::VonNeumann;
  double q = 1.0;

  static EntropyKind von_neumann() { return {}; }
  static EntropyKind renyi(double q) { return {Tag::Renyi, q}; }
  static EntropyKind tsallis(double q) { return {Tag::Tsallis, q}; }
};

// -sum p log2 p over a spectrum, after clipping eigenvalues in [-1e-9, 0).
// Throws std::domain_error for anything more negative.
double spectrum_entropy(std::span<const double> eigenvalues);

double von_neumann_entropy(const DensityMatrix& rho);
double shannon_entropy(const ProbabilityDistribution& p);
// Renyi: log2(tr rho^q) / (1 - q). Tsallis: (tr rho^q - 1) / ((1 - q) ln 2), the
// usual form rescaled to bits so both families tend to the von Neumann entropy.
double generalized_entropy(const DensityMatrix& rho, const EntropyKind& kind);

struct RelativeEntropy {
  double value;           // +infinity when the support condition fails
  bool support_violated;  // supp(rho) not contained in supp(sigma)
};

RelativeEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

struct ClassicalCmi {
  double k1;
  double k2;
  double k3;
};

// Three equivalent forms of the classical interaction information of a joint
// distribution laid out row-major over (A, B, C) with the given shape.
ClassicalCmi classical_cmi_variants(const ProbabilityDistribution& joint,
                                    std::array<std::size_t, 3> shape);

}  // namespace oqmi
