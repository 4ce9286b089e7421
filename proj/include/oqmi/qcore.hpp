#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace oqmi {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPositivityTolerance = 1e-9;

// Ordered set of 0-based subsystem positions. Party letters A, B, C, ... map to
// indices 0, 1, 2, ... in tensor order.
class PartySet {
 public:
  PartySet() = default;
  PartySet(std::initializer_list<std::size_t> indices);
  explicit PartySet(std::vector<std::size_t> indices);

  static PartySet from_mask(unsigned mask);
  static PartySet all(std::size_t n);
  // "AB" -> {0, 1}. Throws std::invalid_argument on anything but A-Z.
  static PartySet from_letters(std::string_view letters);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t index) const;
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  unsigned mask() const;
  PartySet complement(std::size_t n) const;
  PartySet unite(const PartySet& other) const;
  bool disjoint(const PartySet& other) const;
  std::string letters() const;

  // Throws std::invalid_argument if any index is >= n.
  void check_against(std::size_t n) const;

  friend bool operator==(const PartySet&, const PartySet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

// Square complex matrix with a tensor-factor dimension list. Construction only
// checks shape; the physical invariants are reported by validate().
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, Dims dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  std::size_t parties() const { return dims_.size(); }
  std::size_t dimension() const { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
  Dims dims_;
};

struct PureState {
  ComplexVector amplitudes;
  Dims dims;

  PureState(ComplexVector amps, Dims d);
  DensityMatrix projector() const;
};

struct Violation {
  std::string invariant;  // "hermiticity", "trace" or "positivity"
  double magnitude;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

std::size_t total_dimension(const Dims& dims);

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

// Reduced state on `keep`. Throws if keep is empty.
DensityMatrix partial_trace(const DensityMatrix& rho, const PartySet& keep);

// Transposes the tensor factors listed in `transposed`; the set must be a
// nonempty proper subset of the parties.
ComplexMatrix partial_transpose(const DensityMatrix& rho, const PartySet& transposed);

// Real spectrum in descending order. The input is symmetrized after the
// Hermiticity gate.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

ValidationReport validate(const DensityMatrix& rho);

double max_hermiticity_deviation(const ComplexMatrix& m);

}  // namespace oqmi
