#include "oqmi/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "oqmi/detail/indexing.hpp"

namespace oqmi {

PartySet::PartySet(std::initializer_list<std::size_t> indices)
    : PartySet(std::vector<std::size_t>(indices)) {}

PartySet::PartySet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw std::invalid_argument("party set contains duplicate indices");
}

PartySet PartySet::from_mask(unsigned mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) idx.push_back(i);
  return PartySet(std::move(idx));
}

PartySet PartySet::all(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return PartySet(std::move(idx));
}

PartySet PartySet::from_letters(std::string_view letters) {
  std::vector<std::size_t> idx;
  for (char c : letters) {
    if (c < 'A' || c > 'Z')
      throw std::invalid_argument("party labels must be uppercase letters, got '" +
                                  std::string(letters) + "'");
    idx.push_back(static_cast<std::size_t>(c - 'A'));
  }
  return PartySet(std::move(idx));
}

bool PartySet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

unsigned PartySet::mask() const {
  unsigned m = 0;
  for (std::size_t i : indices_) m |= 1u << i;
  return m;
}

PartySet PartySet::complement(std::size_t n) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (!contains(i)) idx.push_back(i);
  return PartySet(std::move(idx));
}

PartySet PartySet::unite(const PartySet& other) const {
  std::vector<std::size_t> idx;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(idx));
  return PartySet(std::move(idx));
}

bool PartySet::disjoint(const PartySet& other) const {
  return std::none_of(indices_.begin(), indices_.end(),
                      [&](std::size_t i) { return other.contains(i); });
}

std::string PartySet::letters() const {
  std::string s;
  for (std::size_t i : indices_) s.push_back(static_cast<char>('A' + i));
  return s;
}

void PartySet::check_against(std::size_t n) const {
  if (!indices_.empty() && indices_.back() >= n)
    throw std::invalid_argument("party index " + std::to_string(indices_.back()) +
                                " out of range for a " + std::to_string(n) + "-party state");
}

std::size_t total_dimension(const Dims& dims) {
  std::size_t d = 1;
  for (std::size_t k : dims) d *= k;
  return d;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Dims dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("dimension list is empty");
  if (std::any_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d < 2; }))
    throw std::invalid_argument("every subsystem dimension must be at least 2");
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("density matrix is not square");
  if (static_cast<std::size_t>(matrix_.rows()) != total_dimension(dims_))
    throw std::invalid_argument("product of dims (" + std::to_string(total_dimension(dims_)) +
                                ") does not match matrix side (" +
                                std::to_string(matrix_.rows()) + ")");
}

PureState::PureState(ComplexVector amps, Dims d) : amplitudes(std::move(amps)), dims(std::move(d)) {
  if (static_cast<std::size_t>(amplitudes.size()) != total_dimension(dims))
    throw std::invalid_argument("amplitude count does not match the product of dims");
  if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-10)
    throw std::invalid_argument("pure state is not normalized");
}

DensityMatrix PureState::projector() const {
  return DensityMatrix(amplitudes * amplitudes.adjoint(), dims);
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].invariant << " violated by " << violations[i].magnitude;
  }
  return os.str();
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  ComplexMatrix m = Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval();
  return DensityMatrix(std::move(m), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const PartySet& keep) {
  if (keep.empty()) throw std::invalid_argument("cannot trace out all parties");
  keep.check_against(rho.parties());
  if (keep.size() == rho.parties()) return rho;

  const auto traced = keep.complement(rho.parties());
  const auto kept_off = detail::subsystem_offsets(rho.dims(), keep);
  const auto traced_off = detail::subsystem_offsets(rho.dims(), traced);
  const auto n = static_cast<Eigen::Index>(kept_off.size());
  const auto& m = rho.matrix();

  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r) {
      Complex acc{0.0, 0.0};
      for (std::size_t t : traced_off)
        acc += m(static_cast<Eigen::Index>(kept_off[r] + t), static_cast<Eigen::Index>(kept_off[c] + t));
      out(r, c) = acc;
    }
  return DensityMatrix(std::move(out), detail::restrict_dims(rho.dims(), keep));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const PartySet& transposed) {
  transposed.check_against(rho.parties());
  if (transposed.empty() || transposed.size() == rho.parties())
    throw std::invalid_argument("partial transpose needs a nonempty proper subset of parties");

  const auto rest = transposed.complement(rho.parties());
  const auto t_off = detail::subsystem_offsets(rho.dims(), transposed);
  const auto r_off = detail::subsystem_offsets(rho.dims(), rest);
  const auto& m = rho.matrix();
  ComplexMatrix out(m.rows(), m.cols());

  for (std::size_t t1 : t_off)
    for (std::size_t t2 : t_off)
      for (std::size_t r1 : r_off)
        for (std::size_t r2 : r_off)
          out(static_cast<Eigen::Index>(t2 + r1), static_cast<Eigen::Index>(t1 + r2)) =
              m(static_cast<Eigen::Index>(t1 + r1), static_cast<Eigen::Index>(t2 + r2));
  return out;
}

double max_hermiticity_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  const double dev = max_hermiticity_deviation(m);
  if (dev > kHermiticityTolerance)
    throw std::domain_error("matrix is not Hermitian (deviation " + std::to_string(dev) + ")");

  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");

  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

ValidationReport validate(const DensityMatrix& rho) {
  ValidationReport report;
  const auto& m = rho.matrix();

  const double herm = max_hermiticity_deviation(m);
  if (herm > kHermiticityTolerance) report.violations.push_back({"hermiticity", herm});

  const double trace_err = std::abs(m.trace() - Complex{1.0, 0.0});
  if (trace_err > kTraceTolerance) report.violations.push_back({"trace", trace_err});

  // Positivity is judged on the Hermitian part so a non-Hermitian input still
  // gets a positivity verdict.
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kPositivityTolerance) report.violations.push_back({"positivity", -min_eig});

  return report;
}

}  // namespace oqmi
