#include "oqmi/entropy.hpp"

#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace oqmi {

namespace {

double clip(double lambda) {
  if (lambda < -kPositivityTolerance)
    throw std::domain_error("not positive semidefinite (eigenvalue " + std::to_string(lambda) + ")");
  return lambda < 0.0 ? 0.0 : lambda;
}

double plogp_sum(std::span<const double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

}  // namespace

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("empty probability distribution");
  for (double& w : weights_) {
    if (w < -1e-12) throw std::invalid_argument("negative probability weight");
    if (w < 0.0) w = 0.0;
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-10) throw std::invalid_argument("probabilities do not sum to 1");
}

double spectrum_entropy(std::span<const double> eigenvalues) {
  double h = 0.0;
  for (double lambda : eigenvalues) {
    const double x = clip(lambda);
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto spectrum = hermitian_eigenvalues(rho.matrix());
  return spectrum_entropy(spectrum);
}

double shannon_entropy(const ProbabilityDistribution& p) { return plogp_sum(p.weights()); }

double generalized_entropy(const DensityMatrix& rho, const EntropyKind& kind) {
  if (kind.tag == EntropyKind::Tag::VonNeumann) return von_neumann_entropy(rho);
  if (!(kind.q > 0.0) || !std::isfinite(kind.q))
    throw std::invalid_argument("entropy order q must be finite and positive");
  if (kind.q == 1.0) throw std::invalid_argument("use vonNeumann for q->1");

  double power_trace = 0.0;
  for (double lambda : hermitian_eigenvalues(rho.matrix())) {
    const double x = clip(lambda);
    if (x > 0.0) power_trace += std::pow(x, kind.q);
  }
  const double scale = 1.0 / (1.0 - kind.q);
  if (kind.tag == EntropyKind::Tag::Renyi) return scale * std::log2(power_trace);
  return scale * (power_trace - 1.0) / std::numbers::ln2;
}

RelativeEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dims() != sigma.dims()) throw std::invalid_argument("relative entropy needs equal dims");

  const double self_term = -von_neumann_entropy(rho);  // tr(rho log rho)

  if (max_hermiticity_deviation(sigma.matrix()) > kHermiticityTolerance)
    throw std::domain_error("sigma is not Hermitian");
  const ComplexMatrix sym = 0.5 * (sigma.matrix() + sigma.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");

  double cross_term = 0.0;  // tr(rho log sigma)
  const auto& vecs = solver.eigenvectors();
  for (Eigen::Index j = 0; j < vecs.cols(); ++j) {
    const double mu = clip(solver.eigenvalues()(j));
    const double weight = (vecs.col(j).adjoint() * rho.matrix() * vecs.col(j))(0, 0).real();
    if (mu <= kPositivityTolerance) {
      if (weight > kPositivityTolerance)
        return {std::numeric_limits<double>::infinity(), true};
      continue;
    }
    cross_term += weight * std::log2(mu);
  }
  return {self_term - cross_term, false};
}

ClassicalCmi classical_cmi_variants(const ProbabilityDistribution& joint,
                                    std::array<std::size_t, 3> shape) {
  const auto [da, db, dc] = shape;
  if (da * db * dc != joint.size())
    throw std::invalid_argument("joint distribution size does not match its shape");

  std::vector<double> pa(da, 0.0), pb(db, 0.0), pc(dc, 0.0);
  std::vector<double> pab(da * db, 0.0), pac(da * dc, 0.0), pbc(db * dc, 0.0);
  const auto& w = joint.weights();
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t c = 0; c < dc; ++c) {
        const double x = w[(a * db + b) * dc + c];
        pa[a] += x;
        pb[b] += x;
        pc[c] += x;
        pab[a * db + b] += x;
        pac[a * dc + c] += x;
        pbc[b * dc + c] += x;
      }

  const double ha = plogp_sum(pa), hb = plogp_sum(pb), hc = plogp_sum(pc);
  const double hab = plogp_sum(pab), hac = plogp_sum(pac), hbc = plogp_sum(pbc);
  const double habc = plogp_sum(w);

  // H(X|Y) = H(XY) - H(Y)
  const double b_given_a = hab - ha;
  const double a_given_b = hab - hb;
  const double a_given_c = hac - hc;
  const double b_given_c = hbc - hc;
  const double ab_given_c = habc - hc;
  const double a_given_bc = habc - hbc;

  ClassicalCmi out{};
  out.k1 = (ha + hb + hc) - (hab + hac + hbc) + habc;
  out.k2 = hab - b_given_a - a_given_b - a_given_c - b_given_c + ab_given_c;
  out.k3 = (ha + hb + hc) - (hab + hac) + a_given_bc;
  return out;
}

}  // namespace oqmi
