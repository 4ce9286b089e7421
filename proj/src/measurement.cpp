#include "oqmi/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "oqmi/detail/indexing.hpp"
#include "oqmi/entropy.hpp"

namespace oqmi {

namespace {

constexpr double kMinOutcomeProbability = 1e-12;

// Product of the plan's basis matrices (identity on unmeasured parties). Its
// adjoint rotates rho into the measured product basis.
ComplexMatrix basis_change(const Dims& dims, const MeasurementPlan& plan) {
  ComplexMatrix u = ComplexMatrix::Identity(1, 1);
  for (std::size_t p = 0; p < dims.size(); ++p) {
    const auto d = static_cast<Eigen::Index>(dims[p]);
    auto it = plan.assignments.find(p);
    const ComplexMatrix local = it != plan.assignments.end() ? it->second.vectors()
                                                             : ComplexMatrix::Identity(d, d);
    u = Eigen::kroneckerProduct(u, local).eval();
  }
  return u;
}

// Joint measured-outcome label of every full index.
std::vector<std::size_t> outcome_labels(const Dims& dims, const PartySet& measured) {
  const auto s = detail::strides(dims);
  const std::size_t n = total_dimension(dims);
  std::vector<std::size_t> label(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t key = 0;
    for (std::size_t p : measured) key = key * dims[p] + (i / s[p]) % dims[p];
    label[i] = key;
  }
  return label;
}

}  // namespace

ProjectiveBasis::ProjectiveBasis(ComplexMatrix vectors) : vectors_(std::move(vectors)) {
  if (vectors_.rows() != vectors_.cols() || vectors_.rows() < 2)
    throw std::invalid_argument("a projective basis needs dim >= 2 vectors of length dim");
  const ComplexMatrix gram = vectors_.adjoint() * vectors_;
  const double err = (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (err > 1e-10) throw std::invalid_argument("basis vectors are not orthonormal");
}

ProjectiveBasis ProjectiveBasis::computational(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return ProjectiveBasis(ComplexMatrix::Identity(d, d));
}

ComplexMatrix ProjectiveBasis::projector(std::size_t outcome) const {
  const auto v = vectors_.col(static_cast<Eigen::Index>(outcome));
  return v * v.adjoint();
}

BlochAngles canonical_angles(double theta, double phi, bool half_phi) {
  constexpr double pi = std::numbers::pi;
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);

  BlochAngles a;
  a.theta = std::acos(std::clamp(nz, -1.0, 1.0));
  if (std::hypot(nx, ny) < 1e-14) {
    a.phi = 0.0;
  } else {
    a.phi = std::atan2(ny, nx);
    if (a.phi < 0.0) a.phi += 2.0 * pi;
    if (a.phi >= 2.0 * pi) a.phi -= 2.0 * pi;
  }
  if (half_phi && a.phi >= pi) {
    a.theta = pi - a.theta;
    a.phi -= pi;
  }
  return a;
}

ProjectiveBasis qubit_basis(const BlochAngles& angles) {
  const double c = std::cos(angles.theta / 2.0);
  const double s = std::sin(angles.theta / 2.0);
  const Complex phase = std::polar(1.0, angles.phi);
  ComplexMatrix v(2, 2);
  v(0, 0) = c;
  v(1, 0) = phase * s;
  v(0, 1) = -std::conj(phase) * s;
  v(1, 1) = c;
  return ProjectiveBasis(std::move(v));
}

PartySet MeasurementPlan::parties() const {
  std::vector<std::size_t> idx;
  for (const auto& [party, basis] : assignments) idx.push_back(party);
  return PartySet(std::move(idx));
}

void MeasurementPlan::check_against(const Dims& dims) const {
  for (const auto& [party, basis] : assignments) {
    if (party >= dims.size())
      throw std::invalid_argument("measurement plan addresses party " + std::to_string(party) +
                                  " of a " + std::to_string(dims.size()) + "-party state");
    if (basis.dim() != dims[party])
      throw std::invalid_argument("basis dimension " + std::to_string(basis.dim()) +
                                  " does not match party dimension " + std::to_string(dims[party]));
  }
}

DensityMatrix apply_plan(const DensityMatrix& rho, const MeasurementPlan& plan) {
  plan.check_against(rho.dims());
  if (plan.assignments.empty()) return rho;

  const ComplexMatrix u = basis_change(rho.dims(), plan);
  ComplexMatrix rotated = u.adjoint() * rho.matrix() * u;
  const auto label = outcome_labels(rho.dims(), plan.parties());
  for (Eigen::Index c = 0; c < rotated.cols(); ++c)
    for (Eigen::Index r = 0; r < rotated.rows(); ++r)
      if (label[static_cast<std::size_t>(r)] != label[static_cast<std::size_t>(c)]) rotated(r, c) = 0.0;
  return DensityMatrix(u * rotated * u.adjoint(), rho.dims());
}

std::vector<MeasurementOutcome> measurement_outcomes(const DensityMatrix& rho, const PartySet& target,
                                                     const MeasurementPlan& plan) {
  plan.check_against(rho.dims());
  const PartySet measured = plan.parties();
  if (target.empty() || measured.empty())
    throw std::invalid_argument("target and measured parties must both be nonempty");
  if (!target.disjoint(measured))
    throw std::invalid_argument("target and measured parties overlap");
  target.check_against(rho.parties());

  // Work on the reduced state of target ∪ measured, re-indexed from 0.
  const PartySet joint = target.unite(measured);
  const DensityMatrix reduced = partial_trace(rho, joint);
  std::vector<std::size_t> local_target, local_measured;
  MeasurementPlan local_plan;
  for (std::size_t i = 0; i < joint.size(); ++i) {
    if (target.contains(joint[i])) {
      local_target.push_back(i);
    } else {
      local_measured.push_back(i);
      local_plan.assignments.emplace(i, plan.assignments.at(joint[i]));
    }
  }

  const ComplexMatrix u = basis_change(reduced.dims(), local_plan);
  const ComplexMatrix rotated = u.adjoint() * reduced.matrix() * u;
  const auto m_off = detail::subsystem_offsets(reduced.dims(), PartySet(local_measured));
  const auto t_off = detail::subsystem_offsets(reduced.dims(), PartySet(local_target));
  const Dims target_dims = detail::restrict_dims(rho.dims(), target);
  const auto td = static_cast<Eigen::Index>(t_off.size());

  std::vector<MeasurementOutcome> outcomes;
  for (std::size_t m : m_off) {
    ComplexMatrix block(td, td);
    for (Eigen::Index c = 0; c < td; ++c)
      for (Eigen::Index r = 0; r < td; ++r)
        block(r, c) = rotated(static_cast<Eigen::Index>(m + t_off[static_cast<std::size_t>(r)]),
                              static_cast<Eigen::Index>(m + t_off[static_cast<std::size_t>(c)]));
    const double p = block.trace().real();
    if (p < kMinOutcomeProbability) continue;
    outcomes.push_back({p, DensityMatrix(block / p, target_dims)});
  }
  return outcomes;
}

double measured_conditional_entropy(const DensityMatrix& rho, const PartySet& target,
                                    const PartySet& measured, const MeasurementPlan& plan) {
  if (!target.disjoint(measured)) throw std::invalid_argument("target and measured parties overlap");
  if (plan.parties() != measured)
    throw std::invalid_argument("measurement plan must cover exactly the measured parties");
  double h = 0.0;
  for (const auto& o : measurement_outcomes(rho, target, plan))
    h += o.probability * von_neumann_entropy(o.conditional);
  return h;
}

J1Plans J1Plans::uniform(const ProjectiveBasis& a, const ProjectiveBasis& b, const ProjectiveBasis& c) {
  return {a, b, c, c, c};
}

double measured_cmi_j1(const DensityMatrix& rho, const J1Plans& plans) {
  if (rho.parties() != 3) throw std::invalid_argument("J1 is defined for three parties");
  const PartySet a{0}, b{1}, c{2}, ab{0, 1};
  auto on = [](std::size_t party, const ProjectiveBasis& basis) {
    MeasurementPlan plan;
    plan.assignments.emplace(party, basis);
    return plan;
  };
  const double s_ab = von_neumann_entropy(partial_trace(rho, ab));
  return s_ab - measured_conditional_entropy(rho, b, a, on(0, plans.on_a_for_b)) -
         measured_conditional_entropy(rho, a, b, on(1, plans.on_b_for_a)) -
         measured_conditional_entropy(rho, a, c, on(2, plans.on_c_for_a)) -
         measured_conditional_entropy(rho, b, c, on(2, plans.on_c_for_b)) +
         measured_conditional_entropy(rho, ab, c, on(2, plans.on_c_for_ab));
}

double measured_cmi_j2(const DensityMatrix& rho, const MeasurementPlan& plan_bc) {
  if (rho.parties() != 3) throw std::invalid_argument("J2 is defined for three parties");
  const PartySet bc{1, 2};
  if (plan_bc.parties() != bc) throw std::invalid_argument("J2 needs a plan on exactly B and C");
  auto s = [&](const PartySet& t) { return von_neumann_entropy(partial_trace(rho, t)); };
  return s({0}) + s({1}) + s({2}) - s({0, 1}) - s({0, 2}) +
         measured_conditional_entropy(rho, PartySet{0}, bc, plan_bc);
}

}  // namespace oqmi
