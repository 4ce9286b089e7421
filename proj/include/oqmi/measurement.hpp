#pragma once

#include <map>
#include <vector>

#include "oqmi/qcore.hpp"

namespace oqmi {

// Complete rank-one orthonormal basis for one subsystem; vectors are the
// columns of `vectors`.
class ProjectiveBasis {
 public:
  // Throws std::invalid_argument unless the columns are orthonormal to 1e-10.
  explicit ProjectiveBasis(ComplexMatrix vectors);

  static ProjectiveBasis computational(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(vectors_.rows()); }
  const ComplexMatrix& vectors() const { return vectors_; }
  ComplexMatrix projector(std::size_t outcome) const;

 private:
  ComplexMatrix vectors_;
};

// Qubit measurement axis on the Bloch sphere.
struct BlochAngles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  friend bool operator==(const BlochAngles&, const BlochAngles&) = default;
};

// Maps arbitrary real angles onto the same measurement axis with theta in
// [0, pi] and phi in [0, 2 pi). With `half_phi`, the antipodal axis (same
// projector pair) is used whenever phi >= pi, so phi lands in [0, pi).
BlochAngles canonical_angles(double theta, double phi, bool half_phi = false);

// {(cos t/2, e^{i phi} sin t/2), (-e^{-i phi} sin t/2, cos t/2)}
ProjectiveBasis qubit_basis(const BlochAngles& angles);

struct MeasurementPlan {
  std::map<std::size_t, ProjectiveBasis> assignments;

  PartySet parties() const;
  // Throws if a party is out of range or a basis dimension mismatches.
  void check_against(const Dims& dims) const;
};

// Non-selective measurement: sum over outcome tuples of (P ⊗ I) rho (P ⊗ I).
DensityMatrix apply_plan(const DensityMatrix& rho, const MeasurementPlan& plan);

struct MeasurementOutcome {
  double probability;
  DensityMatrix conditional;  // normalized post-measurement state of the target
};

// Outcomes of measuring `plan` on its parties, with the conditional states of
// `target`. Outcomes below 1e-12 probability are dropped.
std::vector<MeasurementOutcome> measurement_outcomes(const DensityMatrix& rho, const PartySet& target,
                                                     const MeasurementPlan& plan);

// sum_i p_i S(rho_{target|i}); `measured` must equal the plan's parties.
double measured_conditional_entropy(const DensityMatrix& rho, const PartySet& target,
                                    const PartySet& measured, const MeasurementPlan& plan);

// One measurement per conditional term of J1: S_M(B|A), S_M(A|B), S_M(A|C),
// S_M(B|C) and S_M(AB|C). Party labels are A=0, B=1, C=2.
struct J1Plans {
  ProjectiveBasis on_a_for_b;
  ProjectiveBasis on_b_for_a;
  ProjectiveBasis on_c_for_a;
  ProjectiveBasis on_c_for_b;
  ProjectiveBasis on_c_for_ab;

  static J1Plans uniform(const ProjectiveBasis& a, const ProjectiveBasis& b, const ProjectiveBasis& c);
};

double measured_cmi_j1(const DensityMatrix& rho, const J1Plans& plans);

// S(A)+S(B)+S(C) - S(AB) - S(AC) + S_M(A|BC); the plan must cover exactly B and C.
double measured_cmi_j2(const DensityMatrix& rho, const MeasurementPlan& plan_bc);

}  // namespace oqmi
