#include "oqmi/discord.hpp"

#include <stdexcept>

#include "oqmi/entropy.hpp"
#include "oqmi/mutualinfo.hpp"

namespace oqmi {

namespace {

void finish(DiscordResult& r) {
  const double raw = r.pre_measurement_mi - r.optimized_mi;
  r.value = raw;
  if (raw < 0.0 && raw >= -kDiscordClampWindow) {
    r.value = 0.0;
    r.clamped = true;
  }
}

void require_qubits(const DensityMatrix& rho, const PartySet& parties) {
  for (std::size_t p : parties)
    if (rho.dims()[p] != 2)
      throw std::invalid_argument("party " + PartySet{p}.letters() +
                                  " is not a qubit; the angle optimizer only covers qubits, "
                                  "explicit basis list required");
}

MeasurementPlan plan_from(const PartySet& parties, std::span<const BlochAngles> angles) {
  MeasurementPlan plan;
  for (std::size_t k = 0; k < parties.size(); ++k) plan.assignments.emplace(parties[k], qubit_basis(angles[k]));
  return plan;
}

struct BipartiteParts {
  PartySet measured;
  PartySet target;
  double qmi;
  double target_entropy;
};

BipartiteParts bipartite_parts(const DensityMatrix& rho, std::size_t measured_party) {
  if (rho.parties() != 2) throw std::invalid_argument("bipartite discord needs a two-party state");
  if (measured_party > 1) throw std::invalid_argument("measured party must be 0 or 1");
  PartySet measured{measured_party};
  PartySet target{1 - measured_party};
  return {measured, target, bipartite_qmi(rho), von_neumann_entropy(partial_trace(rho, target))};
}

}  // namespace

MIKind parse_mi_kind(std::string_view text) {
  if (text == "operational") return MIKind::Operational;
  if (text == "ix" || text == "conventional") return MIKind::ConventionalIx;
  throw std::invalid_argument("unknown mutual information kind '" + std::string(text) + "'");
}

std::string_view to_string(MIKind kind) {
  return kind == MIKind::Operational ? "operational" : "ix";
}

double mutual_information_of_kind(MIKind kind, const DensityMatrix& rho) {
  return kind == MIKind::Operational ? operational_qmi(rho) : conventional_ix(rho);
}

DiscordResult bipartite_discord(const DensityMatrix& rho, std::size_t measured_party,
                                const OptimizerConfig& cfg) {
  const auto parts = bipartite_parts(rho, measured_party);
  require_qubits(rho, parts.measured);

  const AngleObjective classical = [&](std::span<const BlochAngles> a) {
    return parts.target_entropy -
           measured_conditional_entropy(rho, parts.target, parts.measured, plan_from(parts.measured, a));
  };
  const auto search = maximize_over_axes(1, classical, cfg);

  DiscordResult r;
  r.pre_measurement_mi = parts.qmi;
  r.optimized_mi = search.best;
  r.grid_mi = search.grid_best;
  r.best_angles.emplace(measured_party, search.angles.front());
  r.iterations = search.iterations;
  r.evaluations = search.evaluations;
  finish(r);
  return r;
}

DiscordResult bipartite_discord(const DensityMatrix& rho, std::size_t measured_party,
                                std::span<const ProjectiveBasis> candidates) {
  if (candidates.empty()) throw std::invalid_argument("no candidate bases given");
  const auto parts = bipartite_parts(rho, measured_party);

  DiscordResult r;
  r.pre_measurement_mi = parts.qmi;
  bool first = true;
  for (const auto& basis : candidates) {
    MeasurementPlan plan;
    plan.assignments.emplace(measured_party, basis);
    const double j =
        parts.target_entropy - measured_conditional_entropy(rho, parts.target, parts.measured, plan);
    if (first || j > r.optimized_mi) r.optimized_mi = j;
    first = false;
    ++r.evaluations;
  }
  r.grid_mi = r.optimized_mi;
  finish(r);
  return r;
}

DiscordResult multiparty_discord(const DensityMatrix& rho, const DiscordSpec& spec) {
  if (spec.measured.empty()) throw std::invalid_argument("discord needs at least one measured party");
  spec.measured.check_against(rho.parties());
  require_qubits(rho, spec.measured);

  const AngleObjective post = [&](std::span<const BlochAngles> a) {
    return mutual_information_of_kind(spec.mi, apply_plan(rho, plan_from(spec.measured, a)));
  };
  const auto search = maximize_over_axes(spec.measured.size(), post, spec.optimizer);

  DiscordResult r;
  r.pre_measurement_mi = mutual_information_of_kind(spec.mi, rho);
  r.optimized_mi = search.best;
  r.grid_mi = search.grid_best;
  for (std::size_t k = 0; k < spec.measured.size(); ++k) r.best_angles.emplace(spec.measured[k], search.angles[k]);
  r.iterations = search.iterations;
  r.evaluations = search.evaluations;
  finish(r);
  return r;
}

DiscordResult multiparty_discord(const DensityMatrix& rho, MIKind mi,
                                 std::span<const MeasurementPlan> candidates) {
  if (candidates.empty()) throw std::invalid_argument("no candidate plans given");
  DiscordResult r;
  r.pre_measurement_mi = mutual_information_of_kind(mi, rho);
  bool first = true;
  for (const auto& plan : candidates) {
    const double post = mutual_information_of_kind(mi, apply_plan(rho, plan));
    if (first || post > r.optimized_mi) r.optimized_mi = post;
    first = false;
    ++r.evaluations;
  }
  r.grid_mi = r.optimized_mi;
  finish(r);
  return r;
}

std::vector<SweepRecord> discord_noise_sweep(const NamedState& family, const DiscordSpec& spec,
                                             std::span<const double> p_grid) {
  const PureState psi = build(family);
  const std::string tag = spec.measured.letters();
  std::vector<SweepRecord> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    const auto r = multiparty_discord(white_noise(psi, p), spec);
    SweepRecord rec{p, {}};
    rec.values.emplace_back("D_" + tag, r.value);
    rec.values.emplace_back("I_pre", r.pre_measurement_mi);
    rec.values.emplace_back("I_post", r.optimized_mi);
    for (const auto& [party, a] : r.best_angles) {
      const std::string letter = PartySet{party}.letters();
      rec.values.emplace_back("theta_" + letter, a.theta);
      rec.values.emplace_back("phi_" + letter, a.phi);
    }
    rows.push_back(std::move(rec));
  }
  return rows;
}

}  // namespace oqmi
