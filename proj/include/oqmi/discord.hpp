#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "oqmi/measurement.hpp"
#include "oqmi/optimize.hpp"
#include "oqmi/states.hpp"
#include "oqmi/sweep.hpp"

namespace oqmi {

enum class MIKind { Operational, ConventionalIx };

MIKind parse_mi_kind(std::string_view text);  // "operational" | "ix"
std::string_view to_string(MIKind kind);

double mutual_information_of_kind(MIKind kind, const DensityMatrix& rho);

// Raw discords in [-kDiscordClampWindow, 0) are reported as 0 with `clamped`.
inline constexpr double kDiscordClampWindow = 2e-3;

struct DiscordSpec {
  PartySet measured;
  MIKind mi = MIKind::Operational;
  OptimizerConfig optimizer;
};

struct DiscordResult {
  double value = 0.0;            // pre_measurement_mi - optimized_mi unless clamped
  double pre_measurement_mi = 0.0;
  double optimized_mi = 0.0;     // best post-measurement functional found
  double grid_mi = 0.0;          // best value before local refinement
  std::map<std::size_t, BlochAngles> best_angles;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool clamped = false;
};

// I(A:B) - max_M [S(target) - S_M(target | measured)] over qubit bases of the
// measured party. For two-party states only.
DiscordResult bipartite_discord(const DensityMatrix& rho, std::size_t measured_party,
                                const OptimizerConfig& cfg = {});

// Same functional maximized over an explicit list of bases; any dimension.
DiscordResult bipartite_discord(const DensityMatrix& rho, std::size_t measured_party,
                                std::span<const ProjectiveBasis> candidates);

// I(rho) - max over local qubit bases on spec.measured of I(apply_plan(rho)),
// where I is the operational or conventional mutual information.
DiscordResult multiparty_discord(const DensityMatrix& rho, const DiscordSpec& spec);

// Same difference maximized over explicit plans; any dimension.
DiscordResult multiparty_discord(const DensityMatrix& rho, MIKind mi,
                                 std::span<const MeasurementPlan> candidates);

// One record per p: columns D_<parties>, I_pre, I_post, then theta_X/phi_X
// for each measured party X.
std::vector<SweepRecord> discord_noise_sweep(const NamedState& family, const DiscordSpec& spec,
                                             std::span<const double> p_grid);

}  // namespace oqmi
