#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "oqmi/measurement.hpp"

namespace oqmi {

// Search over one Bloch axis per measured qubit.
//
// One party: exhaustive grid_theta x grid_phi scan, then Nelder-Mead from the
// best grid point. Several parties: the full product grid is out of reach, so
// each start (a symmetric scan where every party shares the same angles, plus
// `random_starts` seeded points) goes through `coordinate_rounds` sweeps of a
// per-party coordinate_grid x coordinate_grid scan with the other parties
// frozen, and Nelder-Mead refines every start.
struct OptimizerConfig {
  std::size_t grid_theta = 25;
  std::size_t grid_phi = 25;
  std::size_t refine_iterations = 200;
  double refine_tolerance = 1e-6;
  std::uint64_t seed = 0;

  std::size_t coordinate_grid = 12;
  std::size_t coordinate_rounds = 2;
  std::size_t random_starts = 4;
  // Restrict phi to [0, pi). Every axis or its antipode (same projector pair)
  // has phi in that range, so this only halves the search space.
  bool half_phi = true;
  std::size_t threads = 0;  // 0 picks std::thread::hardware_concurrency()

  void check() const;
};

using AngleObjective = std::function<double(std::span<const BlochAngles>)>;

struct AngleSearchResult {
  std::vector<BlochAngles> angles;  // canonical form of the best point
  double best = 0.0;                // objective at `angles`
  double grid_best = 0.0;           // best value before Nelder-Mead refinement
  std::size_t evaluations = 0;
  std::size_t iterations = 0;       // Nelder-Mead iterations over all starts
};

// Maximizes `objective` over `parties` Bloch axes. The objective must be safe
// to call concurrently. Grid ties resolve to the lexicographically smallest
// angle tuple, so the result does not depend on thread scheduling.
AngleSearchResult maximize_over_axes(std::size_t parties, const AngleObjective& objective,
                                     const OptimizerConfig& cfg);

// Evaluates fn(i) for i in [0, count) on up to `threads` workers.
std::vector<double> parallel_evaluate(std::size_t count, const std::function<double(std::size_t)>& fn,
                                      std::size_t threads);

}  // namespace oqmi
