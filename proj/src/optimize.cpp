#include "oqmi/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

namespace oqmi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kParallelThreshold = 64;

struct AxisGrid {
  std::vector<BlochAngles> points;  // theta-major, matching lexicographic order
  double theta_step;
  double phi_step;
};

AxisGrid make_grid(std::size_t n_theta, std::size_t n_phi, bool half_phi) {
  const double phi_range = half_phi ? kPi : 2.0 * kPi;
  AxisGrid g{{}, kPi / static_cast<double>(n_theta - 1), phi_range / static_cast<double>(n_phi)};
  g.points.reserve(n_theta * n_phi);
  for (std::size_t i = 0; i < n_theta; ++i)
    for (std::size_t j = 0; j < n_phi; ++j)
      g.points.push_back({g.theta_step * static_cast<double>(i), g.phi_step * static_cast<double>(j)});
  return g;
}

std::size_t argmax_first(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  return best;
}

class Counted {
 public:
  Counted(const AngleObjective& f) : f_(f) {}
  double operator()(std::span<const BlochAngles> a) const {
    ++count_;
    return f_(a);
  }
  std::size_t count() const { return count_; }
  void add(std::size_t n) const { count_ += n; }

 private:
  const AngleObjective& f_;
  mutable std::size_t count_ = 0;
};

struct NelderMeadContext {
  const Counted* objective;
  std::size_t parties;
  bool half_phi;
  std::exception_ptr error;
};

std::vector<BlochAngles> to_angles(const gsl_vector* x, std::size_t parties, bool half_phi) {
  std::vector<BlochAngles> a(parties);
  for (std::size_t k = 0; k < parties; ++k)
    a[k] = canonical_angles(gsl_vector_get(x, 2 * k), gsl_vector_get(x, 2 * k + 1), half_phi);
  return a;
}

double negated(const gsl_vector* x, void* params) {
  auto* ctx = static_cast<NelderMeadContext*>(params);
  if (ctx->error) return std::numeric_limits<double>::quiet_NaN();
  try {
    return -(*ctx->objective)(to_angles(x, ctx->parties, ctx->half_phi));
  } catch (...) {
    ctx->error = std::current_exception();
    return std::numeric_limits<double>::quiet_NaN();
  }
}

struct Refined {
  std::vector<BlochAngles> angles;
  double value;
  std::size_t iterations;
};

Refined nelder_mead(const Counted& objective, std::vector<BlochAngles> start, double start_value,
                    double theta_step, double phi_step, const OptimizerConfig& cfg) {
  const std::size_t parties = start.size();
  const std::size_t dim = 2 * parties;
  NelderMeadContext ctx{&objective, parties, cfg.half_phi, nullptr};
  gsl_multimin_function fn{&negated, dim, &ctx};

  gsl_vector* x = gsl_vector_alloc(dim);
  gsl_vector* step = gsl_vector_alloc(dim);
  for (std::size_t k = 0; k < parties; ++k) {
    gsl_vector_set(x, 2 * k, start[k].theta);
    gsl_vector_set(x, 2 * k + 1, start[k].phi);
    gsl_vector_set(step, 2 * k, theta_step);
    gsl_vector_set(step, 2 * k + 1, phi_step);
  }
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim);
  gsl_multimin_fminimizer_set(s, &fn, x, step);

  std::size_t iter = 0;
  while (iter < cfg.refine_iterations && !ctx.error) {
    ++iter;
    if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), cfg.refine_tolerance) == GSL_SUCCESS) break;
  }

  Refined out{std::move(start), start_value, iter};
  const double refined = -gsl_multimin_fminimizer_minimum(s);
  if (!ctx.error && std::isfinite(refined) && refined > start_value) {
    // Re-evaluate so the reported value belongs to the reported angles.
    auto angles = to_angles(gsl_multimin_fminimizer_x(s), parties, cfg.half_phi);
    const double value = objective(angles);
    if (value > start_value) {
      out.angles = std::move(angles);
      out.value = value;
    }
  }
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(step);
  gsl_vector_free(x);
  if (ctx.error) std::rethrow_exception(ctx.error);
  return out;
}

}  // namespace

void OptimizerConfig::check() const {
  if (grid_theta < 2 || grid_phi < 2 || coordinate_grid < 2)
    throw std::invalid_argument("optimizer grid counts must be at least 2");
  if (!(refine_tolerance > 0.0)) throw std::invalid_argument("refine tolerance must be positive");
}

std::vector<double> parallel_evaluate(std::size_t count, const std::function<double(std::size_t)>& fn,
                                      std::size_t threads) {
  std::vector<double> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1 || count < kParallelThreshold) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }

  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w)
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += threads) out[i] = fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

AngleSearchResult maximize_over_axes(std::size_t parties, const AngleObjective& objective,
                                     const OptimizerConfig& cfg) {
  cfg.check();
  if (parties == 0) throw std::invalid_argument("nothing to optimize over");
  const Counted f(objective);
  AngleSearchResult result;

  if (parties == 1) {
    const AxisGrid grid = make_grid(cfg.grid_theta, cfg.grid_phi, cfg.half_phi);
    const auto values = parallel_evaluate(
        grid.points.size(),
        [&](std::size_t i) { return objective(std::span<const BlochAngles>(&grid.points[i], 1)); },
        cfg.threads);
    f.add(values.size());
    const std::size_t best = argmax_first(values);
    result.grid_best = values[best];
    auto refined = nelder_mead(f, {grid.points[best]}, values[best], grid.theta_step, grid.phi_step, cfg);
    result.angles = std::move(refined.angles);
    result.best = refined.value;
    result.iterations = refined.iterations;
    result.evaluations = f.count();
    for (auto& a : result.angles) a = canonical_angles(a.theta, a.phi, cfg.half_phi);
    return result;
  }

  const std::size_t nt = std::min(cfg.coordinate_grid, cfg.grid_theta);
  const std::size_t np = std::min(cfg.coordinate_grid, cfg.grid_phi);
  const AxisGrid grid = make_grid(nt, np, cfg.half_phi);

  // Symmetric start: all parties share one axis.
  std::vector<std::vector<BlochAngles>> starts;
  {
    const auto values = parallel_evaluate(
        grid.points.size(),
        [&](std::size_t i) {
          const std::vector<BlochAngles> same(parties, grid.points[i]);
          return objective(same);
        },
        cfg.threads);
    f.add(values.size());
    starts.emplace_back(parties, grid.points[argmax_first(values)]);
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> theta_dist(0.0, kPi);
  std::uniform_real_distribution<double> phi_dist(0.0, cfg.half_phi ? kPi : 2.0 * kPi);
  for (std::size_t s = 0; s < cfg.random_starts; ++s) {
    std::vector<BlochAngles> start(parties);
    for (auto& a : start) {
      a.theta = theta_dist(rng);
      a.phi = phi_dist(rng);
    }
    starts.push_back(std::move(start));
  }

  bool have_best = false;
  for (auto& point : starts) {
    double value = f(point);
    for (std::size_t round = 0; round < cfg.coordinate_rounds; ++round)
      for (std::size_t k = 0; k < parties; ++k) {
        const auto values = parallel_evaluate(
            grid.points.size(),
            [&](std::size_t i) {
              auto trial = point;
              trial[k] = grid.points[i];
              return objective(trial);
            },
            cfg.threads);
        f.add(values.size());
        const std::size_t best = argmax_first(values);
        if (values[best] > value) {
          value = values[best];
          point[k] = grid.points[best];
        }
      }
    if (!have_best || value > result.grid_best) result.grid_best = value;

    auto refined = nelder_mead(f, point, value, grid.theta_step, grid.phi_step, cfg);
    result.iterations += refined.iterations;
    if (!have_best || refined.value > result.best) {
      result.best = refined.value;
      result.angles = std::move(refined.angles);
    }
    have_best = true;
  }
  for (auto& a : result.angles) a = canonical_angles(a.theta, a.phi, cfg.half_phi);
  result.evaluations = f.count();
  return result;
}

}  // namespace oqmi
