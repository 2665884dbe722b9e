#include "resourceforge/optimizer.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <thread>

#include "resourceforge/error.hpp"

namespace resourceforge {

namespace {

constexpr double kPenalty = 1e6;
constexpr std::size_t kFullLatticeLimit = 20000;
constexpr std::size_t kLatticeSamples = 4096;
constexpr int kPolishRounds = 2;

struct GslVectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct GslMinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};
using GslVector = std::unique_ptr<gsl_vector, GslVectorDeleter>;
using GslMinimizer = std::unique_ptr<gsl_multimin_fminimizer, GslMinimizerDeleter>;

void disable_gsl_abort() {
  static const bool once = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)once;
}

double gsl_trampoline(const gsl_vector* x, void* params) {
  const auto& f = *static_cast<const Objective*>(params);
  const double value = f(std::span<const double>(x->data, x->size));
  return std::isfinite(value) ? value : kPenalty;
}

GslVector to_gsl(std::span<const double> values) {
  GslVector v(gsl_vector_alloc(values.size()));
  std::copy(values.begin(), values.end(), v->data);
  return v;
}

// Runs body(i) for i in [0, n) on up to hardware_concurrency threads.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  }
}

double lattice_node(const Coordinate& c, std::size_t k, std::size_t points) {
  if (points <= 1) return c.lower;
  const double span = c.upper - c.lower;
  const double denom = c.periodic ? static_cast<double>(points) : static_cast<double>(points - 1);
  return c.lower + span * static_cast<double>(k) / denom;
}

std::vector<std::vector<double>> lattice_seeds(std::span<const Coordinate> box, std::size_t points,
                                               std::mt19937_64& rng) {
  const std::size_t n = box.size();
  std::size_t total = 1;
  bool full = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (total > kFullLatticeLimit / points) {
      full = false;
      break;
    }
    total *= points;
  }
  std::vector<std::vector<double>> seeds;
  if (full) {
    seeds.reserve(total);
    std::vector<std::size_t> digit(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::vector<double> x(n);
      for (std::size_t c = 0; c < n; ++c) x[c] = lattice_node(box[c], digit[c], points);
      seeds.push_back(std::move(x));
      for (std::size_t c = n; c-- > 0;) {
        if (++digit[c] < points) break;
        digit[c] = 0;
      }
    }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, points - 1);
    seeds.reserve(kLatticeSamples);
    for (std::size_t s = 0; s < kLatticeSamples; ++s) {
      std::vector<double> x(n);
      for (std::size_t c = 0; c < n; ++c) x[c] = lattice_node(box[c], pick(rng), points);
      seeds.push_back(std::move(x));
    }
  }
  return seeds;
}

}  // namespace

void OptimizerConfig::check() const {
  if (restarts < 1 || grid_points < 1 || max_iterations < 1) {
    throw Error(ErrorCode::InvalidArgument, "optimizer counts must be at least 1");
  }
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::InvalidArgument, "optimizer tolerance must be positive");
  }
}

SimplexResult nelder_mead(const Objective& f, std::vector<double> start, std::span<const double> step,
                          std::size_t max_iterations, double tolerance) {
  disable_gsl_abort();
  const std::size_t n = start.size();
  if (n == 0 || step.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "simplex start and step sizes must match and be non-empty");
  }
  GslVector x = to_gsl(start);
  GslVector ss = to_gsl(step);
  gsl_multimin_function fn{&gsl_trampoline, n, const_cast<Objective*>(&f)};
  GslMinimizer minimizer(gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  gsl_multimin_fminimizer_set(minimizer.get(), &fn, x.get(), ss.get());

  std::size_t iter = 0;
  bool converged = false;
  while (iter < max_iterations) {
    ++iter;
    if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) break;
    const double size = gsl_multimin_fminimizer_size(minimizer.get());
    if (gsl_multimin_test_size(size, tolerance) == GSL_SUCCESS) {
      converged = true;
      break;
    }
  }
  const gsl_vector* best = gsl_multimin_fminimizer_x(minimizer.get());
  std::vector<double> out(best->data, best->data + n);
  const double value = f(out);
  return {std::move(out), value, iter, converged};
}

MultiStartResult multistart_minimize(const Objective& f, std::span<const Coordinate> box,
                                     const OptimizerConfig& cfg,
                                     std::span<const std::vector<double>> warm_starts) {
  cfg.check();
  const std::size_t n = box.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty search space");
  for (const auto& w : warm_starts) {
    if (w.size() != n) throw Error(ErrorCode::InvalidArgument, "warm start has the wrong length");
  }
  std::mt19937_64 rng(cfg.seed);

  // Lattice screening.
  const auto seeds = lattice_seeds(box, std::max<std::size_t>(cfg.grid_points, 1), rng);
  std::vector<double> seed_values(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) { seed_values[i] = f(seeds[i]); });
  std::vector<std::size_t> order(seeds.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return seed_values[a] < seed_values[b]; });

  std::vector<std::vector<double>> starts(warm_starts.begin(), warm_starts.end());
  const std::size_t from_lattice = std::min(order.size(), (cfg.restarts + 1) / 2);
  for (std::size_t k = 0; k < from_lattice; ++k) starts.push_back(seeds[order[k]]);
  while (starts.size() < warm_starts.size() + cfg.restarts) {
    std::vector<double> x(n);
    for (std::size_t c = 0; c < n; ++c) {
      x[c] = std::uniform_real_distribution<double>(box[c].lower, box[c].upper)(rng);
    }
    starts.push_back(std::move(x));
  }

  std::vector<double> step(n);
  for (std::size_t c = 0; c < n; ++c) {
    step[c] = (box[c].upper - box[c].lower) / static_cast<double>(std::max<std::size_t>(cfg.grid_points, 2));
  }

  std::vector<SimplexResult> results(starts.size());
  parallel_for(starts.size(), [&](std::size_t r) {
    SimplexResult best = nelder_mead(f, starts[r], step, cfg.max_iterations, cfg.tolerance);
    // Re-seeding the simplex at the optimum guards against premature collapse.
    std::vector<double> small(step);
    for (int round = 0; round < kPolishRounds; ++round) {
      for (double& s : small) s *= 0.1;
      SimplexResult again = nelder_mead(f, best.x, small, cfg.max_iterations, cfg.tolerance);
      const bool improved = again.value < best.value - 1e-14;
      if (again.value <= best.value) best = std::move(again);
      if (!improved) break;
    }
    results[r] = std::move(best);
  });

  MultiStartResult out;
  out.value = results.front().value;
  std::size_t best_index = 0;
  for (std::size_t r = 0; r < results.size(); ++r) {
    out.trace.emplace_back(r, results[r].value);
    if (results[r].value < out.value) {
      out.value = results[r].value;
      best_index = r;
    }
  }
  out.argmin = results[best_index].x;
  return out;
}

}  // namespace resourceforge
