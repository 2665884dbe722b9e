#pragma once

// Derivative-free minimization over measurement angles: a lattice of seed
// points, followed by Nelder-Mead simplex descents from the best seeds and
// from random points. Restarts are independent and are reduced in restart
// index order, so the result does not depend on how many threads ran them.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace resourceforge {

struct OptimizerConfig {
  std::size_t restarts = 32;
  std::size_t grid_points = 12;
  std::size_t max_iterations = 500;
  double tolerance = 1e-6;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument when a count is zero or the tolerance is not positive.
  void check() const;
};

using Objective = std::function<double(std::span<const double>)>;

/// Seeding box for one coordinate. Periodic coordinates exclude the upper
/// end from the lattice.
struct Coordinate {
  double lower;
  double upper;
  bool periodic;
};

struct SimplexResult {
  std::vector<double> x;
  double value;
  std::size_t iterations;
  bool converged;
};

/// One Nelder-Mead descent. `step` is the initial simplex edge per
/// coordinate; convergence when the simplex size falls below `tolerance`.
/// Non-finite objective values are treated as a large finite penalty.
SimplexResult nelder_mead(const Objective& f, std::vector<double> start, std::span<const double> step,
                          std::size_t max_iterations, double tolerance);

struct MultiStartResult {
  std::vector<double> argmin;
  double value;
  /// (restart index, converged value) for every restart, in index order.
  std::vector<std::pair<std::size_t, double>> trace;
};

/// Warm starts, if any, run first and take the lowest restart indices; the
/// remaining cfg.restarts descents start from the best lattice nodes and
/// from uniform random points.
MultiStartResult multistart_minimize(const Objective& f, std::span<const Coordinate> box,
                                     const OptimizerConfig& cfg,
                                     std::span<const std::vector<double>> warm_starts = {});

}  // namespace resourceforge
