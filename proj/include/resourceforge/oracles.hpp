#pragma once

// Brute-force references used to certify the optimizers and the
// majorization test. Built as a separate library that only the test
// suites link against.

#include <cstddef>
#include <cstdint>

#include "resourceforge/entropy.hpp"

namespace resourceforge::oracles {

/// Bloch-sphere discretization of qubit measurement bases: theta over
/// [0, pi] including both poles, phi over [0, 2 pi) excluding 2 pi.
struct GridSpec {
  std::size_t theta_points = 100;
  std::size_t phi_points = 100;
};

/// Orthonormal qubit basis whose first vector has Bloch angles (theta, phi).
ComplexMatrix bloch_basis(double theta, double phi);

/// Exhaustive minimum of the fixed one-way deficit over the grid. Requires
/// a bipartite state with a qubit on A (NotAQubitOnA otherwise).
Bits grid_min_deficit(const DensityMatrix& rho, const GridSpec& grid = {});

/// Same for the fixed discord.
Bits grid_min_discord(const DensityMatrix& rho, const GridSpec& grid = {});

/// True iff some sampled convex mixture of permutation matrices maps x to
/// within 1e-6 (max norm, after sorting) of y. Sample 0 is the identity and
/// sample 1 the uniform average of all permutations; the rest mix a random
/// number of random permutations with Dirichlet weights.
bool random_bistochastic_reachability(const Spectrum& x, const Spectrum& y, std::size_t samples,
                                      std::uint64_t seed);

}  // namespace resourceforge::oracles
