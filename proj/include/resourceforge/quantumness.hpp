#pragma once

// Quantum discord, one-way and zero-way deficits, their relative-entropy
// counterparts, and the extended (isometry) and multi-copy variants.
//
// Subsystem 0 of a bipartite state is A (the measured side for the one-way
// family), subsystem 1 is B.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "resourceforge/entropy.hpp"
#include "resourceforge/measurements.hpp"
#include "resourceforge/optimizer.hpp"

namespace resourceforge {

struct QuantumnessResult {
  Bits value = 0.0;
  /// One measurement on A for the one-way family; (A, B) for zero-way.
  std::vector<ProjectiveMeasurement> measurements;
  /// Set only by generalized_deficit: the optimal local isometry A -> A'.
  std::optional<Isometry> isometry;
  std::vector<std::pair<std::size_t, double>> trace;
};

/// S(rho') - S(rho) with rho' the state after measuring A with m.
Bits deficit_one_way_fixed(const DensityMatrix& rho, const ProjectiveMeasurement& m);

/// I(rho) - I(rho') for the same rho'. Equal to the fixed deficit minus the
/// entropy production S(rho'_A) - S(rho_A) on A.
Bits discord_fixed(const DensityMatrix& rho, const ProjectiveMeasurement& m);

/// S(rho'') - S(rho) and I(rho) - I(rho'') with rho'' measured on both sides.
Bits deficit_zero_way_fixed(const DensityMatrix& rho, const ProjectiveMeasurement& ma,
                            const ProjectiveMeasurement& mb);
Bits discord_zero_way_fixed(const DensityMatrix& rho, const ProjectiveMeasurement& ma,
                            const ProjectiveMeasurement& mb);

QuantumnessResult deficit_one_way(const DensityMatrix& rho, const OptimizerConfig& cfg = {});
QuantumnessResult discord(const DensityMatrix& rho, const OptimizerConfig& cfg = {});
QuantumnessResult deficit_zero_way(const DensityMatrix& rho, const OptimizerConfig& cfg = {});
QuantumnessResult discord_zero_way(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

/// min over bases of S(rho || sigma*) with sigma* the dephased state, the
/// closest classical-quantum state for that basis. Evaluated through
/// relative_entropy rather than the entropy difference.
QuantumnessResult relent_to_cq(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

/// Same with both sides dephased (closest classical-classical state).
QuantumnessResult relent_to_cc(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

/// One-way deficit after a local isometry A -> A' with dim A' = dA + extra_dim,
/// minimized jointly over the isometry and the measurement on A'. The
/// one-way optimum (identity embedding) is always a candidate.
QuantumnessResult generalized_deficit(const DensityMatrix& rho, std::size_t extra_dim,
                                      const OptimizerConfig& cfg = {},
                                      std::size_t max_dim = kDefaultMaxDim);

/// (1/n) times the one-way deficit of rho^{(x)n} grouped as (A^n | B^n),
/// allowing collective measurements on A^n. n is 1 or 2; the product of
/// single-copy optimal measurements is always a candidate.
QuantumnessResult multicopy_deficit(const DensityMatrix& rho, std::size_t copies,
                                    const OptimizerConfig& cfg = {},
                                    std::size_t max_dim = kDefaultMaxDim);

/// Basis built from Givens angles only (the diagonal phases, which do not
/// change the projectors, set to zero).
ProjectiveMeasurement measurement_from_givens(std::span<const double> angles, std::size_t d);

}  // namespace resourceforge
