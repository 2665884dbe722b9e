#pragma once

// Majorization, single-shot noisy-operation transitions and asymptotic
// conversion rates between resource states.

#include "resourceforge/entropy.hpp"

namespace resourceforge {

struct RateResult {
  /// numerator / denominator, or +infinity when only the target is free.
  double rate = 0.0;
  Bits numerator_bits = 0.0;
  Bits denominator_bits = 0.0;
};

/// True iff every descending prefix sum of x is at least that of y (within
/// 1e-9). The shorter spectrum is padded with zeros. Throws UnequalSums if
/// the totals differ by more than 1e-9.
bool majorizes(const Spectrum& x, const Spectrum& y);

/// Spectrum of rho (x) I/k: each eigenvalue divided by k and repeated k times.
Spectrum pad_with_maximally_mixed(const Spectrum& s, std::size_t k);

/// Whether noisy operations (adding maximally mixed ancillas, unitaries,
/// partial traces) can take rho to sigma in one shot.
///
/// States of different dimension are compared on a common space of
/// dimension D = d_rho * d_sigma: rho is tensored with I/d_sigma and sigma
/// with I/d_rho, and the padded spectra are tested for majorization. This
/// padding rule is a modelling choice for the cross-dimension case.
bool single_shot_noisy_transition(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  std::size_t max_dim = kDefaultMaxDim);

/// Pure qubits distillable per copy: the negentropy over a denominator of 1.
RateResult purity_rate(const DensityMatrix& rho);

/// Ratio of (regularized) relative-entropy distances supplied by the caller.
/// Throws BothZero when both are free (at or below 1e-12), InvalidArgument
/// for negative inputs.
RateResult conversion_rate(Bits er_source, Bits er_target);

/// Rate for states commuting with H: ratio of free-energy gaps. Throws
/// NonCommuting when either state fails [state, H] = 0 to 1e-9.
RateResult thermo_rate(const DensityMatrix& rho, const DensityMatrix& target, const Hamiltonian& h);

}  // namespace resourceforge
