#pragma once

// Entropic functionals. All logarithms are base 2, so every value is in bits.
// Relative entropy may be +infinity; that is a value, not an error.

#include <limits>

#include "resourceforge/qstate.hpp"

namespace resourceforge {

/// A quantity in bits. Only relative entropies may be +infinity.
using Bits = double;

inline constexpr Bits kInfiniteBits = std::numeric_limits<double>::infinity();

/// Hermitian H together with an inverse temperature beta >= 0.
class Hamiltonian {
 public:
  Hamiltonian(const ComplexMatrix& matrix, double beta);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  double beta() const noexcept { return beta_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
  double beta_;
};

/// -sum lambda log2 lambda, eigenvalues below tol::kClamp dropped.
Bits entropy_of_spectrum(const Spectrum& spectrum);

Bits vn_entropy(const DensityMatrix& rho);

/// S(rho || sigma) = Tr rho log rho - Tr rho log sigma, evaluated in sigma's
/// eigenbasis. +infinity when rho has weight above tol::kClamp on an
/// eigenvector of sigma whose eigenvalue is at or below tol::kClamp.
Bits relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(A) + S(B) - S(AB) for a two-subsystem state.
Bits mutual_information(const DensityMatrix& rho);

/// log2 d - S(rho).
Bits negentropy(const DensityMatrix& rho);

/// exp(-beta H) / Z, computed from the eigendecomposition of H.
DensityMatrix gibbs_state(const Hamiltonian& h);

/// S(rho || gibbs_state(h)) in bits. In thermodynamic units the free-energy
/// difference is F(rho) - F(gamma) = kT ln 2 * free_energy_gap(rho, h).
Bits free_energy_gap(const DensityMatrix& rho, const Hamiltonian& h);

}  // namespace resourceforge
