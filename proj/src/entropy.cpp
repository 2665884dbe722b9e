#include "resourceforge/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace resourceforge {

Hamiltonian::Hamiltonian(const ComplexMatrix& matrix, double beta) : matrix_(matrix), beta_(beta) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "Hamiltonian must be square and non-empty");
  }
  if (!matrix.allFinite()) throw Error(ErrorCode::NonFinite, "Hamiltonian has NaN or Inf entries");
  if (max_abs(matrix - matrix.adjoint()) > tol::kConstruction) {
    throw Error(ErrorCode::NotHermitian, "Hamiltonian is not Hermitian");
  }
  if (!std::isfinite(beta) || beta < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "beta must be finite and non-negative");
  }
  matrix_ = 0.5 * (matrix + matrix.adjoint());
}

Bits entropy_of_spectrum(const Spectrum& spectrum) {
  Bits s = 0.0;
  for (double lambda : spectrum.values()) {
    if (lambda > tol::kClamp) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

Bits vn_entropy(const DensityMatrix& rho) {
  return entropy_of_spectrum(eig_hermitian(rho.matrix()).spectrum);
}

Bits relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimensions " + std::to_string(rho.dim()) + " and " + std::to_string(sigma.dim()));
  }
  const EigenDecomposition sig = eig_hermitian(sigma.matrix());
  // Tr rho log sigma = sum_k <s_k|rho|s_k> log sigma_k
  double cross = 0.0;
  for (std::size_t k = 0; k < sig.spectrum.size(); ++k) {
    const double weight = (sig.vectors.col(k).adjoint() * rho.matrix() * sig.vectors.col(k))(0).real();
    const double lambda = sig.spectrum[k];
    if (lambda <= tol::kClamp) {
      if (weight > tol::kClamp) return kInfiniteBits;
      continue;
    }
    cross += weight * std::log2(lambda);
  }
  const Bits value = -vn_entropy(rho) - cross;
  return std::max(value, 0.0);
}

Bits mutual_information(const DensityMatrix& rho) {
  if (rho.subsystems() != 2) {
    throw Error(ErrorCode::NotBipartite,
                "expected 2 subsystems, got " + std::to_string(rho.subsystems()));
  }
  const Bits value = vn_entropy(partial_trace(rho, {0})) + vn_entropy(partial_trace(rho, {1})) -
                     vn_entropy(rho);
  return std::max(value, 0.0);
}

Bits negentropy(const DensityMatrix& rho) {
  return std::max(std::log2(static_cast<double>(rho.dim())) - vn_entropy(rho), 0.0);
}

DensityMatrix gibbs_state(const Hamiltonian& h) {
  const EigenDecomposition eig = eig_hermitian(h.matrix());
  const std::size_t d = h.dim();
  // Shift by the ground energy (the smallest eigenvalue, last in order).
  const double ground = eig.spectrum[d - 1];
  Eigen::VectorXd weights(d);
  for (std::size_t k = 0; k < d; ++k) weights(k) = std::exp(-h.beta() * (eig.spectrum[k] - ground));
  weights /= weights.sum();
  ComplexMatrix gamma = eig.vectors * weights.cast<std::complex<double>>().asDiagonal() *
                        eig.vectors.adjoint();
  return DensityMatrix::trusted(std::move(gamma), Dims{d});
}

Bits free_energy_gap(const DensityMatrix& rho, const Hamiltonian& h) {
  if (rho.dim() != h.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and Hamiltonian dimensions differ");
  }
  return relative_entropy(rho, gibbs_state(h));
}

}  // namespace resourceforge
