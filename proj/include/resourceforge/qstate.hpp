#pragma once

// Dense finite-dimensional quantum states: construction, validation,
// composition, reduction and spectral decomposition.
//
// Subsystem order is fixed by the dims list. The first subsystem is the most
// significant digit of the row-major basis index, so |ij> has index i*d2 + j.

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "resourceforge/error.hpp"

namespace resourceforge {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultMaxDim = 256;

namespace tol {
inline constexpr double kConstruction = 1e-10;
inline constexpr double kDerived = 1e-9;
inline constexpr double kOptimization = 1e-3;
/// Eigenvalues at or below this are treated as exact zeros.
inline constexpr double kClamp = 1e-12;
}  // namespace tol

std::size_t dims_product(std::span<const std::size_t> dims);

/// Real eigenvalues, always held in descending order.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sum() const;

 private:
  std::vector<double> values_;
};

/// Hermitian, positive semidefinite, unit-trace matrix with a subsystem
/// signature. Instances only exist in a validated state.
class DensityMatrix {
 public:
  /// Checks every invariant and throws Error naming the first one violated.
  static DensityMatrix validate(const ComplexMatrix& m, Dims dims);

  /// Skips the spectral checks. For results of operations that preserve
  /// the invariants by construction; the matrix is re-symmetrized.
  static DensityMatrix trusted(ComplexMatrix m, Dims dims);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  std::size_t subsystems() const noexcept { return dims_.size(); }

 private:
  DensityMatrix(ComplexMatrix m, Dims dims) : matrix_(std::move(m)), dims_(std::move(dims)) {}

  ComplexMatrix matrix_;
  Dims dims_;
};

/// Linear map with V^dagger V = identity (rows >= cols).
class Isometry {
 public:
  static Isometry from_matrix(const ComplexMatrix& v);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t domain_dim() const noexcept { return static_cast<std::size_t>(matrix_.cols()); }
  std::size_t target_dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  explicit Isometry(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

struct EigenDecomposition {
  Spectrum spectrum;
  /// Columns are eigenvectors, in the same order as the spectrum.
  ComplexMatrix vectors;
};

inline DensityMatrix validate(const ComplexMatrix& m, const Dims& dims) {
  return DensityMatrix::validate(m, dims);
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b,
                     std::size_t max_dim = kDefaultMaxDim);

/// Reduced state on the kept subsystems, in their original relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

EigenDecomposition eig_hermitian(const ComplexMatrix& m);

/// (.. (x) V (x) ..) rho (.. (x) V^dagger (x) ..) with V on one subsystem.
DensityMatrix embed(const DensityMatrix& rho, const Isometry& v, std::size_t subsystem);

/// Induced-measure random state: partial trace of a Gaussian random pure
/// state on dim x rank. Bit-identical for a fixed seed.
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);
DensityMatrix random_density(const Dims& dims, std::size_t rank, std::uint64_t seed);

// Constructors and helpers shared by the other modules.

DensityMatrix pure_state(const ComplexVector& psi, Dims dims);
DensityMatrix maximally_mixed(Dims dims);

/// Reorders subsystems: new subsystem k is old subsystem order[k].
DensityMatrix permute_subsystems(const DensityMatrix& rho, std::span<const std::size_t> order);

/// Expands an operator acting on one subsystem to the full space:
/// I_left (x) op (x) I_right. op may be rectangular.
ComplexMatrix lift_local(const ComplexMatrix& op, const Dims& dims, std::size_t subsystem);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng);

double max_abs(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& u, double tolerance = tol::kConstruction);

}  // namespace resourceforge
