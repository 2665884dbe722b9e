#pragma once

// States and scalar reference formulas shared by the test suites. Nothing
// here calls into the code paths under test beyond state construction.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "resourceforge/qstate.hpp"

namespace rf_test {

using namespace resourceforge;
using cd = std::complex<double>;

inline double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

inline double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0) h -= v * std::log2(v);
  }
  return h;
}

inline ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix m = ComplexMatrix::Zero(values.size(), values.size());
  Eigen::Index k = 0;
  for (double v : values) {
    m(k, k) = v;
    ++k;
  }
  return m;
}

inline DensityMatrix diag_state(std::initializer_list<double> values) {
  return DensityMatrix::validate(diag(values), Dims{values.size()});
}

inline DensityMatrix ket_state(std::size_t index, Dims dims) {
  ComplexVector v = ComplexVector::Zero(dims_product(dims));
  v(index) = 1.0;
  return pure_state(v, std::move(dims));
}

/// (|00> + |11>)/sqrt(2)
inline DensityMatrix bell() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return pure_state(v, {2, 2});
}

/// (|00><00| + |11><11|)/2
inline DensityMatrix classically_correlated() {
  return DensityMatrix::validate(diag({0.5, 0, 0, 0.5}), {2, 2});
}

/// sqrt(p)|00> + sqrt(1-p)|11>
inline DensityMatrix schmidt_state(double p) {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = std::sqrt(p);
  v(3) = std::sqrt(1 - p);
  return pure_state(v, {2, 2});
}

/// p |singlet><singlet| + (1 - p) I/4
inline DensityMatrix werner(double p) {
  ComplexVector s = ComplexVector::Zero(4);
  s(1) = 1.0 / std::sqrt(2.0);
  s(2) = -1.0 / std::sqrt(2.0);
  ComplexMatrix m = p * s * s.adjoint() + (1 - p) * ComplexMatrix::Identity(4, 4) / 4.0;
  return DensityMatrix::validate(m, {2, 2});
}

inline std::vector<double> random_probabilities(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(n);
  double total = 0;
  for (double& v : p) total += (v = expo(rng) + 0.05);
  for (double& v : p) v /= total;
  return p;
}

/// sum_i p_i |psi_i><psi_i| (x) rho_i with a random orthonormal basis psi on A
/// and random full-rank conditional states on B.
inline DensityMatrix random_cq_state(std::size_t da, std::size_t db, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ComplexMatrix basis = random_unitary(da, rng);
  const auto p = random_probabilities(da, rng);
  ComplexMatrix m = ComplexMatrix::Zero(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i) {
    const ComplexMatrix proj = basis.col(i) * basis.col(i).adjoint();
    const DensityMatrix cond = random_density(db, db, seed * 7919 + i + 1);
    m += p[i] * kron(proj, cond.matrix());
  }
  return DensityMatrix::validate(m, {da, db});
}

/// sum_ij p_ij |psi_i><psi_i| (x) |phi_j><phi_j| in random local bases.
inline DensityMatrix random_cc_state(std::size_t da, std::size_t db, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ComplexMatrix ba = random_unitary(da, rng);
  const ComplexMatrix bb = random_unitary(db, rng);
  const auto p = random_probabilities(da * db, rng);
  ComplexMatrix m = ComplexMatrix::Zero(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      m += p[i * db + j] * kron(ba.col(i) * ba.col(i).adjoint(), bb.col(j) * bb.col(j).adjoint());
    }
  }
  return DensityMatrix::validate(m, {da, db});
}

inline DensityMatrix random_two_qubit(std::uint64_t seed) { return random_density({2, 2}, 4, seed); }

inline DensityMatrix conjugate_local(const DensityMatrix& rho, const ComplexMatrix& ua,
                                     const ComplexMatrix& ub) {
  const ComplexMatrix u = kron(ua, ub);
  return DensityMatrix::validate(u * rho.matrix() * u.adjoint(), rho.dims());
}

}  // namespace rf_test
