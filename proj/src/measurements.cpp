#include "resourceforge/measurements.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace resourceforge {

namespace {

using cd = std::complex<double>;

// Zeroes every element whose row and column differ in the digit of
// `subsystem`, i.e. applies sum_i |i><i| . |i><i| in the current basis.
void dephase_digit(ComplexMatrix& m, const Dims& dims, std::size_t subsystem) {
  std::size_t stride = 1;
  for (std::size_t k = subsystem + 1; k < dims.size(); ++k) stride *= dims[k];
  const std::size_t d = dims[subsystem];
  const auto n = static_cast<std::size_t>(m.rows());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t di = (i / stride) % d;
    for (std::size_t j = 0; j < n; ++j) {
      if ((j / stride) % d != di) m(i, j) = 0.0;
    }
  }
}

void check_side(const DensityMatrix& rho, const ProjectiveMeasurement& m, std::size_t side) {
  if (side >= rho.subsystems()) {
    throw Error(ErrorCode::IndexOutOfRange, "subsystem " + std::to_string(side));
  }
  if (m.dimension() != rho.dims()[side]) {
    throw Error(ErrorCode::DimensionMismatch,
                "measurement dimension " + std::to_string(m.dimension()) + ", subsystem dimension " +
                    std::to_string(rho.dims()[side]));
  }
}

// Left-multiplies rows (i, j) of m by the Givens block G(theta, phi).
void apply_givens_rows(ComplexMatrix& m, std::size_t i, std::size_t j, double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const cd e = std::polar(1.0, phi);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    const cd a = m(i, col);
    const cd b = m(j, col);
    m(i, col) = c * a - std::conj(e) * s * b;
    m(j, col) = e * s * a + c * b;
  }
}

}  // namespace

ProjectiveMeasurement ProjectiveMeasurement::from_basis(const ComplexMatrix& basis) {
  if (basis.rows() != basis.cols() || basis.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "measurement basis must be square");
  }
  if (!basis.allFinite()) throw Error(ErrorCode::NonFinite, "basis has NaN or Inf entries");
  if (!is_unitary(basis)) throw Error(ErrorCode::NotUnitary, "basis columns are not orthonormal");
  return ProjectiveMeasurement(basis);
}

ProjectiveMeasurement ProjectiveMeasurement::computational(std::size_t dimension) {
  const auto d = static_cast<Eigen::Index>(dimension);
  return ProjectiveMeasurement(ComplexMatrix::Identity(d, d));
}

ComplexMatrix ProjectiveMeasurement::projector(std::size_t i) const {
  return basis_.col(static_cast<Eigen::Index>(i)) * basis_.col(static_cast<Eigen::Index>(i)).adjoint();
}

std::size_t su_param_count(std::size_t d) { return d * d - 1; }
std::size_t givens_param_count(std::size_t d) { return d * (d - 1); }

ComplexMatrix unitary_from_params(std::span<const double> angles, std::size_t d) {
  if (angles.size() != su_param_count(d)) {
    throw Error(ErrorCode::ParamCountMismatch, "expected " + std::to_string(su_param_count(d)) +
                                                   " angles for d = " + std::to_string(d) + ", got " +
                                                   std::to_string(angles.size()));
  }
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  double phase_sum = 0.0;
  const std::size_t g = givens_param_count(d);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    u(k, k) = std::polar(1.0, angles[g + k]);
    phase_sum += angles[g + k];
  }
  u(n - 1, n - 1) = std::polar(1.0, -phase_sum);

  // U = G_1 G_2 ... G_K D: apply the rotations to D from the last one back.
  std::size_t pair = g / 2;
  for (std::size_t i = d - 1; i-- > 0;) {
    for (std::size_t j = d; j-- > i + 1;) {
      --pair;
      apply_givens_rows(u, i, j, angles[2 * pair], angles[2 * pair + 1]);
    }
  }
  return u;
}

MeasurementParams params_from_unitary(const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "unitary must be square");
  }
  if (!is_unitary(u, 1e-8)) throw Error(ErrorCode::NotUnitary, "matrix is not unitary");
  const auto d = static_cast<std::size_t>(u.rows());
  MeasurementParams p;
  p.angles.reserve(su_param_count(d));
  ComplexMatrix a = u;
  // Column-by-column elimination with G^dagger; the angles come out in the
  // same pair order that unitary_from_params consumes them.
  for (std::size_t i = 0; i + 1 < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const cd top = a(i, i);
      const cd bottom = a(j, i);
      const double theta = std::atan2(std::abs(bottom), std::abs(top));
      const double phi = std::abs(bottom) > 0.0 ? std::arg(bottom) - std::arg(top) : 0.0;
      apply_givens_rows(a, i, j, -theta, phi);
      p.angles.push_back(theta);
      p.angles.push_back(phi);
    }
  }
  double total = 0.0;
  for (std::size_t k = 0; k < d; ++k) total += std::arg(a(k, k));
  const double global = total / static_cast<double>(d);
  for (std::size_t k = 0; k + 1 < d; ++k) p.angles.push_back(std::arg(a(k, k)) - global);
  return p;
}

ProjectiveMeasurement measurement_from_params(const MeasurementParams& p, std::size_t d) {
  return ProjectiveMeasurement::from_basis(unitary_from_params(p.angles, d));
}

DensityMatrix measure_local(const DensityMatrix& rho, const ProjectiveMeasurement& m,
                            std::size_t side) {
  check_side(rho, m, side);
  const ComplexMatrix w = lift_local(m.basis(), rho.dims(), side);
  ComplexMatrix rotated = w.adjoint() * rho.matrix() * w;
  dephase_digit(rotated, rho.dims(), side);
  return DensityMatrix::trusted(w * rotated * w.adjoint(), rho.dims());
}

DensityMatrix measure_both(const DensityMatrix& rho, const ProjectiveMeasurement& ma,
                           const ProjectiveMeasurement& mb) {
  if (rho.subsystems() != 2) {
    throw Error(ErrorCode::NotBipartite,
                "expected 2 subsystems, got " + std::to_string(rho.subsystems()));
  }
  check_side(rho, ma, 0);
  check_side(rho, mb, 1);
  const ComplexMatrix w = kron(ma.basis(), mb.basis());
  ComplexMatrix rotated = w.adjoint() * rho.matrix() * w;
  // Both digits dephased: only the diagonal survives.
  rotated = ComplexMatrix(rotated.diagonal().asDiagonal());
  return DensityMatrix::trusted(w * rotated * w.adjoint(), rho.dims());
}

DensityMatrix dephasing_channel(const DensityMatrix& rho, std::size_t qubit) {
  if (qubit >= rho.subsystems()) {
    throw Error(ErrorCode::IndexOutOfRange, "subsystem " + std::to_string(qubit));
  }
  if (rho.dims()[qubit] != 2) {
    throw Error(ErrorCode::NotAQubit, "subsystem " + std::to_string(qubit) + " has dimension " +
                                          std::to_string(rho.dims()[qubit]));
  }
  ComplexMatrix m = rho.matrix();
  dephase_digit(m, rho.dims(), qubit);
  return DensityMatrix::trusted(std::move(m), rho.dims());
}

}  // namespace resourceforge
