#pragma once

// Complete rank-one projective measurements stored as basis unitaries
// (P_i = |b_i><b_i| for the columns b_i), and the local dephasing maps they
// induce.

#include <span>
#include <vector>

#include "resourceforge/qstate.hpp"

namespace resourceforge {

class ProjectiveMeasurement {
 public:
  /// Throws NotUnitary unless the columns are orthonormal to 1e-10.
  static ProjectiveMeasurement from_basis(const ComplexMatrix& basis);
  static ProjectiveMeasurement computational(std::size_t dimension);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(basis_.rows()); }
  const ComplexMatrix& basis() const noexcept { return basis_; }
  ComplexMatrix projector(std::size_t i) const;

 private:
  explicit ProjectiveMeasurement(ComplexMatrix basis) : basis_(std::move(basis)) {}
  ComplexMatrix basis_;
};

/// Coordinates of SU(d): d(d-1)/2 complex Givens rotations (theta, phi) for
/// the pairs (0,1), (0,2), ..., (0,d-1), (1,2), ..., (d-2,d-1), followed by
/// d-1 diagonal phases. Total d*d - 1 angles.
///
///   U = G(0,1) G(0,2) ... G(d-2,d-1) diag(e^{i a_1}, ..., e^{i a_{d-1}}, e^{-i sum a})
///
/// G(i,j) is the identity except for the 2x2 block
///   [ cos t             -e^{-i phi} sin t ]
///   [ e^{i phi} sin t    cos t            ].
/// theta is 2pi periodic and phi, a_k are 2pi periodic; the diagonal phases
/// never change the projectors.
struct MeasurementParams {
  std::vector<double> angles;
};

std::size_t su_param_count(std::size_t d);
std::size_t givens_param_count(std::size_t d);

ComplexMatrix unitary_from_params(std::span<const double> angles, std::size_t d);

/// Inverse chart: angles whose unitary matches u up to a global phase.
MeasurementParams params_from_unitary(const ComplexMatrix& u);

ProjectiveMeasurement measurement_from_params(const MeasurementParams& p, std::size_t d);

/// sum_i (P_i on `side`) rho (P_i on `side`).
DensityMatrix measure_local(const DensityMatrix& rho, const ProjectiveMeasurement& m,
                            std::size_t side);

/// Dephasing of both halves of a bipartite state.
DensityMatrix measure_both(const DensityMatrix& rho, const ProjectiveMeasurement& ma,
                           const ProjectiveMeasurement& mb);

/// Computational-basis dephasing of a qubit subsystem.
DensityMatrix dephasing_channel(const DensityMatrix& rho, std::size_t qubit);

}  // namespace resourceforge
