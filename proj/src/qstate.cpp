#include "resourceforge/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace resourceforge {

std::size_t dims_product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& u, double tolerance) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())) <= tolerance;
}

DensityMatrix DensityMatrix::validate(const ComplexMatrix& m, Dims dims) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be square and non-empty");
  }
  if (!m.allFinite()) throw Error(ErrorCode::NonFinite, "matrix has NaN or Inf entries");
  if (dims.empty() || std::find(dims.begin(), dims.end(), 0u) != dims.end() ||
      dims_product(dims) != static_cast<std::size_t>(m.rows())) {
    throw Error(ErrorCode::DimensionMismatch,
                "subsystem dims do not multiply to " + std::to_string(m.rows()));
  }
  const double asym = max_abs(m - m.adjoint());
  if (asym > tol::kConstruction) {
    throw Error(ErrorCode::NotHermitian, "max |M - M^dagger| = " + std::to_string(asym));
  }
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > tol::kConstruction) {
    throw Error(ErrorCode::NotUnitTrace, "trace = " + std::to_string(trace));
  }
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol::kConstruction) {
    throw Error(ErrorCode::NotPSD, "minimum eigenvalue = " + std::to_string(min_eig));
  }
  return DensityMatrix(herm, std::move(dims));
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m, Dims dims) {
  ComplexMatrix herm = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(herm), std::move(dims));
}

Isometry Isometry::from_matrix(const ComplexMatrix& v) {
  if (v.rows() < v.cols() || v.cols() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "isometry needs rows >= cols > 0");
  }
  if (!v.allFinite()) throw Error(ErrorCode::NonFinite, "isometry has NaN or Inf entries");
  const double err = max_abs(v.adjoint() * v - ComplexMatrix::Identity(v.cols(), v.cols()));
  if (err > tol::kConstruction) {
    throw Error(ErrorCode::NotUnitary, "V^dagger V deviates from identity by " + std::to_string(err));
  }
  return Isometry(v);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b, std::size_t max_dim) {
  const std::size_t d = a.dim() * b.dim();
  if (d > max_dim) {
    throw Error(ErrorCode::DimensionTooLarge,
                std::to_string(d) + " exceeds cap " + std::to_string(max_dim));
  }
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix::trusted(kron(a.matrix(), b.matrix()), std::move(dims));
}

namespace {

// Row-major strides of a subsystem layout.
std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size());
  std::size_t s = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    strides[k] = s;
    s *= dims[k];
  }
  return strides;
}

// perm[old_index] = new_index when subsystems are reordered so that new
// subsystem k is old subsystem order[k].
std::vector<std::size_t> index_permutation(const Dims& dims, std::span<const std::size_t> order) {
  const std::size_t n = dims_product(dims);
  Dims new_dims(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_dims[k] = dims[order[k]];
  const auto old_strides = strides_of(dims);
  const auto new_strides = strides_of(new_dims);
  std::vector<std::size_t> perm(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t mapped = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t digit = (idx / old_strides[order[k]]) % dims[order[k]];
      mapped += digit * new_strides[k];
    }
    perm[idx] = mapped;
  }
  return perm;
}

void check_order(const Dims& dims, std::span<const std::size_t> order) {
  if (order.size() != dims.size()) {
    throw Error(ErrorCode::DimensionMismatch, "permutation length differs from subsystem count");
  }
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t k : order) {
    if (k >= dims.size() || seen[k]) {
      throw Error(ErrorCode::IndexOutOfRange, "not a permutation of subsystem indices");
    }
    seen[k] = true;
  }
}

}  // namespace

DensityMatrix permute_subsystems(const DensityMatrix& rho, std::span<const std::size_t> order) {
  check_order(rho.dims(), order);
  const auto perm = index_permutation(rho.dims(), order);
  const std::size_t n = rho.dim();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(perm[i], perm[j]) = rho.matrix()(i, j);
  }
  Dims dims(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) dims[k] = rho.dims()[order[k]];
  return DensityMatrix::trusted(std::move(out), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptyKeepSet, "at least one subsystem must be kept");
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.back() >= rho.subsystems()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "subsystem " + std::to_string(kept.back()) + " of " + std::to_string(rho.subsystems()));
  }
  std::vector<std::size_t> order = kept;
  for (std::size_t k = 0; k < rho.subsystems(); ++k) {
    if (!std::binary_search(kept.begin(), kept.end(), k)) order.push_back(k);
  }
  Dims kept_dims;
  for (std::size_t k : kept) kept_dims.push_back(rho.dims()[k]);
  const std::size_t dk = dims_product(kept_dims);
  const std::size_t dt = rho.dim() / dk;

  const DensityMatrix arranged = permute_subsystems(rho, order);
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = 0; j < dk; ++j) {
      std::complex<double> acc = 0.0;
      for (std::size_t t = 0; t < dt; ++t) acc += arranged.matrix()(i * dt + t, j * dt + t);
      out(i, j) = acc;
    }
  }
  return DensityMatrix::trusted(std::move(out), std::move(kept_dims));
}

EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
  const double asym = max_abs(m - m.adjoint());
  if (asym > tol::kConstruction) {
    throw Error(ErrorCode::NotHermitian, "max |M - M^dagger| = " + std::to_string(asym));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()));
  const auto n = m.rows();
  std::vector<double> values(n);
  ComplexMatrix vectors(n, n);
  // Eigen returns ascending order.
  for (Eigen::Index k = 0; k < n; ++k) {
    values[k] = solver.eigenvalues()(n - 1 - k);
    vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return {Spectrum(std::move(values)), std::move(vectors)};
}

ComplexMatrix lift_local(const ComplexMatrix& op, const Dims& dims, std::size_t subsystem) {
  if (subsystem >= dims.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "subsystem " + std::to_string(subsystem));
  }
  if (static_cast<std::size_t>(op.cols()) != dims[subsystem]) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator acts on dimension " + std::to_string(op.cols()) + ", subsystem has " +
                    std::to_string(dims[subsystem]));
  }
  const auto left = static_cast<Eigen::Index>(dims_product(std::span(dims).first(subsystem)));
  const auto right = static_cast<Eigen::Index>(dims_product(std::span(dims).subspan(subsystem + 1)));
  return kron(kron(ComplexMatrix::Identity(left, left), op), ComplexMatrix::Identity(right, right));
}

DensityMatrix embed(const DensityMatrix& rho, const Isometry& v, std::size_t subsystem) {
  const ComplexMatrix w = lift_local(v.matrix(), rho.dims(), subsystem);
  Dims dims = rho.dims();
  dims[subsystem] = v.target_dim();
  return DensityMatrix::trusted(w * rho.matrix() * w.adjoint(), std::move(dims));
}

namespace {

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = {re, im};
    }
  }
  return g;
}

}  // namespace

DensityMatrix random_density(const Dims& dims, std::size_t rank, std::uint64_t seed) {
  const std::size_t dim = dims_product(dims);
  if (rank < 1 || rank > dim) {
    throw Error(ErrorCode::RankOutOfRange,
                "rank " + std::to_string(rank) + " not in [1, " + std::to_string(dim) + "]");
  }
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = ginibre(dim, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::trusted(std::move(m), dims);
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  return random_density(Dims{dim}, rank, seed);
}

ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng) {
  const ComplexMatrix z = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix& r = qr.matrixQR();
  for (std::size_t k = 0; k < d; ++k) {
    const std::complex<double> diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

DensityMatrix pure_state(const ComplexVector& psi, Dims dims) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw Error(ErrorCode::InvalidArgument, "state vector has zero norm");
  const ComplexVector unit = psi / norm;
  return DensityMatrix::validate(unit * unit.adjoint(), std::move(dims));
}

DensityMatrix maximally_mixed(Dims dims) {
  const auto d = static_cast<Eigen::Index>(dims_product(dims));
  return DensityMatrix::validate(ComplexMatrix::Identity(d, d) / static_cast<double>(d),
                                 std::move(dims));
}

}  // namespace resourceforge
