#include "resourceforge/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>

namespace resourceforge {

namespace {

constexpr double kMajorizationSlack = 1e-9;
constexpr double kFreeThreshold = 1e-12;
constexpr double kCommutatorTolerance = 1e-9;

}  // namespace

bool majorizes(const Spectrum& x, const Spectrum& y) {
  if (std::abs(x.sum() - y.sum()) > kMajorizationSlack) {
    throw Error(ErrorCode::UnequalSums,
                "sums " + std::to_string(x.sum()) + " and " + std::to_string(y.sum()));
  }
  const std::size_t n = std::max(x.size(), y.size());
  double px = 0.0;
  double py = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    px += k < x.size() ? x[k] : 0.0;
    py += k < y.size() ? y[k] : 0.0;
    if (px < py - kMajorizationSlack) return false;
  }
  return true;
}

Spectrum pad_with_maximally_mixed(const Spectrum& s, std::size_t k) {
  std::vector<double> values;
  values.reserve(s.size() * k);
  for (double v : s.values()) values.insert(values.end(), k, v / static_cast<double>(k));
  return Spectrum(std::move(values));
}

bool single_shot_noisy_transition(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  std::size_t max_dim) {
  const std::size_t common = rho.dim() * sigma.dim();
  if (common > max_dim) {
    throw Error(ErrorCode::DimensionTooLarge,
                std::to_string(common) + " exceeds cap " + std::to_string(max_dim));
  }
  const Spectrum x = pad_with_maximally_mixed(eig_hermitian(rho.matrix()).spectrum, sigma.dim());
  const Spectrum y = pad_with_maximally_mixed(eig_hermitian(sigma.matrix()).spectrum, rho.dim());
  return majorizes(x, y);
}

RateResult purity_rate(const DensityMatrix& rho) {
  const Bits n = negentropy(rho);
  return {n, n, 1.0};
}

RateResult conversion_rate(Bits er_source, Bits er_target) {
  if (!(er_source >= 0.0) || !(er_target >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "relative entropy distances must be non-negative");
  }
  const bool source_free = er_source <= kFreeThreshold;
  const bool target_free = er_target <= kFreeThreshold;
  if (source_free && target_free) {
    throw Error(ErrorCode::BothZero, "conversion between free states is undefined");
  }
  if (target_free) return {kInfiniteBits, er_source, er_target};
  if (source_free) return {0.0, er_source, er_target};
  return {er_source / er_target, er_source, er_target};
}

RateResult thermo_rate(const DensityMatrix& rho, const DensityMatrix& target, const Hamiltonian& h) {
  for (const DensityMatrix* state : {&rho, &target}) {
    if (state->dim() != h.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "state and Hamiltonian dimensions differ");
    }
    const ComplexMatrix& s = state->matrix();
    const double comm = max_abs(s * h.matrix() - h.matrix() * s);
    if (comm > kCommutatorTolerance) {
      throw Error(ErrorCode::NonCommuting, "max |[rho, H]| = " + std::to_string(comm));
    }
  }
  return conversion_rate(free_energy_gap(rho, h), free_energy_gap(target, h));
}

}  // namespace resourceforge
