#include "resourceforge/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "resourceforge/measurements.hpp"
#include "resourceforge/quantumness.hpp"

namespace resourceforge::oracles {

namespace {

constexpr double kReachTolerance = 1e-6;

void check_grid(const DensityMatrix& rho, const GridSpec& grid) {
  if (rho.subsystems() != 2) {
    throw Error(ErrorCode::NotBipartite,
                "expected 2 subsystems, got " + std::to_string(rho.subsystems()));
  }
  if (rho.dims()[0] != 2) {
    throw Error(ErrorCode::NotAQubitOnA, "subsystem A has dimension " + std::to_string(rho.dims()[0]));
  }
  if (grid.theta_points < 2 || grid.phi_points < 2) {
    throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points per angle");
  }
}

template <typename Fixed>
Bits grid_min(const DensityMatrix& rho, const GridSpec& grid, Fixed fixed) {
  check_grid(rho, grid);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.theta_points; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(i) /
                         static_cast<double>(grid.theta_points - 1);
    for (std::size_t j = 0; j < grid.phi_points; ++j) {
      const double phi = 2 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(grid.phi_points);
      const auto m = ProjectiveMeasurement::from_basis(bloch_basis(theta, phi));
      best = std::min(best, fixed(rho, m));
      // Every phi is the same point at the poles.
      if (i == 0 || i + 1 == grid.theta_points) break;
    }
  }
  return best;
}

}  // namespace

ComplexMatrix bloch_basis(double theta, double phi) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const std::complex<double> e = std::polar(1.0, phi);
  ComplexMatrix b(2, 2);
  b << c, -std::conj(e) * s,
       e * s, c;
  return b;
}

Bits grid_min_deficit(const DensityMatrix& rho, const GridSpec& grid) {
  return grid_min(rho, grid, [](const DensityMatrix& r, const ProjectiveMeasurement& m) {
    return deficit_one_way_fixed(r, m);
  });
}

Bits grid_min_discord(const DensityMatrix& rho, const GridSpec& grid) {
  return grid_min(rho, grid, [](const DensityMatrix& r, const ProjectiveMeasurement& m) {
    return discord_fixed(r, m);
  });
}

bool random_bistochastic_reachability(const Spectrum& x, const Spectrum& y, std::size_t samples,
                                      std::uint64_t seed) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "spectra lengths differ");
  if (std::abs(x.sum() - y.sum()) > 1e-9) {
    throw Error(ErrorCode::UnequalSums,
                "sums " + std::to_string(x.sum()) + " and " + std::to_string(y.sum()));
  }
  const std::size_t n = x.size();
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);

  auto hits = [&](std::vector<double> image) {
    std::sort(image.begin(), image.end(), std::greater<>());
    for (std::size_t k = 0; k < n; ++k) {
      if (std::abs(image[k] - y[k]) > kReachTolerance) return false;
    }
    return true;
  };

  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<double> image(n, 0.0);
    if (s == 0) {
      image = x.values();
    } else if (s == 1) {
      std::fill(image.begin(), image.end(), x.sum() / static_cast<double>(n));
    } else {
      const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, n + 1)(rng);
      std::exponential_distribution<double> expo(1.0);
      std::vector<double> weights(terms);
      for (double& w : weights) w = expo(rng);
      const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
      for (std::size_t t = 0; t < terms; ++t) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t k = 0; k < n; ++k) image[perm[k]] += weights[t] / total * x[k];
      }
    }
    if (hits(std::move(image))) return true;
  }
  return false;
}

}  // namespace resourceforge::oracles
