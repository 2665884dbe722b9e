#include "resourceforge/quantumness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace resourceforge {

namespace {

void require_bipartite(const DensityMatrix& rho) {
  if (rho.subsystems() != 2) {
    throw Error(ErrorCode::NotBipartite,
                "expected 2 subsystems, got " + std::to_string(rho.subsystems()));
  }
}

// theta in [0, pi/2], phi in [0, 2pi) for every Givens pair.
void append_givens_box(std::vector<Coordinate>& box, std::size_t d) {
  for (std::size_t k = 0; k < d * (d - 1) / 2; ++k) {
    box.push_back({0.0, std::numbers::pi / 2, false});
    box.push_back({0.0, 2 * std::numbers::pi, true});
  }
}

void append_su_box(std::vector<Coordinate>& box, std::size_t d) {
  append_givens_box(box, d);
  for (std::size_t k = 0; k + 1 < d; ++k) box.push_back({0.0, 2 * std::numbers::pi, true});
}

std::vector<double> givens_part(const ComplexMatrix& u) {
  auto angles = params_from_unitary(u).angles;
  angles.resize(givens_param_count(static_cast<std::size_t>(u.rows())));
  return angles;
}

using OneSided = std::function<Bits(const ProjectiveMeasurement&)>;
using TwoSided = std::function<Bits(const ProjectiveMeasurement&, const ProjectiveMeasurement&)>;

QuantumnessResult one_sided_search(const DensityMatrix& rho, const OptimizerConfig& cfg, const OneSided& fixed) {
  const std::size_t da = rho.dims()[0];
  std::vector<Coordinate> box;
  append_givens_box(box, da);
  const Objective objective = [&](std::span<const double> x) {
    return fixed(measurement_from_givens(x, da));
  };
  // The eigenbasis of rho_A is optimal for classical-quantum states.
  const std::vector<std::vector<double>> warm{
      givens_part(eig_hermitian(partial_trace(rho, {0}).matrix()).vectors)};
  MultiStartResult search = multistart_minimize(objective, box, cfg, warm);
  QuantumnessResult out;
  out.value = search.value;
  out.measurements.push_back(measurement_from_givens(search.argmin, da));
  out.trace = std::move(search.trace);
  return out;
}

QuantumnessResult two_sided_search(const DensityMatrix& rho, const OptimizerConfig& cfg, const TwoSided& fixed) {
  const std::size_t da = rho.dims()[0];
  const std::size_t db = rho.dims()[1];
  const std::size_t na = givens_param_count(da);
  std::vector<Coordinate> box;
  append_givens_box(box, da);
  append_givens_box(box, db);
  const Objective objective = [&](std::span<const double> x) {
    return fixed(measurement_from_givens(x.first(na), da), measurement_from_givens(x.subspan(na), db));
  };
  // Local eigenbases are a natural candidate (optimal for c-c and product states).
  const std::vector<std::vector<double>> warm{[&] {
    std::vector<double> x = givens_part(eig_hermitian(partial_trace(rho, {0}).matrix()).vectors);
    const auto xb = givens_part(eig_hermitian(partial_trace(rho, {1}).matrix()).vectors);
    x.insert(x.end(), xb.begin(), xb.end());
    return x;
  }()};
  MultiStartResult search = multistart_minimize(objective, box, cfg, warm);
  QuantumnessResult out;
  out.value = search.value;
  const std::span<const double> best(search.argmin);
  out.measurements.push_back(measurement_from_givens(best.first(na), da));
  out.measurements.push_back(measurement_from_givens(best.subspan(na), db));
  out.trace = std::move(search.trace);
  return out;
}

Bits relent_cq_fixed(const DensityMatrix& rho, const ProjectiveMeasurement& m) {
  return relative_entropy(rho, measure_local(rho, m, 0));
}

Bits relent_cc_fixed(const DensityMatrix& rho, const ProjectiveMeasurement& ma,
                     const ProjectiveMeasurement& mb) {
  return relative_entropy(rho, measure_both(rho, ma, mb));
}

Bits shannon(const Eigen::VectorXd& p) {
  Bits h = 0.0;
  for (double v : p) {
    if (v > tol::kClamp) h -= v * std::log2(v);
  }
  return std::max(h, 0.0);
}

// Measuring A in `basis` leaves a state that is block diagonal in that basis,
// so its entropy is the sum over the (unnormalised) diagonal blocks.
struct MeasuredA {
  Bits joint;
  Bits a;
};

MeasuredA measured_on_a(const DensityMatrix& rho, const ComplexMatrix& basis) {
  const std::size_t db = rho.dims()[1];
  const auto n = static_cast<Eigen::Index>(db);
  const ComplexMatrix w = kron(basis, ComplexMatrix::Identity(n, n));
  const ComplexMatrix r = w.adjoint() * rho.matrix() * w;
  Eigen::VectorXd p(basis.cols());
  Bits joint = 0.0;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) {
    const ComplexMatrix block = r.block(i * n, i * n, n, n);
    p(i) = block.trace().real();
    joint += entropy_of_spectrum(eig_hermitian(block).spectrum);
  }
  return {joint, shannon(p)};
}

// Joint outcome distribution of measuring both sides.
Eigen::VectorXd outcome_distribution(const DensityMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix w = kron(a, b);
  const ComplexMatrix rw = rho.matrix() * w;
  return w.conjugate().cwiseProduct(rw).colwise().sum().real().transpose();
}

struct Marginals {
  Bits joint;
  Bits a;
  Bits b;
};

Marginals outcome_entropies(const Eigen::VectorXd& p, std::size_t da, std::size_t db) {
  const Eigen::Map<const Eigen::MatrixXd> table(p.data(), static_cast<Eigen::Index>(db),
                                                static_cast<Eigen::Index>(da));
  return {shannon(p), shannon(table.colwise().sum().transpose()), shannon(table.rowwise().sum())};
}

}  // namespace

ProjectiveMeasurement measurement_from_givens(std::span<const double> angles, std::size_t d) {
  if (angles.size() != givens_param_count(d)) {
    throw Error(ErrorCode::ParamCountMismatch, "expected " + std::to_string(givens_param_count(d)) +
                                                   " Givens angles, got " + std::to_string(angles.size()));
  }
  std::vector<double> full(angles.begin(), angles.end());
  full.resize(su_param_count(d), 0.0);
  return ProjectiveMeasurement::from_basis(unitary_from_params(full, d));
}

Bits deficit_one_way_fixed(const DensityMatrix& rho, const ProjectiveMeasurement& m) {
  require_bipartite(rho);
  return vn_entropy(measure_local(rho, m, 0)) - vn_entropy(rho);
}

Bits discord_fixed(const DensityMatrix& rho, const ProjectiveMeasurement& m) {
  require_bipartite(rho);
  return mutual_information(rho) - mutual_information(measure_local(rho, m, 0));
}

Bits deficit_zero_way_fixed(const DensityMatrix& rho, const ProjectiveMeasurement& ma,
                            const ProjectiveMeasurement& mb) {
  return vn_entropy(measure_both(rho, ma, mb)) - vn_entropy(rho);
}

Bits discord_zero_way_fixed(const DensityMatrix& rho, const ProjectiveMeasurement& ma,
                            const ProjectiveMeasurement& mb) {
  return mutual_information(rho) - mutual_information(measure_both(rho, ma, mb));
}

QuantumnessResult deficit_one_way(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  require_bipartite(rho);
  const Bits s_rho = vn_entropy(rho);
  return one_sided_search(rho, cfg, [&](const ProjectiveMeasurement& m) {
    return measured_on_a(rho, m.basis()).joint - s_rho;
  });
}

QuantumnessResult discord(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  require_bipartite(rho);
  // I(rho') = S(rho'_A) + S(rho_B) - S(rho'); rho_B is untouched.
  const Bits base = mutual_information(rho) - vn_entropy(partial_trace(rho, {1}));
  return one_sided_search(rho, cfg, [&](const ProjectiveMeasurement& m) {
    const MeasuredA out = measured_on_a(rho, m.basis());
    return base - out.a + out.joint;
  });
}

QuantumnessResult relent_to_cq(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  require_bipartite(rho);
  return one_sided_search(rho, cfg, [&](const ProjectiveMeasurement& m) { return relent_cq_fixed(rho, m); });
}

QuantumnessResult deficit_zero_way(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  require_bipartite(rho);
  const Bits s_rho = vn_entropy(rho);
  return two_sided_search(rho, cfg, [&](const ProjectiveMeasurement& ma, const ProjectiveMeasurement& mb) {
    return shannon(outcome_distribution(rho, ma.basis(), mb.basis())) - s_rho;
  });
}

QuantumnessResult discord_zero_way(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  require_bipartite(rho);
  const Bits i_rho = mutual_information(rho);
  return two_sided_search(rho, cfg, [&](const ProjectiveMeasurement& ma, const ProjectiveMeasurement& mb) {
    const Marginals h = outcome_entropies(outcome_distribution(rho, ma.basis(), mb.basis()), ma.dimension(),
                                          mb.dimension());
    return i_rho - (h.a + h.b - h.joint);
  });
}

QuantumnessResult relent_to_cc(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  require_bipartite(rho);
  return two_sided_search(rho, cfg, [&](const ProjectiveMeasurement& ma, const ProjectiveMeasurement& mb) {
    return relent_cc_fixed(rho, ma, mb);
  });
}

QuantumnessResult generalized_deficit(const DensityMatrix& rho, std::size_t extra_dim,
                                      const OptimizerConfig& cfg, std::size_t max_dim) {
  require_bipartite(rho);
  const std::size_t da = rho.dims()[0];
  const std::size_t dext = da + extra_dim;
  if (dext * rho.dims()[1] > max_dim) {
    throw Error(ErrorCode::DimensionTooLarge,
                std::to_string(dext * rho.dims()[1]) + " exceeds cap " + std::to_string(max_dim));
  }
  const std::size_t niso = su_param_count(dext);
  std::vector<Coordinate> box;
  append_su_box(box, dext);
  append_givens_box(box, dext);

  auto isometry_of = [&](std::span<const double> x) {
    return Isometry::from_matrix(unitary_from_params(x, dext).leftCols(da));
  };
  // Isometries preserve the spectrum, so S(embedded) = S(rho).
  const Bits s_rho = vn_entropy(rho);
  const Objective objective = [&](std::span<const double> x) {
    const DensityMatrix embedded = embed(rho, isometry_of(x.first(niso)), 0);
    return measured_on_a(embedded, measurement_from_givens(x.subspan(niso), dext).basis()).joint - s_rho;
  };

  const QuantumnessResult plain = deficit_one_way(rho, cfg);
  ComplexMatrix extended = ComplexMatrix::Identity(dext, dext);
  extended.topLeftCorner(da, da) = plain.measurements.front().basis();
  std::vector<double> warm(niso, 0.0);
  const auto meas = givens_part(extended);
  warm.insert(warm.end(), meas.begin(), meas.end());

  MultiStartResult search = multistart_minimize(objective, box, cfg, std::vector<std::vector<double>>{warm});
  QuantumnessResult out;
  out.value = search.value;
  const std::span<const double> best(search.argmin);
  out.isometry = isometry_of(best.first(niso));
  out.measurements.push_back(measurement_from_givens(best.subspan(niso), dext));
  out.trace = std::move(search.trace);
  return out;
}

QuantumnessResult multicopy_deficit(const DensityMatrix& rho, std::size_t copies,
                                    const OptimizerConfig& cfg, std::size_t max_dim) {
  require_bipartite(rho);
  if (copies < 1 || copies > 2) {
    throw Error(ErrorCode::InvalidArgument, "copies must be 1 or 2, got " + std::to_string(copies));
  }
  const QuantumnessResult single = deficit_one_way(rho, cfg);
  if (copies == 1) return single;

  const DensityMatrix two = tensor(rho, rho, max_dim);
  const std::size_t order[] = {0, 2, 1, 3};
  const DensityMatrix grouped_layout = permute_subsystems(two, order);
  const std::size_t da2 = rho.dims()[0] * rho.dims()[0];
  const std::size_t db2 = rho.dims()[1] * rho.dims()[1];
  const DensityMatrix grouped = DensityMatrix::trusted(grouped_layout.matrix(), Dims{da2, db2});

  std::vector<Coordinate> box;
  append_givens_box(box, da2);
  const Objective objective = [&](std::span<const double> x) {
    return deficit_one_way_fixed(grouped, measurement_from_givens(x, da2));
  };
  const ComplexMatrix& b = single.measurements.front().basis();
  const std::vector<std::vector<double>> warm{givens_part(kron(b, b))};
  MultiStartResult search = multistart_minimize(objective, box, cfg, warm);

  QuantumnessResult out;
  out.value = search.value / static_cast<double>(copies);
  out.measurements.push_back(measurement_from_givens(search.argmin, da2));
  for (auto [index, value] : search.trace) out.trace.emplace_back(index, value / copies);
  return out;
}

}  // namespace resourceforge
