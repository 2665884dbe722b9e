// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "resourceforge/entropy.hpp"
#include "resourceforge/measurements.hpp"
#include "resourceforge/monotones.hpp"
#include "resourceforge/oracles.hpp"
#include "resourceforge/protocol.hpp"
#include "resourceforge/quantumness.hpp"

using namespace rf_test;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome closed_form_identity() {
  double worst = 0;
  for (std::size_t d : {2u, 3u, 4u, 8u}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto rho = random_density(d, 1 + seed % d, seed);
      worst = std::max(worst, std::abs(relative_entropy(rho, maximally_mixed({d})) - negentropy(rho)));
    }
  }
  return {worst <= 1e-9, fmt("max |S(rho||I/d) - (log d - S)| = %.3g over 400 states", worst)};
}

Outcome bell_landmarks() {
  const auto rho = bell();
  const double values[] = {deficit_one_way(rho).value, discord(rho).value, deficit_zero_way(rho).value,
                           relent_to_cq(rho).value};
  double worst = 0;
  for (double v : values) worst = std::max(worst, std::abs(v - 1.0));
  const double mi = mutual_information(rho);
  const bool pass = worst <= 1e-3 && std::abs(mi - 2.0) <= 1e-9;
  return {pass, fmt("deficit %.9f, discord %.9f, deficit0 %.9f", values[0], values[1], values[2]) +
                    fmt(", relent-cq %.9f, I = %.12f", values[3], mi)};
}

Outcome free_set_vanishing() {
  double worst_cq = 0;
  double worst_cc = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto cq = random_cq_state(2 + seed % 2, 2 + (seed / 2) % 2, 1000 + seed);
    worst_cq = std::max({worst_cq, deficit_one_way(cq).value, relent_to_cq(cq).value});
    const auto cc = random_cc_state(2 + seed % 2, 2 + (seed / 2) % 2, 2000 + seed);
    worst_cc = std::max({worst_cc, deficit_zero_way(cc).value, discord_zero_way(cc).value, relent_to_cc(cc).value});
  }
  return {worst_cq <= 1e-6 && worst_cc <= 1e-6,
          fmt("max one-way on c-q %.3g, max zero-way on c-c %.3g", worst_cq, worst_cc)};
}

Outcome decomposition_identity() {
  std::mt19937_64 rng(4);
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Dims dims{2 + seed % 3, 2 + (seed / 3) % 3};
    const auto rho = random_density(dims, 1 + seed % (dims[0] * dims[1]), seed);
    const auto m = ProjectiveMeasurement::from_basis(random_unitary(dims[0], rng));
    const double production =
        vn_entropy(partial_trace(measure_local(rho, m, 0), {0})) - vn_entropy(partial_trace(rho, {0}));
    worst = std::max(worst, std::abs(discord_fixed(rho, m) - deficit_one_way_fixed(rho, m) + production));
  }
  return {worst <= 1e-10, fmt("max residual %.3g over 200 pairs", worst)};
}

Outcome ordering_chain() {
  double worst_order = -1;
  double worst_cross = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto rho = random_two_qubit(5000 + seed);
    const double disc = discord(rho).value;
    const double one = deficit_one_way(rho).value;
    const double zero = deficit_zero_way(rho).value;
    worst_order = std::max({worst_order, disc - one, one - zero});
    worst_cross = std::max(worst_cross, std::abs(relent_to_cq(rho).value - one));
  }
  return {worst_order <= 1e-3 && worst_cross <= 1e-6,
          fmt("max violation %.3g, max |relent-cq - deficit| %.3g", worst_order, worst_cross)};
}

Outcome optimizer_vs_oracle() {
  double worst_upper = -1;
  double worst_lower = -1;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto rho = random_two_qubit(7000 + seed);
    const double v = deficit_one_way(rho).value;
    worst_upper = std::max(worst_upper, v - oracles::grid_min_deficit(rho, {100, 100}));
    worst_lower = std::max(worst_lower, oracles::grid_min_deficit(rho, {400, 400}) - v);
  }
  return {worst_upper <= 1e-4 && worst_lower <= 1e-3,
          fmt("max (opt - grid100) %.3g, max (grid400 - opt) %.3g", worst_upper, worst_lower)};
}

Outcome reciprocity() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(1e-3, 4.0);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const double a = u(rng);
    const double b = u(rng);
    worst = std::max(worst, std::abs(conversion_rate(a, b).rate * conversion_rate(b, a).rate - 1));
  }
  const double purity = purity_rate(diag_state({0.75, 0.25})).rate;
  return {worst <= 1e-9 && std::abs(purity - 0.188722) <= 1e-6,
          fmt("max |R R' - 1| = %.3g, purity rate %.9f", worst, purity)};
}

Outcome thermodynamic_reduction() {
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 2 + t % 3;
    const Hamiltonian zero(ComplexMatrix::Zero(d, d), 1.0 + t);
    const auto rho = random_density(d, 1 + t % d, 300 + t);
    const auto target = random_density(d, 1 + (t + 1) % d, 400 + t);
    worst = std::max(worst, std::abs(thermo_rate(rho, target, zero).rate - negentropy(rho) / negentropy(target)));
  }
  const Hamiltonian qubit(diag({0, 1}), std::log(2.0));
  const double worked = thermo_rate(diag_state({1, 0}), diag_state({0, 1}), qubit).rate;
  return {worst <= 1e-9 && std::abs(worked - 0.369071) <= 1e-6,
          fmt("max deviation at H = 0 %.3g, qubit example %.9f", worst, worked)};
}

Spectrum random_spectrum(std::size_t n, std::mt19937_64& rng) { return Spectrum(random_probabilities(n, rng)); }

Outcome majorization_suite() {
  std::mt19937_64 rng(9);
  std::size_t preorder_failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng() % 7;
    const auto x = random_spectrum(n, rng);
    const auto y = random_spectrum(n, rng);
    const auto z = random_spectrum(n, rng);
    if (!majorizes(x, x)) ++preorder_failures;
    if (majorizes(x, y) && majorizes(y, z) && !majorizes(x, z)) ++preorder_failures;
  }
  std::size_t oracle_conflicts = 0;
  std::size_t rejected = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t dr = 2 + rng() % 3;
    const std::size_t ds = 2 + rng() % 3;
    const auto rho = random_density(dr, 1 + rng() % dr, 900 + t);
    const auto sigma = random_density(ds, 1 + rng() % ds, 1900 + t);
    if (single_shot_noisy_transition(rho, sigma)) continue;
    ++rejected;
    const auto x = pad_with_maximally_mixed(eig_hermitian(rho.matrix()).spectrum, ds);
    const auto y = pad_with_maximally_mixed(eig_hermitian(sigma.matrix()).spectrum, dr);
    if (oracles::random_bistochastic_reachability(x, y, 500, 5000 + t)) ++oracle_conflicts;
  }
  return {preorder_failures == 0 && oracle_conflicts == 0,
          fmt("preorder failures %.0f / 1000, oracle conflicts %.0f among %.0f rejected pairs",
              static_cast<double>(preorder_failures), static_cast<double>(oracle_conflicts),
              static_cast<double>(rejected))};
}

Outcome protocol_closure() {
  std::mt19937_64 rng(10);
  const Register mixed(maximally_mixed({2, 2, 3}), {Party::A, Party::B, Party::B});
  const std::vector<ProtocolStep> unital = {
      LocalUnitary{Party::A, random_unitary(2, rng)}, LocalUnitary{Party::B, random_unitary(6, rng)},
      AddMaxMixedAncilla{Party::A, 2},                AddMaxMixedAncilla{Party::B, 3},
      SendQubit{Party::A, 0},                         SendQubit{Party::B, 0},
  };
  double worst = 0;
  for (const auto& s : unital) {
    const auto out = apply_step(mixed, s, ProtocolMode::NLOCC);
    const std::size_t d = out.state().dim();
    worst = std::max(worst, max_abs(out.state().matrix() - ComplexMatrix::Identity(d, d) / static_cast<double>(d)));
  }
  ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  ProtocolScript script;
  script.steps = {SendQubit{Party::A, 0}, LocalUnitary{Party::B, cnot}, LocalPartialTrace{Party::B, 0}};
  const double bound = deficit_bound(bell(), script);
  return {worst <= 1e-12 && bound == 1.0, fmt("max deviation from I/d %.3g, Bell script bound %.17g", worst, bound)};
}

Outcome multicopy_subadditivity() {
  OptimizerConfig reduced;
  reduced.restarts = 4;
  double worst = -1;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto rho = random_two_qubit(9000 + seed);
    const double single = deficit_one_way(rho).value;
    worst = std::max(worst, multicopy_deficit(rho, 2, reduced).value - single);
  }
  return {worst <= 1e-3, fmt("max (per-copy two-copy deficit - single copy) %.3g", worst)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "closed-form negentropy identity", 10, closed_form_identity},
      {2, "Bell-state landmarks", 120, bell_landmarks},
      {3, "free-set vanishing", 300, free_set_vanishing},
      {4, "discord decomposition identity", 0, decomposition_identity},
      {5, "ordering chain and cross-path agreement", 0, ordering_chain},
      {6, "optimizer vs grid oracle", 600, optimizer_vs_oracle},
      {7, "conversion-rate reciprocity", 0, reciprocity},
      {8, "thermodynamic reduction", 0, thermodynamic_reduction},
      {9, "majorization suite", 300, majorization_suite},
      {10, "protocol closure", 0, protocol_closure},
      {11, "multicopy subadditivity", 1800, multicopy_subadditivity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += fmt(" (over the %.0f s budget)", c.budget_seconds);
    }
    if (!o.pass) ++failed;
    std::printf("%s  %2d  %-40s %s  [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed;
}
