#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "resourceforge/entropy.hpp"
#include "resourceforge/monotones.hpp"
#include "resourceforge/oracles.hpp"

using namespace rf_test;

namespace {

Spectrum random_spectrum(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> p = random_probabilities(n, rng);
  // Occasionally sparse, to exercise zero padding and ties.
  if (rng() % 4 == 0) {
    p[rng() % n] = 0.0;
    double total = 0;
    for (double v : p) total += v;
    for (double& v : p) v /= total;
  }
  return Spectrum(std::move(p));
}

DensityMatrix diagonal_state(const std::vector<double>& p) {
  ComplexMatrix m = ComplexMatrix::Zero(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, i) = p[i];
  return DensityMatrix::validate(m, {p.size()});
}

}  // namespace

TEST_CASE("majorizes") {
  CHECK(majorizes(Spectrum({1, 0}), Spectrum({0.5, 0.5})));
  CHECK_FALSE(majorizes(Spectrum({0.5, 0.5}), Spectrum({1, 0})));
  CHECK(majorizes(Spectrum({0.7, 0.2, 0.1}), Spectrum({0.7, 0.2, 0.1})));
  // Zero padding of the shorter spectrum.
  CHECK(majorizes(Spectrum({0.5, 0.5}), Spectrum({0.25, 0.25, 0.25, 0.25})));
  CHECK_FALSE(majorizes(Spectrum({0.25, 0.25, 0.25, 0.25}), Spectrum({0.5, 0.5})));
  // Incomparable pair.
  CHECK_FALSE(majorizes(Spectrum({0.6, 0.2, 0.2}), Spectrum({0.5, 0.45, 0.05})));
  CHECK_FALSE(majorizes(Spectrum({0.5, 0.45, 0.05}), Spectrum({0.6, 0.2, 0.2})));

  try {
    majorizes(Spectrum({0.5, 0.4}), Spectrum({0.5, 0.5}));
    FAIL("expected UnequalSums");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnequalSums);
  }
}

TEST_CASE("majorizes is a preorder") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng() % 7;
    const auto x = random_spectrum(n, rng);
    const auto y = random_spectrum(n, rng);
    const auto z = random_spectrum(n, rng);
    CHECK(majorizes(x, x));
    if (majorizes(x, y) && majorizes(y, z)) CHECK(majorizes(x, z));
    // Everything majorizes the flat spectrum and is majorized by a point mass.
    std::vector<double> flat(n, 1.0 / n);
    std::vector<double> point(n, 0.0);
    point[0] = 1.0;
    CHECK(majorizes(x, Spectrum(flat)));
    CHECK(majorizes(Spectrum(point), x));
  }
}

TEST_CASE("pad_with_maximally_mixed") {
  const auto s = pad_with_maximally_mixed(Spectrum({0.75, 0.25}), 2);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == doctest::Approx(0.375));
  CHECK(s[1] == doctest::Approx(0.375));
  CHECK(s[2] == doctest::Approx(0.125));
  CHECK(s[3] == doctest::Approx(0.125));
}

TEST_CASE("single_shot_noisy_transition") {
  CHECK(single_shot_noisy_transition(ket_state(0, {2}), maximally_mixed({2})));
  CHECK_FALSE(single_shot_noisy_transition(maximally_mixed({2}), ket_state(0, {2})));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto rho = random_density(3, 1 + seed % 3, seed);
    CHECK(single_shot_noisy_transition(rho, rho));
  }
  // Cross-dimension: a pure qubit reaches a pure qubit of larger dimension
  // only after padding, I/2 (x) I/4 vs |0><0| (x) I/2.
  CHECK(single_shot_noisy_transition(ket_state(0, {2}), maximally_mixed({4})));
  CHECK_FALSE(single_shot_noisy_transition(maximally_mixed({2}), ket_state(0, {4})));
  CHECK_THROWS_AS(single_shot_noisy_transition(maximally_mixed({16}), maximally_mixed({32}), 256), Error);
}

TEST_CASE("transitions agree with entropy ordering and the bistochastic oracle") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const std::size_t dr = 2 + rng() % 3;
    const std::size_t ds = 2 + rng() % 3;
    const auto rho = diagonal_state(random_spectrum(dr, rng).values());
    const auto sigma = diagonal_state(random_spectrum(ds, rng).values());
    const bool allowed = single_shot_noisy_transition(rho, sigma);
    const auto x = pad_with_maximally_mixed(eig_hermitian(rho.matrix()).spectrum, ds);
    const auto y = pad_with_maximally_mixed(eig_hermitian(sigma.matrix()).spectrum, dr);
    if (allowed) {
      CHECK(negentropy(tensor(rho, maximally_mixed({ds}))) >= negentropy(tensor(sigma, maximally_mixed({dr}))) - 1e-9);
    }
    const bool sampled = oracles::random_bistochastic_reachability(x, y, 500, 1000 + t);
    if (!allowed) CHECK_FALSE(sampled);
    if (sampled) CHECK(majorizes(x, y));
  }
}

TEST_CASE("purity_rate") {
  CHECK(purity_rate(ket_state(0, {2})).rate == doctest::Approx(1.0));
  CHECK(purity_rate(maximally_mixed({3})).rate < 1e-12);
  const auto r = purity_rate(diag_state({0.75, 0.25}));
  CHECK(std::abs(r.rate - 0.188722) < 1e-6);
  CHECK(r.denominator_bits == 1.0);
  CHECK(r.numerator_bits == r.rate);
}

TEST_CASE("conversion_rate") {
  CHECK(conversion_rate(1, 1).rate == 1.0);
  CHECK(conversion_rate(0.1887, 1).rate == doctest::Approx(0.1887));
  CHECK(std::isinf(conversion_rate(1, 0).rate));
  CHECK(conversion_rate(0, 1).rate == 0.0);
  try {
    conversion_rate(0, 1e-13);
    FAIL("expected BothZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BothZero);
  }
  CHECK_THROWS_AS(conversion_rate(-0.5, 1), Error);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(1e-3, 5.0);
  for (int t = 0; t < 100; ++t) {
    const double a = u(rng);
    const double b = u(rng);
    CHECK(std::abs(conversion_rate(a, b).rate * conversion_rate(b, a).rate - 1.0) <= 1e-9);
  }
}

TEST_CASE("thermo_rate") {
  SUBCASE("worked qubit example") {
    const Hamiltonian h(diag({0, 1}), std::log(2.0));
    const auto r = thermo_rate(diag_state({1, 0}), diag_state({0, 1}), h);
    CHECK(std::abs(r.rate - std::log2(1.5) / std::log2(3.0)) < 1e-12);
    CHECK(std::abs(r.rate - 0.369071) < 1e-6);
  }
  SUBCASE("H = 0 reduces to the negentropy ratio") {
    std::mt19937_64 rng(12);
    const Hamiltonian zero(ComplexMatrix::Zero(3, 3), 1.0);
    for (int t = 0; t < 50; ++t) {
      // Arbitrary states commute with H = 0.
      const auto rho = random_density(3, 1 + t % 3, 100 + t);
      const auto target = random_density(3, 1 + (t + 1) % 3, 200 + t);
      const double expected = negentropy(rho) / negentropy(target);
      CHECK(std::abs(thermo_rate(rho, target, zero).rate - expected) <= 1e-9);
    }
  }
  SUBCASE("Gibbs source is free") {
    const Hamiltonian h(diag({0, 0.5, 2}), 0.7);
    CHECK(thermo_rate(gibbs_state(h), diag_state({0, 0, 1}), h).rate < 1e-9);
  }
  SUBCASE("non-commuting inputs are rejected") {
    const Hamiltonian h(diag({0, 1}), 1.0);
    try {
      thermo_rate(random_density(2, 2, 5), diag_state({0.5, 0.5}), h);
      FAIL("expected NonCommuting");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonCommuting);
    }
    try {
      thermo_rate(gibbs_state(h), gibbs_state(h), h);
      FAIL("expected BothZero");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BothZero);
    }
  }
}
