#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "resourceforge/entropy.hpp"

using namespace rf_test;

TEST_CASE("vn_entropy") {
  CHECK(vn_entropy(ket_state(1, {3})) == doctest::Approx(0.0));
  CHECK(vn_entropy(bell()) < 1e-9);
  CHECK(vn_entropy(maximally_mixed({2})) == doctest::Approx(1.0));
  CHECK(vn_entropy(diag_state({0.75, 0.25})) == doctest::Approx(binary_entropy(0.25)).epsilon(1e-12));
  CHECK(binary_entropy(0.25) == doctest::Approx(0.811278124459).epsilon(1e-11));
  CHECK(vn_entropy(maximally_mixed({8})) == doctest::Approx(3.0));
}

TEST_CASE("vn_entropy stays within [0, log2 d]") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t d = 2 + seed % 6;
    const double s = vn_entropy(random_density(d, 1 + seed % d, seed));
    CHECK(s >= 0.0);
    CHECK(s <= std::log2(static_cast<double>(d)) + 1e-12);
  }
}

TEST_CASE("relative_entropy") {
  SUBCASE("self distance is zero") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto rho = random_density(4, 1 + seed % 4, seed);
      CHECK(relative_entropy(rho, rho) < 1e-9);
    }
  }
  SUBCASE("pure qubit against I/2") {
    CHECK(relative_entropy(ket_state(0, {2}), maximally_mixed({2})) == doctest::Approx(1.0));
  }
  SUBCASE("disjoint supports give +infinity") {
    CHECK(std::isinf(relative_entropy(ket_state(0, {2}), ket_state(1, {2}))));
  }
  SUBCASE("sigma supported on rho's support is finite") {
    // Oracle: commuting states reduce to the classical KL divergence.
    const auto rho = diag_state({0.5, 0.5, 0.0});
    const auto sigma = diag_state({0.2, 0.7, 0.1});
    const double kl = 0.5 * std::log2(0.5 / 0.2) + 0.5 * std::log2(0.5 / 0.7);
    CHECK(relative_entropy(rho, sigma) == doctest::Approx(kl).epsilon(1e-12));
    CHECK(std::isinf(relative_entropy(sigma, rho)));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(relative_entropy(maximally_mixed({2}), maximally_mixed({3})), Error);
  }
  SUBCASE("non-negative with equality only for equal states") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto rho = random_density(3, 3, seed);
      const auto sigma = random_density(3, 3, seed + 500);
      const double s = relative_entropy(rho, sigma);
      CHECK(s >= 0.0);
      CHECK((s > 1e-9) == (max_abs(rho.matrix() - sigma.matrix()) > 1e-9));
    }
  }
}

TEST_CASE("mutual_information") {
  CHECK(mutual_information(tensor(random_density(2, 2, 1), random_density(3, 3, 2))) < 1e-9);
  CHECK(mutual_information(bell()) == doctest::Approx(2.0));
  CHECK(mutual_information(classically_correlated()) == doctest::Approx(1.0));
  CHECK_THROWS_AS(mutual_information(maximally_mixed({2})), Error);
  CHECK_THROWS_AS(mutual_information(maximally_mixed({2, 2, 2})), Error);

  SUBCASE("bounded by 2 min(log dA, log dB)") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const double i = mutual_information(random_density({2, 3}, 1 + seed % 6, seed));
      CHECK(i >= 0.0);
      CHECK(i <= 2.0 + 1e-12);
    }
  }
  SUBCASE("invariant under local unitaries") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto rho = random_two_qubit(seed);
      const auto moved = conjugate_local(rho, random_unitary(2, rng), random_unitary(2, rng));
      CHECK(std::abs(mutual_information(rho) - mutual_information(moved)) < 1e-9);
    }
  }
}

TEST_CASE("negentropy") {
  CHECK(negentropy(maximally_mixed({5})) < 1e-12);
  CHECK(negentropy(ket_state(2, {4})) == doctest::Approx(2.0));
  CHECK(negentropy(diag_state({0.75, 0.25})) == doctest::Approx(1 - binary_entropy(0.25)).epsilon(1e-12));
  CHECK(negentropy(diag_state({0.75, 0.25})) == doctest::Approx(0.188721875541).epsilon(1e-10));
}

TEST_CASE("negentropy equals the distance to I/d") {
  for (std::size_t d : {2u, 3u, 4u, 8u}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto rho = random_density(d, 1 + seed % d, seed);
      CHECK(std::abs(negentropy(rho) - relative_entropy(rho, maximally_mixed({d}))) <= 1e-9);
    }
  }
}

TEST_CASE("entropy is additive over tensor products") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto rho = random_density(3, 1 + seed % 3, seed);
    const auto sigma = random_density(4, 1 + seed % 4, seed + 77);
    CHECK(std::abs(vn_entropy(tensor(rho, sigma)) - vn_entropy(rho) - vn_entropy(sigma)) < 1e-9);
  }
}

TEST_CASE("gibbs_state") {
  std::mt19937_64 rng(3);
  const ComplexMatrix u = random_unitary(3, rng);
  const ComplexMatrix h = u * diag({0.0, 0.4, 1.3}) * u.adjoint();
  SUBCASE("beta = 0 is I/d") {
    CHECK(max_abs(gibbs_state(Hamiltonian(h, 0.0)).matrix() - ComplexMatrix::Identity(3, 3) / 3.0) < 1e-12);
  }
  SUBCASE("H = 0 is I/d") {
    CHECK(max_abs(gibbs_state(Hamiltonian(ComplexMatrix::Zero(4, 4), 2.0)).matrix() -
                  ComplexMatrix::Identity(4, 4) / 4.0) < 1e-12);
  }
  SUBCASE("qubit with beta = ln 2") {
    const auto g = gibbs_state(Hamiltonian(diag({0, 1}), std::log(2.0)));
    CHECK(max_abs(g.matrix() - diag({2.0 / 3, 1.0 / 3})) < 1e-12);
  }
  SUBCASE("valid and commutes with H") {
    const auto g = gibbs_state(Hamiltonian(h, 1.7));
    CHECK_NOTHROW(validate(g.matrix(), g.dims()));
    CHECK(max_abs(g.matrix() * h - h * g.matrix()) < 1e-9);
  }
  SUBCASE("invalid Hamiltonians") {
    CHECK_THROWS_AS(Hamiltonian(h, -1.0), Error);
    CHECK_THROWS_AS(Hamiltonian(h, std::numeric_limits<double>::infinity()), Error);
    ComplexMatrix bad = h;
    bad(0, 1) += 0.5;
    CHECK_THROWS_AS(Hamiltonian(bad, 1.0), Error);
  }
}

TEST_CASE("free_energy_gap") {
  std::mt19937_64 rng(4);
  const ComplexMatrix u = random_unitary(2, rng);
  const Hamiltonian h(u * diag({-0.3, 0.9}) * u.adjoint(), 1.1);
  CHECK(free_energy_gap(gibbs_state(h), h) < 1e-9);

  const Hamiltonian zero(ComplexMatrix::Zero(3, 3), 5.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rho = random_density(3, 1 + seed % 3, seed);
    CHECK(std::abs(free_energy_gap(rho, zero) - negentropy(rho)) < 1e-9);
  }

  // S(diag(1,0) || diag(2/3,1/3)) = -log2(2/3)
  const Hamiltonian qubit(diag({0, 1}), std::log(2.0));
  CHECK(free_energy_gap(diag_state({1, 0}), qubit) == doctest::Approx(std::log2(1.5)).epsilon(1e-12));
  CHECK(std::log2(1.5) == doctest::Approx(0.584962500721).epsilon(1e-11));

  CHECK_THROWS_AS(free_energy_gap(maximally_mixed({3}), qubit), Error);
}
