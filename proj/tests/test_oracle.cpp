#include "aft/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "aft/sigproc.hpp"

using namespace aft;

TEST_CASE("brute mobius on the defining cases") {
  CHECK(brute_mobius(1) == 1);
  CHECK(brute_mobius(8) == 0);
  CHECK(brute_mobius(30) == -1);
  CHECK(brute_mobius(6) == 1);
  CHECK_THROWS_AS(brute_mobius(0), std::invalid_argument);
}

TEST_CASE("quadrature fourier picks out orthogonal modes") {
  const auto cos1 = PeriodicSignal::cosine();
  const auto pair1 = quadrature_fourier(cos1, 1);
  CHECK(pair1.a == Catch::Approx(1.0).margin(1e-12));
  CHECK(pair1.b == Catch::Approx(0.0).margin(1e-12));

  const auto cs = PeriodicSignal::cos_squared();  // 1/2 + cos(4 pi x)/2
  const auto pair2 = quadrature_fourier(cs, 2);
  CHECK(pair2.a == Catch::Approx(0.5).margin(1e-12));
  CHECK(pair2.b == Catch::Approx(0.0).margin(1e-12));

  const auto zero = PeriodicSignal::constant_zero();
  const auto pair0 = quadrature_fourier(zero, 3);
  CHECK(pair0.a == 0.0);
  CHECK(pair0.b == 0.0);
}

TEST_CASE("quadrature rejects insufficient nodes") {
  CHECK_THROWS_AS(quadrature_fourier(PeriodicSignal::cosine(), 100, QuadratureSpec{256}),
                  std::invalid_argument);
  CHECK_THROWS_AS(quadrature_fourier(PeriodicSignal::cosine(), 1, QuadratureSpec{100}),
                  std::invalid_argument);  // not a power of two
}

TEST_CASE("quadrature node-doubling stability") {
  const auto f = PeriodicSignal::trig_poly(
      {TrigTerm{1, 0.7, -0.2}, TrigTerm{3, -0.4, 0.1}, TrigTerm{5, 0.05, 0.3}});
  for (int n = 1; n <= 5; ++n) {
    const auto base = quadrature_fourier(f, n, QuadratureSpec{1 << 10});
    const auto fine = quadrature_fourier(f, n, QuadratureSpec{1 << 11});
    REQUIRE(std::abs(base.a - fine.a) < 1e-12);
    REQUIRE(std::abs(base.b - fine.b) < 1e-12);
  }
}

TEST_CASE("naive dft on canonical vectors") {
  const std::vector<std::complex<double>> ones(4, {1.0, 0.0});
  const auto spec = naive_dft(ones);
  CHECK(std::abs(spec[0] - std::complex<double>{4.0, 0.0}) < 1e-12);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(spec[static_cast<std::size_t>(k)]) < 1e-12);

  std::vector<std::complex<double>> impulse(8, {0.0, 0.0});
  impulse[0] = {1.0, 0.0};
  const auto flat = naive_dft(impulse);
  for (const auto& v : flat) CHECK(std::abs(v - std::complex<double>{1.0, 0.0}) < 1e-12);
}

TEST_CASE("naive dft round trips through its inverse") {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::complex<double>> x(16);
  for (auto& v : x) v = {u(rng), u(rng)};
  const auto back = naive_idft(naive_dft(x));
  for (std::size_t j = 0; j < x.size(); ++j) {
    REQUIRE(std::abs(back[j] - x[j]) < 1e-11);
  }
}

TEST_CASE("naive dft ledger counts the quadratic work") {
  OpCountLedger ledger;
  const std::vector<std::complex<double>> x(8, {1.0, 0.0});
  naive_dft(x, &ledger);
  CHECK(ledger.multiplications == 4 * 8 * 8);
  CHECK(ledger.additions == 4 * 8 * 8 - 2 * 8);
  CHECK(ledger.samples_used == 8);
}

TEST_CASE("length-16 dft agrees with the finite AFT on harmonic data") {
  std::mt19937_64 rng(1616);
  std::uniform_real_distribution<double> amp(0.2, 1.5);
  std::uniform_real_distribution<double> ph(-3.0, 3.0);
  HarmonicSignal f;
  for (int n = 0; n < 7; ++n) {
    f.amplitudes.push_back(amp(rng));
    f.phases.push_back(ph(rng));
  }
  std::vector<std::complex<double>> samples(16);
  for (int j = 0; j < 16; ++j) samples[static_cast<std::size_t>(j)] = f(j / 16.0);
  const auto spectrum = naive_dft(samples);

  const auto table = build_mobius_table(64);
  OpCountLedger ledger;
  for (int n = 1; n <= 7; ++n) {
    const auto rec = recover_amplitude_phase(f, n, table, ledger);
    const auto dft_phasor = spectrum[static_cast<std::size_t>(n)] * (2.0 / 16.0);
    const auto aft_phasor = std::polar(rec.amplitude, rec.phase);
    REQUIRE(std::abs(dft_phasor - aft_phasor) < 1e-9);
  }
}

TEST_CASE("boundary quadrature extracts taylor coefficients") {
  const auto f = BoundaryFunction::geometric(0.5);  // c_n = 2^{-n}
  for (int n = 1; n <= 6; ++n) {
    const auto c = quadrature_taylor(f, n);
    REQUIRE(std::abs(c - std::complex<double>(std::pow(0.5, n), 0.0)) < 1e-12);
  }
}
