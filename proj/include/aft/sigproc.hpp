#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aft/numtheory.hpp"
#include "aft/opcount.hpp"
#include "aft/oracle.hpp"
#include "aft/summation.hpp"

namespace aft {

/// Band-limited period-1 signal: F(t) = sum_{n=1..N} A_n cos(2 pi n t + theta_n),
/// no constant term, nothing above the N-th harmonic.
struct HarmonicSignal {
  std::vector<double> amplitudes;  // A_1..A_N
  std::vector<double> phases;      // theta_1..theta_N in [-pi, pi)

  int n_band() const { return static_cast<int>(amplitudes.size()); }

  void validate() const {
    if (amplitudes.size() != phases.size()) {
      throw std::invalid_argument("HarmonicSignal: amplitudes/phases size mismatch");
    }
    if (amplitudes.empty()) throw std::invalid_argument("HarmonicSignal: empty signal");
  }

  double operator()(double t) const {
    kahan_accumulator acc;
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
      if (amplitudes[i] == 0.0) continue;
      acc.add(amplitudes[i] *
              std::cos(kTwoPi * static_cast<double>(i + 1) * t + phases[i]));
    }
    return acc.value();
  }

  /// a_n(t) = A_n cos(2 pi n t + theta_n), the direct-evaluation oracle.
  double harmonic_at(int n, double t) const {
    if (n < 1 || n > n_band()) return 0.0;
    return amplitudes[static_cast<std::size_t>(n - 1)] *
           std::cos(kTwoPi * n * t + phases[static_cast<std::size_t>(n - 1)]);
  }
};

/// Delay-line filter output s_k(t) = (1/k) sum_{m=0..k-1} F(t - m/k).
/// Ledger: k-1 additions, one multiplication (the 1/k scale), k samples.
inline double delay_filter_output(const HarmonicSignal& f, std::int64_t k, double t,
                                  OpCountLedger& ledger) {
  if (k < 1) throw std::invalid_argument("delay_filter_output: k must be >= 1");
  kahan_accumulator acc;
  for (std::int64_t m = 0; m < k; ++m) {
    acc.add(f(t - static_cast<double>(m) / static_cast<double>(k)));
  }
  ledger.additions += k - 1;
  ledger.multiplications += 1;
  ledger.samples_used += k;
  return acc.value() / static_cast<double>(k);
}

struct FiniteAftValue {
  double value = 0.0;
  bool in_band = true;  // false when n exceeds the band (result forced to 0)
};

/// a_n(t) = sum_{k <= N/n} mu(k) s_{kn}(t); the sum truncates exactly because
/// s_j vanishes beyond the band. mu enters as a sign, never a multiply.
inline FiniteAftValue finite_aft_harmonic(const HarmonicSignal& f, int n, double t,
                                          const MobiusTable& table, OpCountLedger& ledger) {
  f.validate();
  if (n < 1) throw std::invalid_argument("finite_aft_harmonic: n must be >= 1");
  const int band = f.n_band();
  if (n > band) return {0.0, false};
  const std::int64_t k_max = band / n;
  if (k_max > table.limit()) {
    throw std::out_of_range("finite_aft_harmonic: band exceeds the sieve limit");
  }
  kahan_accumulator acc;
  int terms = 0;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const int mu = table.mu(k);
    if (mu == 0) continue;
    const double s = delay_filter_output(f, k * n, t, ledger);
    acc.add(mu > 0 ? s : -s);
    if (terms > 0) ledger.additions += 1;
    ++terms;
  }
  return {acc.value(), true};
}

struct AmplitudePhase {
  double amplitude = 0.0;
  double phase = 0.0;  // in [-pi, pi)
  bool degenerate = false;
};

/// (A_n, theta_n) from a_n(t) at t = 0 and t = 1/(4n):
/// a_n(0) = A cos(theta), a_n(1/(4n)) = -A sin(theta). hypot/atan2 are
/// library calls, not counted as ledger multiplications.
inline AmplitudePhase recover_amplitude_phase(const HarmonicSignal& f, int n,
                                              const MobiusTable& table,
                                              OpCountLedger& ledger) {
  const auto at0 = finite_aft_harmonic(f, n, 0.0, table, ledger);
  const auto atq = finite_aft_harmonic(f, n, 1.0 / (4.0 * n), table, ledger);
  const double a = std::hypot(at0.value, atq.value);
  if (a < 1e-13) return {0.0, 0.0, true};
  double phi = std::atan2(-atq.value, at0.value);
  if (phi >= std::numbers::pi) phi -= kTwoPi;
  return {a, phi, false};
}

/// Full-band extraction versus the naive DFT baseline. Both methods run on
/// their own exact-recovery sample budget: the AFT draws its delay-line
/// samples (s_j(0) computed once per j and shared across coefficients), the
/// DFT gets the minimal alias-free grid of 2N+1 points. The baseline is a
/// naive O(L^2) transform, not an FFT, so its ledger is trivially auditable.
struct BenchmarkReport {
  int n_band = 0;
  OpCountLedger aft;
  OpCountLedger dft;
  std::int64_t dft_length = 0;
  double max_deviation = 0.0;  // max phasor difference between the methods
};

inline BenchmarkReport benchmark_vs_dft(const HarmonicSignal& f, const MobiusTable& table) {
  f.validate();
  const int band = f.n_band();
  if (band > 4096) throw std::invalid_argument("benchmark_vs_dft: band limited to 4096");
  if (band > table.limit()) {
    throw std::out_of_range("benchmark_vs_dft: band exceeds the sieve limit");
  }

  BenchmarkReport report;
  report.n_band = band;

  // AFT side: cosine-route filters s_j(0) shared across all n.
  std::vector<double> s_zero(static_cast<std::size_t>(band) + 1, 0.0);
  for (std::int64_t j = 1; j <= band; ++j) {
    s_zero[static_cast<std::size_t>(j)] = delay_filter_output(f, j, 0.0, report.aft);
  }
  std::vector<std::complex<double>> aft_phasors(static_cast<std::size_t>(band) + 1);
  for (int n = 1; n <= band; ++n) {
    kahan_accumulator cos_acc;
    kahan_accumulator sin_acc;
    int cos_terms = 0;
    int sin_terms = 0;
    for (std::int64_t k = 1; k * n <= band; ++k) {
      const int mu = table.mu(k);
      if (mu == 0) continue;
      const double sc = s_zero[static_cast<std::size_t>(k * n)];
      cos_acc.add(mu > 0 ? sc : -sc);
      if (cos_terms > 0) report.aft.additions += 1;
      ++cos_terms;
      const double ss = delay_filter_output(f, k * n, 1.0 / (4.0 * n), report.aft);
      sin_acc.add(mu > 0 ? ss : -ss);
      if (sin_terms > 0) report.aft.additions += 1;
      ++sin_terms;
    }
    // a_n(0) = A cos(theta); a_n(1/(4n)) = -A sin(theta)
    aft_phasors[static_cast<std::size_t>(n)] = {cos_acc.value(), -sin_acc.value()};
  }

  // DFT side: minimal alias-free length.
  const std::int64_t len = 2 * static_cast<std::int64_t>(band) + 1;
  report.dft_length = len;
  std::vector<std::complex<double>> samples(static_cast<std::size_t>(len));
  for (std::int64_t j = 0; j < len; ++j) {
    samples[static_cast<std::size_t>(j)] = f(static_cast<double>(j) / static_cast<double>(len));
  }
  const auto spectrum = naive_dft(samples, &report.dft);
  double max_dev = 0.0;
  for (int n = 1; n <= band; ++n) {
    // bin_n = L * (A_n / 2) e^{i theta_n}
    const std::complex<double> dft_phasor =
        spectrum[static_cast<std::size_t>(n)] * (2.0 / static_cast<double>(len));
    report.dft.multiplications += 2;
    max_dev = std::max(max_dev,
                       std::abs(dft_phasor - aft_phasors[static_cast<std::size_t>(n)]));
  }
  report.max_deviation = max_dev;
  return report;
}

}  // namespace aft
