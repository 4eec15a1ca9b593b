#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aft/boundary.hpp"
#include "aft/opcount.hpp"
#include "aft/signal.hpp"
#include "aft/summation.hpp"

namespace aft {

// Brute-force reference implementations. These deliberately trade speed for
// auditability and stay independent of the production paths they check.

/// mu(n) by trial-division factorization.
inline int brute_mobius(std::int64_t n) {
  if (n < 1 || n > 10'000'000) {
    throw std::invalid_argument("brute_mobius: n must be in [1, 1e7]");
  }
  int parity = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    parity = -parity;
  }
  if (n > 1) parity = -parity;
  return parity;
}

/// Composite trapezoid rule on a periodic integrand; spectrally accurate for
/// smooth periodic functions.
struct QuadratureSpec {
  std::int64_t nodes = 1 << 12;  // power of two, >= 64
};

inline void validate_quadrature(const QuadratureSpec& spec, std::int64_t min_nodes) {
  if (spec.nodes < 64 || (spec.nodes & (spec.nodes - 1)) != 0) {
    throw std::invalid_argument("QuadratureSpec: nodes must be a power of two >= 64");
  }
  if (spec.nodes < min_nodes) {
    throw std::invalid_argument("QuadratureSpec: insufficient nodes for requested index");
  }
}

struct FourierPair {
  double a = 0.0;
  double b = 0.0;
};

/// Trapezoid estimates of 2 * integral f cos(2 pi n t) dt and
/// 2 * integral f sin(2 pi n t) dt over one period.
inline FourierPair quadrature_fourier(const PeriodicSignal& f, int n,
                                      const QuadratureSpec& spec = {}) {
  validate_quadrature(spec, 8 * static_cast<std::int64_t>(std::abs(n)));
  kahan_accumulator ca;
  kahan_accumulator sa;
  const auto q = static_cast<double>(spec.nodes);
  for (std::int64_t j = 0; j < spec.nodes; ++j) {
    const double t = static_cast<double>(j) / q;
    const double v = f(t);
    const double arg = kTwoPi * n * t;
    ca.add(v * std::cos(arg));
    sa.add(v * std::sin(arg));
  }
  return {2.0 * ca.value() / q, 2.0 * sa.value() / q};
}

inline double quadrature_mean(const PeriodicSignal& f, const QuadratureSpec& spec = {}) {
  validate_quadrature(spec, 64);
  kahan_accumulator acc;
  for (std::int64_t j = 0; j < spec.nodes; ++j) {
    acc.add(f(static_cast<double>(j) / static_cast<double>(spec.nodes)));
  }
  return acc.value() / static_cast<double>(spec.nodes);
}

/// (1/2 pi) contour integral of f(r e^{i theta}) e^{-i n theta}: the classical
/// coefficient integral the AFT replaces. Evaluates on the circle of radius r.
inline std::complex<double> quadrature_taylor(const BoundaryFunction& f, int n,
                                              double r = 1.0,
                                              const QuadratureSpec& spec = {}) {
  validate_quadrature(spec, 8 * static_cast<std::int64_t>(std::abs(n)));
  complex_accumulator acc;
  const auto q = static_cast<double>(spec.nodes);
  for (std::int64_t j = 0; j < spec.nodes; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / q;
    acc.add(f.at(r, theta) * std::polar(1.0, -static_cast<double>(n) * theta));
  }
  return acc.value() / q;
}

/// Direct O(L^2) DFT: X_k = sum_j x_j e^{-2 pi i j k / L}. Complex multiply
/// counted as 4 real multiplications + 2 additions; complex add as 2.
inline std::vector<std::complex<double>> naive_dft(
    const std::vector<std::complex<double>>& samples, OpCountLedger* ledger = nullptr) {
  const auto l = static_cast<std::int64_t>(samples.size());
  if (l < 1) throw std::invalid_argument("naive_dft: need at least one sample");
  std::vector<std::complex<double>> out(samples.size());
  for (std::int64_t k = 0; k < l; ++k) {
    complex_accumulator acc;
    for (std::int64_t j = 0; j < l; ++j) {
      const double arg = -kTwoPi * static_cast<double>(j) * static_cast<double>(k) /
                         static_cast<double>(l);
      acc.add(samples[static_cast<std::size_t>(j)] * std::polar(1.0, arg));
    }
    out[static_cast<std::size_t>(k)] = acc.value();
  }
  if (ledger) {
    ledger->multiplications += 4 * l * l;
    ledger->additions += 4 * l * l - 2 * l;
    ledger->samples_used += l;
  }
  return out;
}

/// Inverse of naive_dft (1/L normalization).
inline std::vector<std::complex<double>> naive_idft(
    const std::vector<std::complex<double>>& spectrum, OpCountLedger* ledger = nullptr) {
  const auto l = static_cast<std::int64_t>(spectrum.size());
  if (l < 1) throw std::invalid_argument("naive_idft: need at least one bin");
  std::vector<std::complex<double>> out(spectrum.size());
  for (std::int64_t j = 0; j < l; ++j) {
    complex_accumulator acc;
    for (std::int64_t k = 0; k < l; ++k) {
      const double arg = kTwoPi * static_cast<double>(j) * static_cast<double>(k) /
                         static_cast<double>(l);
      acc.add(spectrum[static_cast<std::size_t>(k)] * std::polar(1.0, arg));
    }
    out[static_cast<std::size_t>(j)] = acc.value() / static_cast<double>(l);
  }
  if (ledger) {
    ledger->multiplications += 4 * l * l + 2 * l;
    ledger->additions += 4 * l * l - 2 * l;
    ledger->samples_used += l;
  }
  return out;
}

}  // namespace aft
