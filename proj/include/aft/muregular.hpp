#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aft/boundary.hpp"
#include "aft/detail/mobius_outer.hpp"
#include "aft/numtheory.hpp"
#include "aft/signal.hpp"
#include "aft/summation.hpp"

// Yukawan (panharmonic) coefficient machinery. `mu_param` is the PDE
// parameter; the arithmetic weight is always spelled mobius/mu(k) via the
// table, never `mu_param`, to keep the two symbols apart.

namespace aft {

/// Modified Bessel function of the first kind by its power series,
/// truncated once a term drops below 1e-18 of the running sum.
inline double bessel_i(int n, double x) {
  if (n < 0 || n > 64) throw std::invalid_argument("bessel_i: order must be in [0, 64]");
  if (!(x >= 0.0) || x > 50.0) throw std::invalid_argument("bessel_i: argument must be in [0, 50]");
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  const double half = x / 2.0;
  double term = 1.0;
  for (int i = 1; i <= n; ++i) term *= half / static_cast<double>(i);  // (x/2)^n / n!
  double sum = term;
  for (int j = 1; j <= 512; ++j) {
    term *= half * half / (static_cast<double>(j) * (n + j));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

/// Coefficients c_0..c_M of a mu-regular function, with c_0 = 0 (the f(0) = 0
/// normalization). Negative indices are never stored: c_{-n} = conj(c_{n-1}).
struct MuRegularSpec {
  double mu_param = 1.0;
  std::vector<std::complex<double>> coeffs;

  void validate() const {
    if (!(mu_param > 0.0)) throw std::invalid_argument("MuRegularSpec: mu_param must be > 0");
    if (coeffs.empty()) throw std::invalid_argument("MuRegularSpec: need at least c_0");
    if (coeffs.size() > 65) {
      throw std::invalid_argument("MuRegularSpec: at most 64 modes (Bessel decay makes higher ones invisible)");
    }
    if (std::abs(coeffs[0]) != 0.0) {
      throw std::invalid_argument("MuRegularSpec: c_0 must be 0 (f(0) = 0 normalization)");
    }
  }
};

/// f(r e^{i theta}) = sum_{n=-M-1}^{M} c_n I_|n|(mu r) e^{i n theta}, with the
/// negative side filled in by the conjugate rule.
inline std::complex<double> synthesize_boundary(const MuRegularSpec& spec, double r,
                                                double theta) {
  spec.validate();
  if (!(r >= 0.0) || r > 1.0) {
    throw std::invalid_argument("synthesize_boundary: r must be in [0, 1]");
  }
  complex_accumulator acc;
  const auto modes = static_cast<int>(spec.coeffs.size());  // M + 1 stored values
  for (int n = 0; n < modes; ++n) {
    const double w = bessel_i(n, spec.mu_param * r);
    if (spec.coeffs[static_cast<std::size_t>(n)] != std::complex<double>{}) {
      acc.add(spec.coeffs[static_cast<std::size_t>(n)] * w *
              std::polar(1.0, static_cast<double>(n) * theta));
    }
    // c_{-(n+1)} = conj(c_n)
    const std::complex<double> neg = std::conj(spec.coeffs[static_cast<std::size_t>(n)]);
    if (neg != std::complex<double>{}) {
      const double wn = bessel_i(n + 1, spec.mu_param * r);
      acc.add(neg * wn * std::polar(1.0, -static_cast<double>(n + 1) * theta));
    }
  }
  return acc.value();
}

/// Wraps a spec as an evaluator on disk circles.
inline BoundaryFunction make_boundary(const MuRegularSpec& spec) {
  spec.validate();
  return BoundaryFunction::from_function(
      [spec](double r, double theta) { return synthesize_boundary(spec, r, theta); });
}

/// |f(0) - (2 pi I_0(mu rho))^{-1} contour integral of f on |z| = rho|,
/// the mean-value property deviation. Quadrature at 4096 nodes.
inline double mean_value_check(const BoundaryFunction& f, double mu_param, double rho) {
  if (!(rho > 0.0) || rho >= 1.0) {
    throw std::invalid_argument("mean_value_check: rho must be in (0, 1)");
  }
  if (!(mu_param > 0.0)) throw std::invalid_argument("mean_value_check: mu_param must be > 0");
  constexpr std::int64_t kNodes = 1 << 12;
  complex_accumulator acc;
  for (std::int64_t j = 0; j < kNodes; ++j) {
    acc.add(f.at(rho, kTwoPi * static_cast<double>(j) / static_cast<double>(kNodes)));
  }
  const std::complex<double> mean = acc.value() / static_cast<double>(kNodes);
  return std::abs(f.at(0.0, 0.0) - mean / bessel_i(0, mu_param * rho));
}

struct MuRegularCoeff {
  std::complex<double> value{};
  int k_used = 0;
  std::int64_t additions = 0;
  std::int64_t multiplications = 0;
  /// Heuristic truncation budget: last outer-sum deltas, Bessel-weighted and
  /// accumulated through the conjugate recursion.
  double error_budget = 0.0;
};

/// Recursive extraction: c_n = I_n(mu)^{-1} * [Mobius-weighted unit-circle
/// sums] - conj(c_{n-1}), seeded with c_0 = 0. The recursion over n is
/// sequential by construction; the inner sums are the usual pure averages.
inline std::vector<MuRegularCoeff> muregular_coeffs_recursive(const BoundaryFunction& f,
                                                              double mu_param, int n_max,
                                                              const TruncationPolicy& policy,
                                                              const MobiusTable& table) {
  if (!(mu_param > 0.0)) throw std::invalid_argument("muregular_coeffs_recursive: mu_param must be > 0");
  if (n_max < 1) throw std::invalid_argument("muregular_coeffs_recursive: n_max must be >= 1");

  // c_0 = 0 gate, probed at a small interior radius standing in for rho -> 0.
  {
    constexpr double kRho = 1e-3;
    constexpr std::int64_t kNodes = 1 << 12;
    complex_accumulator acc;
    for (std::int64_t j = 0; j < kNodes; ++j) {
      acc.add(f.at(kRho, kTwoPi * static_cast<double>(j) / static_cast<double>(kNodes)));
    }
    const std::complex<double> c0 =
        acc.value() / static_cast<double>(kNodes) / bessel_i(0, mu_param * kRho);
    if (std::abs(c0) > 1e-8) {
      throw std::invalid_argument(
          "muregular_coeffs_recursive: boundary data must satisfy c_0 = 0");
    }
  }

  std::vector<MuRegularCoeff> out;
  out.reserve(static_cast<std::size_t>(n_max));
  std::complex<double> prev{};  // c_0
  double budget = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double weight = bessel_i(n, mu_param);
    if (weight < 1e-300) {
      throw std::domain_error("muregular_coeffs_recursive: I_n(mu) degenerate at n = " +
                              std::to_string(n));
    }
    auto aft_sum = detail::mobius_outer<std::complex<double>>(
        [&](std::int64_t kn) {
          complex_accumulator acc;
          for (std::int64_t m = 1; m <= kn; ++m) {
            acc.add(f.at(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(kn)));
          }
          return acc.value() / static_cast<double>(kn);
        },
        n, policy, table);
    MuRegularCoeff c;
    c.value = aft_sum.value / weight - std::conj(prev);
    c.k_used = aft_sum.k_used;
    c.additions = aft_sum.additions + 1;            // the conjugate subtraction
    c.multiplications = aft_sum.multiplications + 1;  // the 1/I_n(mu) scale
    budget += std::abs(aft_sum.last_partials[1] - aft_sum.last_partials[0]) / weight;
    c.error_budget = budget;
    out.push_back(c);
    prev = c.value;
  }
  return out;
}

}  // namespace aft
