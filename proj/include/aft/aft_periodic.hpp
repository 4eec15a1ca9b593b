#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "aft/detail/mobius_outer.hpp"
#include "aft/numtheory.hpp"
#include "aft/signal.hpp"
#include "aft/summation.hpp"

namespace aft {

// Badly-approximable sampling points for the irrational formulas. Any float
// is of course rational; these minimize resonance with the denominators in
// reach of a desk-scale sum.
inline constexpr double kGoldenConjugate = 0.6180339887498948482045868343656;  // (sqrt 5 - 1)/2
inline constexpr double kSqrt2Minus1 = std::numbers::sqrt2 - 1.0;
inline constexpr double kLn2 = std::numbers::ln2;

inline double irrational_by_name(std::string_view name) {
  if (name == "golden") return kGoldenConjugate;
  if (name == "sqrt2") return kSqrt2Minus1;
  if (name == "ln2") return kLn2;
  throw std::invalid_argument("unknown irrational '" + std::string(name) +
                              "' (expected golden, sqrt2, or ln2)");
}

/// s_n(x) = (1/n) sum_{m=1..n} f(x + m/n).
inline double average_s_n(const PeriodicSignal& f, double x, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("average_s_n: n must be >= 1");
  kahan_accumulator acc;
  for (std::int64_t m = 1; m <= n; ++m) {
    acc.add(f(x + static_cast<double>(m) / static_cast<double>(n)));
  }
  return acc.value() / static_cast<double>(n);
}

/// S_n(x) = sum_k mu(k) s_{kn}(x), which approaches
/// a_n cos(2 pi n x) + b_n sin(2 pi n x).
inline CoefficientResult<double> harmonic_S_n(const PeriodicSignal& f, double x, int n,
                                              const TruncationPolicy& policy,
                                              const MobiusTable& table) {
  bool off_grid = false;
  auto result = detail::mobius_outer<double>(
      [&](std::int64_t kn) {
        if (f.grid_size() > 0 && !f.grid_aligned(kn, x)) off_grid = true;
        return average_s_n(f, x, kn);
      },
      n, policy, table);
  result.approximate = off_grid;
  return result;
}

inline double average_error_bound(double c, int n) {
  if (!(c > 0)) throw std::invalid_argument("average_error_bound: C must be positive");
  if (n < 1) throw std::invalid_argument("average_error_bound: n must be >= 1");
  return c / (static_cast<double>(n) * n);
}

namespace detail {

inline void require_mean_removed(const PeriodicSignal& f, const char* op) {
  if (!f.mean_removed()) {
    throw std::invalid_argument(std::string(op) +
                                ": signal must have its mean removed first "
                                "(use with_mean_removed())");
  }
}

inline void attach_bound(CoefficientResult<double>& r, const PeriodicSignal& f, int n) {
  if (f.lipschitz_c()) {
    r.bound = *f.lipschitz_c() / (static_cast<double>(n) * n * r.k_used);
  }
}

}  // namespace detail

/// Fourier cosine coefficient a_n from samples at the kn-th subdivisions of
/// the period. Exact (up to roundoff) for band-limited sources once K covers
/// degree/n.
inline CoefficientResult<double> aft_cosine(const PeriodicSignal& f, int n,
                                            const TruncationPolicy& policy,
                                            const MobiusTable& table) {
  detail::require_mean_removed(f, "aft_cosine");
  auto result = harmonic_S_n(f, 0.0, n, policy, table);
  detail::attach_bound(result, f, n);
  return result;
}

/// Fourier sine coefficient b_n, read off S_n at the quarter-period shift
/// x = 1/(4n) where the cosine part vanishes.
inline CoefficientResult<double> aft_sine(const PeriodicSignal& f, int n,
                                          const TruncationPolicy& policy,
                                          const MobiusTable& table) {
  detail::require_mean_removed(f, "aft_sine");
  auto result = harmonic_S_n(f, 1.0 / (4.0 * n), n, policy, table);
  detail::attach_bound(result, f, n);
  return result;
}

/// Partial sums of the divisor-weighted irrational sampling series. The
/// convergence carries no published rate, so the value at N/2 rides along
/// for trend reporting instead of hiding the slowness.
struct IrrationalSumResult {
  double value = 0.0;
  double value_at_half = 0.0;
  std::int64_t n_terms = 0;
};

/// integral of f over one period, from samples at a single irrational x:
/// sum_{n<=N} (1/n) sum_{d|n} mu(d) f(n x / d). No mean normalization needed.
inline IrrationalSumResult wintner_integral_irrational(const PeriodicSignal& f, double x,
                                                       std::int64_t n_terms,
                                                       const MobiusTable& table) {
  if (n_terms < 1) throw std::invalid_argument("wintner_integral_irrational: N must be >= 1");
  if (n_terms > table.limit()) {
    throw std::out_of_range("wintner_integral_irrational: N exceeds the sieve limit");
  }
  kahan_accumulator acc;
  IrrationalSumResult out;
  out.n_terms = n_terms;
  const std::int64_t half = n_terms / 2;
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    kahan_accumulator inner;
    for (std::int64_t d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      const std::int64_t e = n / d;
      // divisor pair (d, e): terms mu(d) f(e x) and mu(e) f(d x)
      const int mu_d = table.mu(d);
      if (mu_d != 0) {
        const double v = f(static_cast<double>(e) * x);
        inner.add(mu_d > 0 ? v : -v);
      }
      if (d != e) {
        const int mu_e = table.mu(e);
        if (mu_e != 0) {
          const double v = f(static_cast<double>(d) * x);
          inner.add(mu_e > 0 ? v : -v);
        }
      }
    }
    acc.add(inner.value() / static_cast<double>(n));
    if (n == half) out.value_at_half = acc.value();
  }
  out.value = acc.value();
  return out;
}

struct IrrationalCoeffResult {
  std::complex<double> value{};
  std::complex<double> value_at_half{};
  std::int64_t n_terms = 0;
};

/// Fourier coefficient c_k (convention f(x) = sum c_k e^{2 pi i k x}) from
/// samples at a single irrational x. k = 0 reduces to the integral form.
inline IrrationalCoeffResult wintner_coeff_irrational(const PeriodicSignal& f,
                                                      std::int64_t coeff_index, double x,
                                                      std::int64_t n_terms,
                                                      const MobiusTable& table) {
  if (n_terms < 1) throw std::invalid_argument("wintner_coeff_irrational: N must be >= 1");
  if (n_terms > table.limit()) {
    throw std::out_of_range("wintner_coeff_irrational: N exceeds the sieve limit");
  }
  complex_accumulator acc;
  IrrationalCoeffResult out;
  out.n_terms = n_terms;
  const std::int64_t half = n_terms / 2;
  const auto term = [&](std::int64_t j) {
    // f(j x) e^{-2 pi i k j x}, phase reduced before the trig call
    const double t = static_cast<double>(j) * x;
    const double r = t - std::floor(t);
    return f(r) * std::polar(1.0, -kTwoPi * static_cast<double>(coeff_index) * r);
  };
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    complex_accumulator inner;
    for (std::int64_t d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      const std::int64_t e = n / d;
      const int mu_d = table.mu(d);
      if (mu_d != 0) {
        const auto v = term(e);
        inner.add(mu_d > 0 ? v : -v);
      }
      if (d != e) {
        const int mu_e = table.mu(e);
        if (mu_e != 0) {
          const auto v = term(d);
          inner.add(mu_e > 0 ? v : -v);
        }
      }
    }
    acc.add(inner.value() / static_cast<double>(n));
    if (n == half) out.value_at_half = acc.value();
  }
  out.value = acc.value();
  return out;
}

}  // namespace aft
