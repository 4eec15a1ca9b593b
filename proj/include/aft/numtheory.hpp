#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "aft/summation.hpp"

namespace aft {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Sieved Mobius values mu(1..limit) and Mertens prefix sums.
/// Immutable after construction; safe to share across threads.
class MobiusTable {
 public:
  std::int64_t limit() const { return limit_; }

  int mu(std::int64_t n) const {
    check_range(n);
    return mu_[static_cast<std::size_t>(n)];
  }

  std::int64_t mertens(std::int64_t n) const {
    check_range(n);
    return mertens_[static_cast<std::size_t>(n)];
  }

  /// |M(x)| / sqrt(x). Reported as a growth diagnostic, never asserted
  /// against a threshold.
  double mertens_ratio(std::int64_t x) const {
    return std::abs(static_cast<double>(mertens(x))) /
           std::sqrt(static_cast<double>(x));
  }

  /// Count of squarefree integers in [1, n], i.e. sum of |mu(k)|.
  std::int64_t squarefree_count(std::int64_t n) const {
    check_range(n);
    std::int64_t c = 0;
    for (std::int64_t k = 1; k <= n; ++k) c += mu_[static_cast<std::size_t>(k)] != 0;
    return c;
  }

  friend MobiusTable build_mobius_table(std::int64_t limit);

 private:
  MobiusTable() = default;

  void check_range(std::int64_t n) const {
    if (n < 1 || n > limit_) {
      throw std::out_of_range("MobiusTable: index " + std::to_string(n) +
                              " outside [1, " + std::to_string(limit_) + "]");
    }
  }

  std::int64_t limit_ = 0;
  std::vector<std::int8_t> mu_;       // index 0 unused
  std::vector<std::int32_t> mertens_;  // |M(x)| stays tiny for x <= 1e8
};

/// Linear sieve for mu(n), n <= limit, plus Mertens prefix sums.
inline MobiusTable build_mobius_table(std::int64_t limit) {
  constexpr std::int64_t kMaxLimit = 100'000'000;  // memory guard
  if (limit < 1 || limit > kMaxLimit) {
    throw std::invalid_argument("build_mobius_table: limit must be in [1, 1e8]");
  }
  MobiusTable table;
  table.limit_ = limit;
  const auto n = static_cast<std::size_t>(limit);
  table.mu_.assign(n + 1, 0);
  table.mertens_.assign(n + 1, 0);
  std::vector<bool> composite(n + 1, false);
  std::vector<std::int32_t> primes;
  primes.reserve(n > 16 ? n / 8 : 8);

  table.mu_[1] = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::int32_t>(i));
      table.mu_[i] = -1;
    }
    for (std::int32_t p : primes) {
      const std::size_t ip = i * static_cast<std::size_t>(p);
      if (ip > n) break;
      composite[ip] = true;
      if (i % static_cast<std::size_t>(p) == 0) {
        table.mu_[ip] = 0;  // p^2 divides ip
        break;
      }
      table.mu_[ip] = static_cast<std::int8_t>(-table.mu_[i]);
    }
  }

  std::int32_t running = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    running += table.mu_[i];
    table.mertens_[i] = running;
  }
  return table;
}

/// mu(n) as the sum of the primitive n-th roots of unity.
inline std::complex<double> mobius_via_primitive_roots(std::int64_t n) {
  if (n < 1 || n > 1'000'000) {
    throw std::invalid_argument("mobius_via_primitive_roots: n must be in [1, 1e6]");
  }
  complex_accumulator acc;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    acc.add(std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n)));
  }
  return acc.value();
}

/// Sum of mu(d) over the divisors d of n: 1 at n = 1, otherwise 0.
/// Computed literally (divisor walk + trial-division mu), not via the
/// closed form, so the identity stays testable.
inline std::int64_t divisor_mu_sum(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisor_mu_sum: n must be positive");
  const auto mu_trial = [](std::int64_t m) -> int {
    int parity = 1;
    for (std::int64_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return 0;
      parity = -parity;
    }
    if (m > 1) parity = -parity;
    return parity;
  };
  std::int64_t total = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    total += mu_trial(d);
    if (d != n / d) total += mu_trial(n / d);
  }
  return total;
}

/// v(n): number of distinct prime divisors.
inline int omega(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("omega: n must be positive");
  int count = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ++count;
    while (n % p == 0) n /= p;
  }
  if (n > 1) ++count;
  return count;
}

/// First Bernoullian function {t}: t - floor(t) - 1/2 off integers, 0 at
/// integers. Integer detection uses absolute tolerance 1e-12 because sample
/// arguments arrive as floating products.
inline double bernoulli_frac(double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("bernoulli_frac: argument must be finite");
  }
  const double nearest = std::round(t);
  if (std::abs(t - nearest) <= 1e-12) return 0.0;
  return t - std::floor(t) - 0.5;
}

/// Partial sum of mu(n)/n for n <= x, compensated, ascending n.
inline double mu_over_n_partial(const MobiusTable& table, std::int64_t x) {
  if (x < 1 || x > table.limit()) {
    throw std::out_of_range("mu_over_n_partial: x outside table range");
  }
  kahan_accumulator acc;
  for (std::int64_t n = 1; n <= x; ++n) {
    const int m = table.mu(n);
    if (m != 0) acc.add(static_cast<double>(m) / static_cast<double>(n));
  }
  return acc.value();
}

}  // namespace aft
