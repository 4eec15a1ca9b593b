#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "aft/boundary.hpp"
#include "aft/detail/mobius_outer.hpp"
#include "aft/numtheory.hpp"
#include "aft/signal.hpp"
#include "aft/summation.hpp"

// Coefficient convention: c_n = a_n + i b_n with f(theta) = sum c_n e^{i n theta}.

namespace aft {

/// (1/n) sum_{m=1..n} f(theta0 + 2 pi m / n), sampled on f's presentation
/// circle. For a power series this collapses to sum_k c_{kn} e^{i k n theta0}.
inline std::complex<double> roots_of_unity_average(const BoundaryFunction& f,
                                                   std::int64_t n, double theta0) {
  if (n < 1) throw std::invalid_argument("roots_of_unity_average: n must be >= 1");
  complex_accumulator acc;
  for (std::int64_t m = 1; m <= n; ++m) {
    acc.add(f.boundary(theta0 + kTwoPi * static_cast<double>(m) / static_cast<double>(n)));
  }
  return acc.value() / static_cast<double>(n);
}

inline double truncation_bound(double c, int n, int n_terms) {
  if (!(c > 0)) throw std::invalid_argument("truncation_bound: C must be positive");
  if (n < 1 || n_terms < 1) {
    throw std::invalid_argument("truncation_bound: n and N must be >= 1");
  }
  return c / (static_cast<double>(n) * n * n_terms);
}

namespace detail {

inline std::complex<double> circle_mean(const BoundaryFunction& f, double r,
                                        std::int64_t nodes = 1 << 12) {
  complex_accumulator acc;
  for (std::int64_t j = 0; j < nodes; ++j) {
    acc.add(f.at(r, kTwoPi * static_cast<double>(j) / static_cast<double>(nodes)));
  }
  return acc.value() / static_cast<double>(nodes);
}

/// Zero-mean gate shared by the Taylor extractors: returns the adjustment to
/// subtract from every inner average, or throws when auto-subtract is off.
inline std::complex<double> normalization_adjustment(const BoundaryFunction& f, double r,
                                                     bool auto_subtract) {
  const std::complex<double> mean = circle_mean(f, r);
  if (std::abs(mean) <= 1e-8) return {};
  if (!auto_subtract) {
    throw std::invalid_argument(
        "taylor extraction requires c_0 = 0; the circle mean exceeded 1e-8 "
        "and auto-subtract is disabled");
  }
  return mean;
}

inline void attach_bound(CoefficientResult<std::complex<double>>& res,
                         const BoundaryFunction& f, int n) {
  if (f.lipschitz_c()) {
    res.bound = *f.lipschitz_c() / (static_cast<double>(n) * n * res.k_used);
  }
}

}  // namespace detail

/// Taylor coefficient c_n of f from boundary samples at the kn-th roots of
/// unity. When the circle mean exceeds the 1e-8 normalization gate it is
/// subtracted and recorded in mean_adjustment (or rejected when
/// auto_subtract = false).
inline CoefficientResult<std::complex<double>> taylor_coeff_unit(
    const BoundaryFunction& f, int n, const TruncationPolicy& policy,
    const MobiusTable& table, bool auto_subtract = true) {
  if (f.radius() != 1.0) {
    throw std::invalid_argument("taylor_coeff_unit: function must be presented on |z| = 1");
  }
  const std::complex<double> adj = detail::normalization_adjustment(f, 1.0, auto_subtract);
  const bool adjusted = adj != std::complex<double>{};
  auto result = detail::mobius_outer<std::complex<double>>(
      [&](std::int64_t kn) {
        complex_accumulator acc;
        for (std::int64_t m = 1; m <= kn; ++m) {
          acc.add(f.at(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(kn)));
        }
        return acc.value() / static_cast<double>(kn) - adj;
      },
      n, policy, table, adjusted ? 1 : 0);
  if (adjusted) result.mean_adjustment = adj;
  detail::attach_bound(result, f, n);
  return result;
}

/// Taylor coefficient from samples on an interior circle |z| = r, rescaled by
/// r^{-n}. For functions analytic only on the open disk.
inline CoefficientResult<std::complex<double>> taylor_coeff_radius(
    const BoundaryFunction& f, int n, double r, const TruncationPolicy& policy,
    const MobiusTable& table, bool auto_subtract = true) {
  if (!(r > 0.0) || r >= 1.0) {
    throw std::invalid_argument("taylor_coeff_radius: r must be in (0, 1)");
  }
  const std::complex<double> adj = detail::normalization_adjustment(f, r, auto_subtract);
  const bool adjusted = adj != std::complex<double>{};
  auto result = detail::mobius_outer<std::complex<double>>(
      [&](std::int64_t kn) {
        complex_accumulator acc;
        for (std::int64_t m = 1; m <= kn; ++m) {
          acc.add(f.at(r, kTwoPi * static_cast<double>(m) / static_cast<double>(kn)));
        }
        return acc.value() / static_cast<double>(kn) - adj;
      },
      n, policy, table, adjusted ? 1 : 0);
  result.value /= std::pow(r, static_cast<double>(n));
  result.multiplications += 1;
  if (adjusted) result.mean_adjustment = adj;
  detail::attach_bound(result, f, n);
  return result;
}

/// Inverse Z-transform coefficient c_n of X(z) = sum_{j>=1} c_j z^{-j},
/// sampled on |z| = 1 at the conjugate roots of unity. The caller declares
/// the region-of-convergence radius, which must lie inside the unit circle.
inline CoefficientResult<std::complex<double>> inverse_z(const BoundaryFunction& x_fn,
                                                         int n, double roc_radius,
                                                         const TruncationPolicy& policy,
                                                         const MobiusTable& table) {
  if (!(roc_radius > 0.0) || roc_radius >= 1.0) {
    throw std::invalid_argument("inverse_z: region of convergence must satisfy r < 1");
  }
  return detail::mobius_outer<std::complex<double>>(
      [&](std::int64_t kn) {
        complex_accumulator acc;
        for (std::int64_t m = 1; m <= kn; ++m) {
          acc.add(x_fn.at(1.0, -kTwoPi * static_cast<double>(m) / static_cast<double>(kn)));
        }
        return acc.value() / static_cast<double>(kn);
      },
      n, policy, table);
}

}  // namespace aft
