#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "aft/numtheory.hpp"
#include "aft/signal.hpp"
#include "aft/summation.hpp"

namespace aft::detail {

template <typename T>
struct accumulator_for;

template <>
struct accumulator_for<double> {
  using type = kahan_accumulator;
};

template <>
struct accumulator_for<std::complex<double>> {
  using type = complex_accumulator;
};

/// Shared outer loop sum_{k<=K} mu(k) * avg(k n). `avg(kn)` must return the
/// already-scaled inner average over kn samples; mu(k) = 0 terms are skipped
/// entirely (no samples drawn, nothing counted). Under an adaptive policy the
/// loop stops at the first k >= 16 where two successive distinct partial sums
/// differ by less than tol; exhausting K_max without that leaves
/// converged = false and the last two partials in the result.
template <typename T, typename AvgFn>
CoefficientResult<T> mobius_outer(const AvgFn& avg, int n, const TruncationPolicy& policy,
                                  const MobiusTable& table,
                                  std::int64_t extra_adds_per_term = 0) {
  if (n < 1) throw std::invalid_argument("mobius_outer: index must be >= 1");
  const int cap = policy.k_cap();
  if (static_cast<std::int64_t>(cap) * n > table.limit()) {
    throw std::out_of_range("mobius_outer: K*n exceeds the sieve limit");
  }

  CoefficientResult<T> out;
  out.index = n;
  typename accumulator_for<T>::type acc;
  T prev{};
  T cur{};
  int terms = 0;
  int k_used = cap;
  bool settled = policy.mode() == TruncationPolicy::Mode::kFixed;

  for (int k = 1; k <= cap; ++k) {
    const int mu = table.mu(k);
    if (mu == 0) continue;
    const std::int64_t kn = static_cast<std::int64_t>(k) * n;
    const T s = avg(kn);
    out.additions += kn - 1 + extra_adds_per_term + (terms > 0 ? 1 : 0);
    out.multiplications += 1;
    ++terms;
    acc.add(mu > 0 ? s : -s);
    prev = cur;
    cur = acc.value();
    if (policy.mode() == TruncationPolicy::Mode::kAdaptive && k >= 16 && terms >= 2 &&
        std::abs(cur - prev) < policy.tol()) {
      settled = true;
      k_used = k;
      break;
    }
  }

  out.k_used = k_used;
  out.value = cur;
  out.converged = settled;
  out.last_partials = {prev, cur};
  return out;
}

}  // namespace aft::detail
