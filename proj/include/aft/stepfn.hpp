#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aft/numtheory.hpp"
#include "aft/signal.hpp"
#include "aft/summation.hpp"

namespace aft {

/// Even step-function on [-pi, pi], extended 2 pi periodically. Breakpoints
/// live in (0, pi); levels hold the value on each of the breakpoints.size()+1
/// subintervals of [0, pi]. At a breakpoint the value is the average of the
/// one-sided limits (the one convention that makes the grid-aligned sample
/// sums vanish exactly).
class EvenStepFunction {
 public:
  EvenStepFunction(std::vector<double> breakpoints, std::vector<double> levels,
                   bool normalized = false)
      : breakpoints_(std::move(breakpoints)),
        levels_(std::move(levels)),
        normalized_(normalized) {
    if (levels_.size() != breakpoints_.size() + 1) {
      throw std::invalid_argument("EvenStepFunction: need one level per subinterval");
    }
    double prev = 0.0;
    for (double b : breakpoints_) {
      if (!(b > prev) || !(b < std::numbers::pi)) {
        throw std::invalid_argument("EvenStepFunction: breakpoints must ascend within (0, pi)");
      }
      prev = b;
    }
  }

  /// g_b: 1 on |theta| < b, 0 on b < |theta| <= pi.
  static EvenStepFunction indicator(double b) {
    return EvenStepFunction({b}, {1.0, 0.0});
  }

  static EvenStepFunction zero() { return EvenStepFunction({}, {0.0}); }

  double operator()(double theta) const {
    const double t = std::remainder(theta, kTwoPi);  // [-pi, pi]
    const double phi = std::abs(t);
    // breakpoint hit within 1e-12 -> midpoint of the one-sided limits
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), phi);
    auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (idx < breakpoints_.size() && std::abs(breakpoints_[idx] - phi) <= kBreakTol) {
      return 0.5 * (levels_[idx] + levels_[idx + 1]);
    }
    if (idx > 0 && std::abs(breakpoints_[idx - 1] - phi) <= kBreakTol) {
      return 0.5 * (levels_[idx - 1] + levels_[idx]);
    }
    return levels_[idx];
  }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& levels() const { return levels_; }
  bool normalized() const { return normalized_; }

  /// (1/2 pi) integral over [-pi, pi], exact from the piecewise form.
  double mean() const {
    kahan_accumulator acc;
    double prev = 0.0;
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
      acc.add(levels_[i] * (breakpoints_[i] - prev));
      prev = breakpoints_[i];
    }
    acc.add(levels_.back() * (std::numbers::pi - prev));
    return acc.value() / std::numbers::pi;
  }

  /// Linear combination support: scale all levels.
  EvenStepFunction scaled(double factor) const {
    EvenStepFunction f = *this;
    for (double& l : f.levels_) l *= factor;
    return f;
  }

  static constexpr double kBreakTol = 1e-12;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> levels_;
  bool normalized_ = false;
};

/// Subtracts the exact mean a_0, leaving a zero-integral step function.
inline EvenStepFunction normalize_step(const EvenStepFunction& g) {
  const double a0 = g.mean();
  std::vector<double> levels = g.levels();
  for (double& l : levels) l -= a0;
  return EvenStepFunction(g.breakpoints(), std::move(levels), true);
}

/// F_N = sum_{m=0..N-1} f(2 pi m / N), the literal sample loop. Each angle is
/// formed once from the integer pair (m, N).
inline double sample_sum_F_N(const EvenStepFunction& f, std::int64_t n_samples) {
  if (n_samples < 1) throw std::invalid_argument("sample_sum_F_N: N must be >= 1");
  kahan_accumulator acc;
  for (std::int64_t m = 0; m < n_samples; ++m) {
    acc.add(f(kTwoPi * static_cast<double>(m) / static_cast<double>(n_samples)));
  }
  return acc.value();
}

/// F_N by exact per-interval sample counting: O(breakpoints) instead of O(N).
/// Folding m and N-m onto [0, pi] gives
///   F_N = f(0) + [N even] f(pi) + 2 * sum_{j=1..J} f(2 pi j / N),
/// with J = ceil(N/2) - 1, and the j-sum is resolved by counting lattice
/// points below each breakpoint (hits within the 1e-12 angle tolerance get
/// the midpoint value). Agrees with the literal loop to roundoff.
inline double sample_sum_F_N_counted(const EvenStepFunction& f, std::int64_t n_samples) {
  if (n_samples < 1) throw std::invalid_argument("sample_sum_F_N_counted: N must be >= 1");
  const auto& bs = f.breakpoints();
  const auto& ls = f.levels();
  const double n = static_cast<double>(n_samples);
  const std::int64_t j_max = (n_samples + 1) / 2 - 1;  // interior fold indices 1..J

  kahan_accumulator acc;
  acc.add(f(0.0));
  if (n_samples % 2 == 0) acc.add(f(std::numbers::pi));

  // per breakpoint: lattice count strictly below, and whether a lattice point
  // hits the breakpoint itself
  std::int64_t below_prev = 0;
  bool hit_prev = false;
  double doubled = 0.0;
  kahan_accumulator interior;
  for (std::size_t i = 0; i <= bs.size(); ++i) {
    std::int64_t below;
    bool hit = false;
    if (i < bs.size()) {
      const double q = bs[i] * n / kTwoPi;  // fold index of the breakpoint
      const auto j0 = static_cast<std::int64_t>(std::llround(q));
      hit = j0 >= 1 && j0 <= j_max &&
            std::abs(q - static_cast<double>(j0)) <= EvenStepFunction::kBreakTol * n / kTwoPi;
      below = hit ? j0 - 1 : static_cast<std::int64_t>(std::floor(q));
      below = std::min(below, j_max);
    } else {
      below = j_max;  // everything below the pi sentinel
    }
    const std::int64_t inside = below - below_prev - (hit_prev ? 1 : 0);
    interior.add(static_cast<double>(inside) * ls[i]);
    if (hit) interior.add(0.5 * (ls[i] + ls[i + 1]));
    below_prev = below;
    hit_prev = hit;
  }
  doubled = 2.0 * interior.value();
  acc.add(doubled);
  return acc.value();
}

/// |F_N(f_b) - (-2 {bN / 2 pi})|: both sides of the sample-sum identity,
/// computed independently (literal sampling vs. the Bernoullian form).
inline double bernoulli_identity_check(double b, std::int64_t n_samples) {
  if (!(b > 0.0) || !(b < std::numbers::pi)) {
    throw std::invalid_argument("bernoulli_identity_check: b must be in (0, pi)");
  }
  const EvenStepFunction f_b = normalize_step(EvenStepFunction::indicator(b));
  const double lhs = sample_sum_F_N(f_b, n_samples);
  const double rhs = -2.0 * bernoulli_frac(b * static_cast<double>(n_samples) / kTwoPi);
  return std::abs(lhs - rhs);
}

/// Partial sum of mu(k)/k * {k theta}; the full series equals
/// -(1/pi) sin(2 pi theta) uniformly in theta.
inline double davenport_partial(double theta, std::int64_t k_terms, const MobiusTable& table) {
  if (k_terms < 1) throw std::invalid_argument("davenport_partial: K must be >= 1");
  if (k_terms > table.limit()) {
    throw std::out_of_range("davenport_partial: K exceeds the sieve limit");
  }
  kahan_accumulator acc;
  for (std::int64_t k = 1; k <= k_terms; ++k) {
    const int mu = table.mu(k);
    if (mu == 0) continue;
    const double v = bernoulli_frac(static_cast<double>(k) * theta) / static_cast<double>(k);
    acc.add(mu > 0 ? v : -v);
  }
  return acc.value();
}

/// (K, partial) pairs at the requested checkpoints. Convergence is slow and
/// non-monotone, so trend reporting beats a single number.
inline std::vector<std::pair<std::int64_t, double>> davenport_checkpoints(
    double theta, const std::vector<std::int64_t>& ks, const MobiusTable& table) {
  std::vector<std::pair<std::int64_t, double>> out;
  out.reserve(ks.size());
  for (std::int64_t k : ks) out.emplace_back(k, davenport_partial(theta, k, table));
  return out;
}

/// Fourier cosine coefficient of an even step function:
/// a_n = sum_{k<=K} mu(k)/(kn) * F_{kn}, with the m = 0..kn-1 sample indexing.
/// Uses the counted F_N path; the literal path is property-tested against it.
inline CoefficientResult<double> step_cosine_coeff(const EvenStepFunction& f, int n,
                                                   std::int64_t k_terms,
                                                   const MobiusTable& table) {
  if (!f.normalized()) {
    throw std::invalid_argument("step_cosine_coeff: normalize_step the input first");
  }
  if (n < 1 || k_terms < 1) {
    throw std::invalid_argument("step_cosine_coeff: n and K must be >= 1");
  }
  if (k_terms * n > table.limit()) {
    throw std::out_of_range("step_cosine_coeff: K*n exceeds the sieve limit");
  }
  CoefficientResult<double> out;
  out.index = n;
  kahan_accumulator acc;
  int terms = 0;
  for (std::int64_t k = 1; k <= k_terms; ++k) {
    const int mu = table.mu(k);
    if (mu == 0) continue;
    const std::int64_t kn = k * n;
    const double v = sample_sum_F_N_counted(f, kn) / static_cast<double>(kn);
    out.multiplications += 1;
    out.additions += terms > 0 ? 1 : 0;
    ++terms;
    acc.add(mu > 0 ? v : -v);
  }
  out.value = acc.value();
  out.k_used = static_cast<int>(k_terms);
  out.last_partials = {out.value, out.value};
  return out;
}

/// Diagnostic chain linking the Davenport partials at a small theta to the
/// mu(k)/k partial sums. When K*theta < 1 every {k theta} equals
/// k theta - 1/2, so the partial rearranges exactly into
/// theta * M(K) - (1/2) sum mu(k)/k; the report carries both sides plus the
/// trend quantities. Only monotone-trend facts are asserted downstream.
struct PntChainReport {
  std::int64_t k_terms = 0;
  double theta = 0.0;
  double davenport_value = 0.0;
  double mu_over_n_value = 0.0;
  std::int64_t mertens_value = 0;
  double mertens_ratio = 0.0;
  bool small_theta_guard = false;  // all k <= K kept {k theta} = k theta - 1/2
  double linear_identity_dev = 0.0;
  double half_mu_over_n_abs = 0.0;
  double epsilon_bound = 0.0;  // |davenport| + theta * #squarefree(K)
};

inline PntChainReport pnt_chain_report(const MobiusTable& table, std::int64_t k_terms,
                                       double theta_small) {
  if (!(theta_small > 0.0)) {
    throw std::invalid_argument("pnt_chain_report: theta must be positive");
  }
  PntChainReport r;
  r.k_terms = k_terms;
  r.theta = theta_small;
  r.davenport_value = davenport_partial(theta_small, k_terms, table);
  r.mu_over_n_value = mu_over_n_partial(table, k_terms);
  r.mertens_value = table.mertens(k_terms);
  r.mertens_ratio = table.mertens_ratio(k_terms);
  r.small_theta_guard = static_cast<double>(k_terms) * theta_small < 1.0;
  if (r.small_theta_guard) {
    const double rearranged =
        theta_small * static_cast<double>(r.mertens_value) - 0.5 * r.mu_over_n_value;
    r.linear_identity_dev = std::abs(r.davenport_value - rearranged);
  }
  r.half_mu_over_n_abs = 0.5 * std::abs(r.mu_over_n_value);
  r.epsilon_bound = std::abs(r.davenport_value) +
                    theta_small * static_cast<double>(table.squarefree_count(k_terms));
  return r;
}

}  // namespace aft
