#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "aft/numtheory.hpp"
#include "aft/summation.hpp"

namespace aft {

/// Decay certificate |c_k| <= bound * ratio^k.
struct DecayHint {
  double bound = 1.0;
  double ratio = 0.5;  // in (0, 1)
};

/// Sequence c_1, c_2, ... supplied as a deterministic evaluator. Must be safe
/// for concurrent read-only evaluation.
struct SequenceEvaluator {
  std::function<std::complex<double>(std::int64_t)> eval;
  std::optional<DecayHint> decay_hint;

  std::complex<double> operator()(std::int64_t k) const { return eval(k); }
};

/// b_n = sum of c(k n) for k = 1..K. Ascending k, compensated.
inline std::complex<double> fold_b(const SequenceEvaluator& c, std::int64_t n,
                                   std::int64_t k_terms) {
  if (n < 1 || k_terms < 1) throw std::invalid_argument("fold_b: n and K must be >= 1");
  complex_accumulator acc;
  for (std::int64_t k = 1; k <= k_terms; ++k) acc.add(c(k * n));
  return acc.value();
}

/// c_n recovered from the folded sums: sum of mu(k) b(k n) for k = 1..K.
/// The caller owns the truncation; nothing here evaluates adaptively.
inline std::complex<double> invert(const SequenceEvaluator& b, std::int64_t n,
                                   std::int64_t k_terms, const MobiusTable& table) {
  if (n < 1 || k_terms < 1) throw std::invalid_argument("invert: n and K must be >= 1");
  if (k_terms * n > table.limit()) {
    throw std::out_of_range("invert: K*n exceeds the sieve limit");
  }
  complex_accumulator acc;
  for (std::int64_t k = 1; k <= k_terms; ++k) {
    const int mu = table.mu(k);
    if (mu == 0) continue;
    const std::complex<double> v = b(k * n);
    acc.add(mu > 0 ? v : -v);
  }
  return acc.value();
}

/// Partial sums of the three summability conditions. Absolute convergence
/// alone does not certify the inversion, so `absolute_sufficient` is always
/// false; the other two flags report what the decay hint certifies.
struct WintnerConditionReport {
  double abs_sum = 0.0;            // sum |c_k|
  double weighted_sum = 0.0;       // sum k |c_k|
  double wintner_sum = 0.0;        // sum 2^v(k) |c_k|
  bool absolute_sufficient = false;
  bool weighted_certified = false;  // sum k |c_k| finite, by the hint
  bool wintner_certified = false;  // sum 2^v(k) |c_k| finite, by the hint
};

inline WintnerConditionReport wintner_condition_report(const SequenceEvaluator& c,
                                                       std::int64_t k_terms) {
  if (k_terms < 1) throw std::invalid_argument("wintner_condition_report: K must be >= 1");
  kahan_accumulator abs_acc;
  kahan_accumulator weighted_acc;
  kahan_accumulator wintner_acc;
  for (std::int64_t k = 1; k <= k_terms; ++k) {
    const double m = std::abs(c(k));
    abs_acc.add(m);
    weighted_acc.add(static_cast<double>(k) * m);
    wintner_acc.add(std::pow(2.0, omega(k)) * m);
  }
  WintnerConditionReport report;
  report.abs_sum = abs_acc.value();
  report.weighted_sum = weighted_acc.value();
  report.wintner_sum = wintner_acc.value();
  if (c.decay_hint) {
    const bool geometric = c.decay_hint->ratio > 0.0 && c.decay_hint->ratio < 1.0;
    // Geometric decay dominates both k and 2^v(k) weights (2^v(k) <= k).
    report.weighted_certified = geometric;
    report.wintner_certified = geometric;
  }
  return report;
}

}  // namespace aft
