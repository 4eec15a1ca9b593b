#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aft/numtheory.hpp"
#include "aft/summation.hpp"

namespace aft {

/// Truncation rule for the outer Mobius sums.
class TruncationPolicy {
 public:
  enum class Mode { kFixed, kAdaptive };

  static TruncationPolicy fixed(int k) {
    if (k < 1) throw std::invalid_argument("TruncationPolicy: K must be >= 1");
    TruncationPolicy p;
    p.mode_ = Mode::kFixed;
    p.k_ = k;
    return p;
  }

  /// Stop once two successive distinct partial sums differ by less than tol,
  /// but never before K = 16 (mu gaps leave the partial unchanged, so only
  /// terms with mu(k) != 0 produce a new partial to compare).
  static TruncationPolicy adaptive(double tol, int k_max) {
    if (!(tol > 0)) throw std::invalid_argument("TruncationPolicy: tol must be > 0");
    if (k_max < 4) throw std::invalid_argument("TruncationPolicy: K_max must be >= 4");
    TruncationPolicy p;
    p.mode_ = Mode::kAdaptive;
    p.tol_ = tol;
    p.k_max_ = k_max;
    return p;
  }

  Mode mode() const { return mode_; }
  int k() const { return k_; }
  double tol() const { return tol_; }
  int k_max() const { return k_max_; }
  int k_cap() const { return mode_ == Mode::kFixed ? k_ : k_max_; }

 private:
  TruncationPolicy() = default;
  Mode mode_ = Mode::kFixed;
  int k_ = 1;
  double tol_ = 0.0;
  int k_max_ = 4;
};

/// One extracted coefficient. `bound` is the C/(n^2 K) truncation cap and is
/// present only when a Lipschitz constant was supplied with the signal.
template <typename T>
struct CoefficientResult {
  int index = 0;
  T value{};
  int k_used = 0;
  std::optional<double> bound;
  std::int64_t additions = 0;
  std::int64_t multiplications = 0;
  bool converged = true;
  std::array<T, 2> last_partials{};  // two most recent distinct partial sums
  std::optional<T> mean_adjustment;  // subtracted mean, when auto-removal ran
  bool approximate = false;          // grid interpolation off the exact lattice
};

enum class SignalSource { kCatalog, kHarmonicList, kSampleGrid };
enum class InterpMode { kLinear, kNearest };

struct TrigTerm {
  int n = 1;       // harmonic index, >= 1
  double a = 0.0;  // cos(2 pi n x) amplitude
  double b = 0.0;  // sin(2 pi n x) amplitude
};

struct Harmonic {
  int n = 1;
  double amplitude = 0.0;
  double phase = 0.0;  // A cos(2 pi n x + phase)
};

/// Real function of period 1 with provenance. Evaluation wraps the argument
/// into [0,1), so f(x+1) == f(x) holds by construction. Immutable; safe for
/// concurrent reads.
class PeriodicSignal {
 public:
  double operator()(double x) const {
    double r = x - std::floor(x);
    if (r >= 1.0) r = 0.0;  // guards against floor rounding at the seam
    return eval_(r) - offset_;
  }

  SignalSource source() const { return source_; }
  bool mean_removed() const { return mean_removed_; }
  std::optional<double> lipschitz_c() const { return lipschitz_c_; }

  /// Highest harmonic for band-limited sources; 0 when unknown.
  int degree() const { return degree_; }

  std::int64_t grid_size() const { return grid_ ? static_cast<std::int64_t>(grid_->size()) : 0; }

  /// True when every sample point offset + m/denom lands on the stored grid.
  bool grid_aligned(std::int64_t denom, double offset = 0.0) const {
    if (!grid_) return true;
    const auto g = static_cast<std::int64_t>(grid_->size());
    if (denom < 1 || g % denom != 0) return false;
    const double u = offset * static_cast<double>(g);
    return std::abs(u - std::round(u)) <= 1e-9;
  }

  static PeriodicSignal cosine() { return cosine_k(1); }

  static PeriodicSignal sine() {
    return trig_poly({TrigTerm{1, 0.0, 1.0}});
  }

  static PeriodicSignal cosine_k(int k) {
    return trig_poly({TrigTerm{k, 1.0, 0.0}});
  }

  /// sum of a_n cos(2 pi n x) + b_n sin(2 pi n x); no constant term allowed.
  static PeriodicSignal trig_poly(std::vector<TrigTerm> terms) {
    PeriodicSignal s;
    double lip = 0.0;
    int degree = 0;
    for (const auto& t : terms) {
      if (t.n < 1) throw std::invalid_argument("trig_poly: harmonic index must be >= 1");
      degree = std::max(degree, t.n);
      lip += kTwoPi * kTwoPi * static_cast<double>(t.n) * t.n * (std::abs(t.a) + std::abs(t.b));
    }
    auto shared = std::make_shared<std::vector<TrigTerm>>(std::move(terms));
    s.eval_ = [shared](double x) {
      kahan_accumulator acc;
      for (const auto& t : *shared) {
        const double arg = kTwoPi * t.n * x;
        if (t.a != 0.0) acc.add(t.a * std::cos(arg));
        if (t.b != 0.0) acc.add(t.b * std::sin(arg));
      }
      return acc.value();
    };
    s.source_ = SignalSource::kHarmonicList;
    s.mean_removed_ = true;
    s.degree_ = degree;
    s.lipschitz_c_ = lip;
    return s;
  }

  /// Amplitude/phase form: sum of A_n cos(2 pi n x + phase_n).
  static PeriodicSignal harmonics(const std::vector<Harmonic>& hs) {
    std::vector<TrigTerm> terms;
    terms.reserve(hs.size());
    for (const auto& h : hs) {
      terms.push_back(TrigTerm{h.n, h.amplitude * std::cos(h.phase),
                               -h.amplitude * std::sin(h.phase)});
    }
    return trig_poly(std::move(terms));
  }

  /// cos^2(2 pi x) = 1/2 + cos(4 pi x)/2; mean 1/2, deliberately not removed.
  static PeriodicSignal cos_squared() {
    PeriodicSignal s;
    s.eval_ = [](double x) {
      const double c = std::cos(kTwoPi * x);
      return c * c;
    };
    s.source_ = SignalSource::kCatalog;
    s.mean_removed_ = false;
    s.degree_ = 2;
    s.lipschitz_c_ = kTwoPi * kTwoPi * 2.0;  // |g''| of cos(4 pi x)/2 is (4 pi)^2/2
    return s;
  }

  /// 1 within 1e-12 (mod 1) of x0, else 0. Used with the irrational-sampling
  /// formulas, where the sample set provably misses x0 except at n = d.
  static PeriodicSignal point_mass(double x0) {
    const double r0 = x0 - std::floor(x0);
    PeriodicSignal s;
    s.eval_ = [r0](double x) {
      double d = std::abs(x - r0);
      d = std::min(d, 1.0 - d);
      return d <= 1e-12 ? 1.0 : 0.0;
    };
    s.source_ = SignalSource::kCatalog;
    s.mean_removed_ = true;  // the integral is 0
    return s;
  }

  static PeriodicSignal constant_zero() { return trig_poly({}); }

  static PeriodicSignal from_function(std::function<double(double)> fn,
                                      bool mean_removed = false,
                                      std::optional<double> lipschitz_c = {}) {
    PeriodicSignal s;
    s.eval_ = std::move(fn);
    s.source_ = SignalSource::kCatalog;
    s.mean_removed_ = mean_removed;
    s.lipschitz_c_ = lipschitz_c;
    return s;
  }

  /// Values f(j/G), j = 0..G-1. Off-lattice arguments interpolate; arguments
  /// within 1e-9 of a lattice index (in index units) snap to the stored value.
  static PeriodicSignal from_samples(std::vector<double> values,
                                     InterpMode mode = InterpMode::kLinear) {
    if (values.empty()) throw std::invalid_argument("from_samples: empty grid");
    PeriodicSignal s;
    auto grid = std::make_shared<const std::vector<double>>(std::move(values));
    const auto g = static_cast<std::int64_t>(grid->size());
    s.eval_ = [grid, g, mode](double x) {
      const double u = x * static_cast<double>(g);
      double j0 = std::floor(u);
      double frac = u - j0;
      if (frac <= 1e-9) {
        frac = 0.0;
      } else if (frac >= 1.0 - 1e-9) {
        frac = 0.0;
        j0 += 1.0;
      }
      const auto idx = static_cast<std::size_t>(static_cast<std::int64_t>(j0) % g);
      if (frac == 0.0) return (*grid)[idx];
      const std::size_t nxt = (idx + 1) % static_cast<std::size_t>(g);
      if (mode == InterpMode::kNearest) return frac < 0.5 ? (*grid)[idx] : (*grid)[nxt];
      return (1.0 - frac) * (*grid)[idx] + frac * (*grid)[nxt];
    };
    s.source_ = SignalSource::kSampleGrid;
    s.grid_ = grid;
    s.mean_removed_ = false;
    return s;
  }

  /// Quadrature estimate of the mean: composite trapezoid (= rectangle rule
  /// on a periodic integrand) at `nodes` points, or the exact grid mean for
  /// sample-grid sources.
  double mean_estimate(std::int64_t nodes = 1 << 16) const {
    kahan_accumulator acc;
    if (grid_) {
      for (double v : *grid_) acc.add(v);
      return acc.value() / static_cast<double>(grid_->size()) - offset_;
    }
    for (std::int64_t j = 0; j < nodes; ++j) {
      acc.add((*this)(static_cast<double>(j) / static_cast<double>(nodes)));
    }
    return acc.value() / static_cast<double>(nodes);
  }

  /// New signal with the estimated mean subtracted and mean_removed set.
  PeriodicSignal with_mean_removed(std::int64_t nodes = 1 << 16) const {
    PeriodicSignal s = *this;
    s.offset_ += mean_estimate(nodes);
    s.mean_removed_ = true;
    return s;
  }

 private:
  PeriodicSignal() = default;

  std::function<double(double)> eval_;  // receives x already in [0,1)
  double offset_ = 0.0;
  SignalSource source_ = SignalSource::kCatalog;
  bool mean_removed_ = false;
  std::optional<double> lipschitz_c_;
  int degree_ = 0;
  std::shared_ptr<const std::vector<double>> grid_;
};

}  // namespace aft
