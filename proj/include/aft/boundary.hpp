#pragma once

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

namespace aft {

/// Complex function on circles inside the closed unit disk, presented on a
/// circle of radius `radius()`. An optional integer shift multiplies by z^k
/// (the device for reaching negative-index coefficients). Immutable.
class BoundaryFunction {
 public:
  using DiskFn = std::function<std::complex<double>(double r, double theta)>;

  std::complex<double> at(double r, double theta) const {
    std::complex<double> v = fn_(r, theta);
    if (shift_ != 0) {
      v *= std::polar(std::pow(r, static_cast<double>(shift_)),
                      static_cast<double>(shift_) * theta);
    }
    return v;
  }

  std::complex<double> boundary(double theta) const { return at(radius_, theta); }

  double radius() const { return radius_; }
  std::optional<double> lipschitz_c() const { return lipschitz_c_; }
  int shift() const { return shift_; }

  /// Pre-multiplies by z^k, giving access to coefficients of index >= -k.
  BoundaryFunction shifted(int k) const {
    BoundaryFunction b = *this;
    b.shift_ += k;
    return b;
  }

  static BoundaryFunction from_function(DiskFn fn, double radius = 1.0,
                                        std::optional<double> lipschitz_c = {}) {
    if (!(radius > 0.0) || radius > 1.0) {
      throw std::invalid_argument("BoundaryFunction: radius must be in (0, 1]");
    }
    BoundaryFunction b;
    b.fn_ = std::move(fn);
    b.radius_ = radius;
    b.lipschitz_c_ = lipschitz_c;
    return b;
  }

  static BoundaryFunction zero() {
    return from_function([](double, double) { return std::complex<double>{}; });
  }

  /// f(z) = z^d.
  static BoundaryFunction monomial(int d) {
    if (d < 1) throw std::invalid_argument("monomial: degree must be >= 1");
    return from_function(
        [d](double r, double theta) {
          return std::polar(std::pow(r, static_cast<double>(d)),
                            static_cast<double>(d) * theta);
        },
        1.0, kTwoPi * kTwoPi * static_cast<double>(d) * d);
  }

  /// f(z) = sum_{j>=1} (rho z)^j = rho z / (1 - rho z); c_n = rho^n.
  /// rho = 1/2 gives z/(2-z).
  static BoundaryFunction geometric(double rho) {
    if (!(rho > 0.0) || rho >= 1.0) {
      throw std::invalid_argument("geometric: rho must be in (0, 1)");
    }
    // sup |d^2/dx^2 f(e^{2 pi i x})| <= 4 pi^2 sum j^2 rho^j
    const double lip = kTwoPi * kTwoPi * rho * (1.0 + rho) / std::pow(1.0 - rho, 3);
    return from_function(
        [rho](double r, double theta) {
          const std::complex<double> z = std::polar(r, theta);
          const std::complex<double> w = rho * z;
          return w / (1.0 - w);
        },
        1.0, lip);
  }

  /// f(z) = e^z - 1; c_n = 1/n!.
  static BoundaryFunction exp_minus_one() {
    const double lip = kTwoPi * kTwoPi * 2.0 * std::numbers::e;  // sum j^2/j! = 2e
    return from_function(
        [](double r, double theta) {
          return std::exp(std::polar(r, theta)) - 1.0;
        },
        1.0, lip);
  }

  /// Finite power series sum c_j z^j, evaluated by Horner.
  static BoundaryFunction power_series(std::vector<std::complex<double>> coeffs) {
    double lip = 0.0;
    for (std::size_t j = 1; j < coeffs.size(); ++j) {
      lip += kTwoPi * kTwoPi * static_cast<double>(j) * static_cast<double>(j) *
             std::abs(coeffs[j]);
    }
    auto shared = std::make_shared<const std::vector<std::complex<double>>>(std::move(coeffs));
    return from_function(
        [shared](double r, double theta) {
          const std::complex<double> z = std::polar(r, theta);
          std::complex<double> v{};
          for (auto it = shared->rbegin(); it != shared->rend(); ++it) v = v * z + *it;
          return v;
        },
        1.0, lip);
  }

  /// Z-domain catalog pole: X(z) = a/(z - a) = sum_{j>=1} a^j z^{-j}, so the
  /// inverse-transform coefficients are c_n = a^n. Region of convergence
  /// |z| > a. The evaluator receives z = r e^{i theta} directly.
  static BoundaryFunction z_pole(double a) {
    if (!(a > 0.0) || a >= 1.0) {
      throw std::invalid_argument("z_pole: pole must be in (0, 1)");
    }
    return from_function(
        [a](double r, double theta) {
          const std::complex<double> z = std::polar(r, theta);
          return a / (z - a);
        },
        1.0);
  }

 private:
  BoundaryFunction() = default;

  DiskFn fn_;
  double radius_ = 1.0;
  std::optional<double> lipschitz_c_;
  int shift_ = 0;
};

}  // namespace aft
