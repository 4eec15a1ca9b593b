#pragma once

#include <cmath>
#include <complex>

namespace aft {

/// Neumaier-compensated accumulator. Deterministic for a fixed input order,
/// and accurate for long alternating-sign sums.
class kahan_accumulator {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  kahan_accumulator& operator+=(double v) {
    add(v);
    return *this;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class complex_accumulator {
 public:
  void add(std::complex<double> v) {
    re_.add(v.real());
    im_.add(v.imag());
  }

  complex_accumulator& operator+=(std::complex<double> v) {
    add(v);
    return *this;
  }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  kahan_accumulator re_;
  kahan_accumulator im_;
};

}  // namespace aft
