#pragma once

#include <complex>

namespace heckelab {

// Compensated accumulator built on the TwoSum error-free transformation:
// every rounding error of the running sum is captured exactly and folded
// back in at the end.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    const double bp = t - sum_;
    comp_ += (sum_ - (t - bp)) + (x - bp);
    sum_ = t;
  }

  void add(const CompensatedSum& other) {
    add(other.sum_);
    comp_ += other.comp_;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  void add(const CompensatedComplexSum& other) {
    re_.add(other.re_);
    im_.add(other.im_);
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace heckelab
