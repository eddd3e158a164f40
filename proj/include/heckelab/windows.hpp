#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace heckelab {

enum class WindowKind { mollifier, plateau_plus, plateau_minus, custom };

std::string to_string(WindowKind kind);

// exp(-1/(1-x^2)) on (-1, 1), zero elsewhere.
double mollifier_eval(double x);

// Smooth monotone step on [0, 1]: the normalized running integral of the
// mollifier. 0 at t <= 0, 1 at t >= 1. Served from a 4096-cell cubic Hermite
// table built once.
double smooth_ramp(double t);

// An even-or-not, real, compactly supported test function with quadrature
// settings. Immutable once built; copies share the evaluator.
class SmoothWindow {
 public:
  // Mollifier mapped affinely from (-1, 1) onto (lo, hi).
  static SmoothWindow mollifier(double lo = -1.0, double hi = 1.0, double quad_tol = 1e-10);

  // Upper bracket of the indicator of [a, b]: 1 on [a, b], ramps of width eps
  // outside it, support [a - eps, b + eps].
  static SmoothWindow plateau_plus(double a, double b, double eps, double quad_tol = 1e-10);

  // Lower bracket of the indicator of [a, b]: 1 on [a + eps, b - eps],
  // support [a, b].
  static SmoothWindow plateau_minus(double a, double b, double eps, double quad_tol = 1e-10);

  static SmoothWindow custom(std::string label, double lo, double hi,
                             std::function<double(double)> evaluator, double quad_tol = 1e-10);

  // Rebuild a non-custom window from its JSON descriptor.
  static SmoothWindow from_descriptor(const nlohmann::json& descriptor);

  double operator()(double x) const;

  WindowKind kind() const { return kind_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double eps() const { return eps_; }
  double quad_tol() const { return quad_tol_; }
  const std::string& label() const { return label_; }

  // {kind, lo, hi, eps, quad_tol} (+ label for custom windows).
  nlohmann::json descriptor() const;
  // 16 hex digits, FNV-1a of the serialized descriptor.
  std::string id() const;

  // Integral over the support by adaptive Simpson.
  double integral() const;

 private:
  SmoothWindow() = default;

  WindowKind kind_ = WindowKind::custom;
  double lo_ = 0.0;
  double hi_ = 0.0;
  double eps_ = 0.0;
  double quad_tol_ = 1e-10;
  std::string label_;
  std::function<double(double)> eval_;
};

// Unit-core brackets used for unsmoothing: f_eps^+ >= 1_[0,1] >= f_eps^-.
SmoothWindow unit_plateau_plus(double eps);
SmoothWindow unit_plateau_minus(double eps);
// The same profile on the norm scale: Phi_eps^+ >= 1_[1,2] >= Phi_eps^-.
SmoothWindow norm_plateau_plus(double eps);
SmoothWindow norm_plateau_minus(double eps);

// w^(xi) = integral of w(u) exp(-2 pi i u xi) du, by adaptive Simpson to the
// window's quad_tol.
std::complex<double> fourier_hat(const SmoothWindow& w, double xi);

// Fourier coefficient of the periodized window F_K in the basis exp(4ik theta):
// c_k = (1/K) w^(k/K).
std::complex<double> fourier_coefficient(const SmoothWindow& base, double K, long k);

// c_0..c_{k_max} in one pass. Uses a dense trapezoid rule over the support,
// which converges spectrally for smooth compactly supported windows; the
// nodes' phases are advanced by recurrence and re-anchored periodically.
std::vector<std::complex<double>> fourier_coefficients(const SmoothWindow& base, double K,
                                                       long k_max);

// F_K(theta) = sum_j base(K/(pi/2) * (theta - j pi/2)).
class PeriodizedWindow {
 public:
  PeriodizedWindow(SmoothWindow base, double K);

  double operator()(double theta) const;

  const SmoothWindow& base() const { return base_; }
  double K() const { return K_; }

 private:
  SmoothWindow base_;
  double K_;
};

}  // namespace heckelab
