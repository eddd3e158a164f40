#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "heckelab/characters.hpp"
#include "heckelab/gaussian.hpp"
#include "heckelab/windows.hpp"

namespace heckelab {

enum class PsiVariant { powers, primes };

std::string to_string(PsiVariant v);

// Truncation of the Fourier series of F_K: |c_k| <= kCoefficientFloor |c_0|
// for every k >= k_max up to kXiCap * K.
inline constexpr double kCoefficientFloor = 1e-14;
inline constexpr double kXiCap = 160.0;
inline constexpr long kMaxOrder = 10'000'000;

struct Truncation {
  long k_max = 0;
  // |c_{k_max}| / |c_0|
  double tail_ratio = 0.0;
  std::vector<std::complex<double>> coefficients;  // c_0..c_{k_max}
};

// Throws TruncationFailure if the floor is not reached by min(kXiCap K, 10^7).
Truncation truncate_spectrum(const SmoothWindow& f, double K);

// psi_{K,X}(theta) = sum_a Phi(N(a)/X) Lambda(a) F_K(theta_a - theta) over a
// fixed entry list. The powers variant sums all prime powers with weight
// Lambda; the primes variant keeps r = 1 with weight log N(p).
class SmoothedCount {
 public:
  SmoothedCount(std::span<const LambdaEntry> entries, double K, double X, SmoothWindow f,
                SmoothWindow phi, PsiVariant variant);

  // Entries already restricted/filtered by the caller (e.g. r >= 2 only).
  SmoothedCount(std::vector<double> theta, std::vector<double> weight, double K, double X,
                SmoothWindow f, SmoothWindow phi);

  double operator()(double theta) const;

  // psi at theta_j = j (pi/2) / grid_size, j = 0..grid_size-1.
  std::vector<double> on_grid(long grid_size) const;

  double K() const { return K_; }
  double X() const { return X_; }
  const SmoothWindow& f() const { return f_; }
  const SmoothWindow& phi() const { return phi_; }
  // Weighted angles in ascending (norm, theta) order.
  const WeightedAngles& weighted() const { return weighted_; }
  // S_0 = sum of weights.
  double total_weight() const;

 private:
  void build_angle_index();

  double K_;
  double X_;
  SmoothWindow f_;
  SmoothWindow phi_;
  WeightedAngles weighted_;
  // Same points sorted by angle, for window lookups.
  std::vector<double> sorted_theta_;
  std::vector<double> sorted_weight_;
};

// Convenience form enumerating the entries for X * support(Phi) itself.
double psi_eval(double theta, double K, double X, const SmoothWindow& f, const SmoothWindow& phi,
                PsiVariant variant);

// (X/K) * integral(f) * integral(Phi).
double mean_formula(double K, double X, const SmoothWindow& f, const SmoothWindow& phi);

struct PsiSpectrum {
  double K = 0.0;
  double X = 0.0;
  long k_max = 0;
  // c_k S_k, k = 0..k_max; the k < 0 half is the conjugate.
  std::vector<std::complex<double>> coeffs;
  std::string f_id;
  std::string phi_id;
  double tail_ratio = 0.0;
  double S0 = 0.0;

  // sum_k coeffs(k) exp(-4ik theta) over |k| <= k_max.
  double synthesize(double theta) const;
  // |c_{k_max}| S_0 < 1e-12 |coeffs(0)|
  bool certified() const;
};

PsiSpectrum psi_spectrum(const SmoothedCount& psi, const Truncation& truncation);
PsiSpectrum psi_spectrum(const SmoothedCount& psi);

struct DirectVariance {
  double mean = 0.0;
  double variance = 0.0;
  long grid_size = 0;
  // grid_size < 4 k_max: the uniform grid may alias the spectrum.
  bool aliasing_risk = false;
};

// Uniform-grid mean of |psi - grid mean|^2.
DirectVariance variance_direct(const SmoothedCount& psi, long grid_size, long k_max);
DirectVariance variance_direct(double K, double X, const SmoothWindow& f, const SmoothWindow& phi,
                               PsiVariant variant, long grid_size);

// 2 sum_{k=1}^{k_max} |coeffs(k)|^2.
double variance_parseval(const PsiSpectrum& spectrum);

struct VarianceReport {
  double X = 0.0;
  double K = 0.0;
  double tau = 0.0;
  double mean_empirical = 0.0;
  double mean_formula = 0.0;
  double var_direct = 0.0;
  double var_parseval = 0.0;
  double ratio = 0.0;
  double prime_power_gap = 0.0;
  long grid_size = 0;
  long k_max = 0;
  double tail_ratio = 0.0;
  bool aliasing_risk = false;
  std::string method = "direct-grid+parseval";
  nlohmann::json f_descriptor;
  nlohmann::json phi_descriptor;
};

nlohmann::json to_json(const VarianceReport& r);

struct SweepOptions {
  // grid_size = grid_factor * k_max.
  long grid_factor = 4;
  PsiVariant variant = PsiVariant::powers;
};

// One report per (tau, X), K = X^tau, X ascending within each tau.
std::vector<VarianceReport> variance_sweep(std::span<const double> tau_list,
                                           std::span<const double> X_list, const SmoothWindow& f,
                                           const SmoothWindow& phi, SweepOptions options = {});

}  // namespace heckelab
