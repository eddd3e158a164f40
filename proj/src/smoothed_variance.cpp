#include "heckelab/smoothed_variance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "heckelab/errors.hpp"
#include "heckelab/parallel.hpp"
#include "heckelab/summation.hpp"

namespace heckelab {

std::string to_string(PsiVariant v) { return v == PsiVariant::powers ? "powers" : "primes"; }

Truncation truncate_spectrum(const SmoothWindow& f, double K) {
  if (!(K >= 1.0)) throw BadInput("truncate_spectrum: need K >= 1");
  const long cap = std::min(kMaxOrder, static_cast<long>(std::ceil(kXiCap * K)));
  auto c = fourier_coefficients(f, K, cap);
  const double c0 = std::abs(c[0]);
  Truncation t;
  if (c0 == 0.0) {
    t.coefficients = {c[0]};
    return t;
  }
  const double floor = kCoefficientFloor * c0;
  long last_above = -1;
  for (long k = cap; k >= 0; --k) {
    if (std::abs(c[static_cast<std::size_t>(k)]) > floor) {
      last_above = k;
      break;
    }
  }
  if (last_above >= cap)
    throw TruncationFailure("truncate_spectrum: |c_k| stays above 1e-14 |c_0| up to k = " +
                            std::to_string(cap));
  t.k_max = last_above + 1;
  c.resize(static_cast<std::size_t>(t.k_max) + 1);
  t.tail_ratio = std::abs(c.back()) / c0;
  t.coefficients = std::move(c);
  return t;
}

SmoothedCount::SmoothedCount(std::span<const LambdaEntry> entries, double K, double X,
                             SmoothWindow f, SmoothWindow phi, PsiVariant variant)
    : K_(K), X_(X), f_(std::move(f)), phi_(std::move(phi)) {
  if (!(K >= 1.0)) throw BadInput("psi: need K >= 1");
  if (!(X >= 2.0)) throw BadInput("psi: need X >= 2");
  for (const auto& e : entries) {
    if (variant == PsiVariant::primes && e.r != 1) continue;
    const double v = phi_(static_cast<double>(e.norm) / X);
    if (v == 0.0) continue;
    weighted_.theta.push_back(e.theta);
    weighted_.weight.push_back(v * e.weight);
  }
  build_angle_index();
}

SmoothedCount::SmoothedCount(std::vector<double> theta, std::vector<double> weight, double K,
                             double X, SmoothWindow f, SmoothWindow phi)
    : K_(K), X_(X), f_(std::move(f)), phi_(std::move(phi)) {
  if (!(K >= 1.0)) throw BadInput("psi: need K >= 1");
  if (theta.size() != weight.size()) throw BadInput("psi: theta/weight size mismatch");
  weighted_.theta = std::move(theta);
  weighted_.weight = std::move(weight);
  build_angle_index();
}

void SmoothedCount::build_angle_index() {
  std::vector<std::size_t> order(weighted_.theta.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return weighted_.theta[l] < weighted_.theta[r];
  });
  sorted_theta_.resize(order.size());
  sorted_weight_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted_theta_[i] = weighted_.theta[order[i]];
    sorted_weight_[i] = weighted_.weight[order[i]];
  }
}

double SmoothedCount::total_weight() const {
  CompensatedSum s;
  for (const double w : weighted_.weight) s.add(w);
  return s.value();
}

double SmoothedCount::operator()(double theta) const {
  // theta_a contributes through translate j when
  // K/(pi/2) (theta_a - theta - j pi/2) lies in [f.lo, f.hi].
  const double scale = K_ / kHalfPi;
  const double a = theta / kHalfPi;
  const auto j_lo = static_cast<long>(std::floor(-a - f_.hi() / K_));
  const auto j_hi = static_cast<long>(std::ceil(1.0 - a - f_.lo() / K_));
  CompensatedSum sum;
  for (long j = j_lo; j <= j_hi; ++j) {
    const double shift = theta + static_cast<double>(j) * kHalfPi;
    const double from = shift + f_.lo() / scale;
    const double to = shift + f_.hi() / scale;
    auto it = std::lower_bound(sorted_theta_.begin(), sorted_theta_.end(), from);
    for (; it != sorted_theta_.end() && *it <= to; ++it) {
      const double v = f_((*it - shift) * scale);
      if (v != 0.0) sum.add(v * sorted_weight_[it - sorted_theta_.begin()]);
    }
  }
  return sum.value();
}

std::vector<double> SmoothedCount::on_grid(long grid_size) const {
  if (grid_size < 1) throw BadInput("psi grid: need grid_size >= 1");
  std::vector<double> out(static_cast<std::size_t>(grid_size));
  parallel_for(out.size(), 4096, [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j)
      out[j] = (*this)(static_cast<double>(j) * kHalfPi / static_cast<double>(grid_size));
  });
  return out;
}

double psi_eval(double theta, double K, double X, const SmoothWindow& f, const SmoothWindow& phi,
                PsiVariant variant) {
  const auto [lo, hi] = norm_window(X, phi);
  const auto entries = lambda_entries(lo, hi);
  return SmoothedCount(entries, K, X, f, phi, variant)(theta);
}

double mean_formula(double K, double X, const SmoothWindow& f, const SmoothWindow& phi) {
  if (!(K >= 1.0) || !(X >= 2.0)) throw BadInput("mean_formula: need K >= 1, X >= 2");
  return X / K * f.integral() * phi.integral();
}

double PsiSpectrum::synthesize(double theta) const {
  CompensatedSum sum;
  sum.add(coeffs[0].real());
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    const auto e = std::polar(1.0, -4.0 * static_cast<double>(k) * theta);
    sum.add(2.0 * (coeffs[k] * e).real());
  }
  return sum.value();
}

bool PsiSpectrum::certified() const { return coeffs[0] == 0.0 || tail_ratio < 1e-12; }

PsiSpectrum psi_spectrum(const SmoothedCount& psi, const Truncation& truncation) {
  const auto table =
      character_sum_table(psi.weighted(), psi.X(), psi.phi().id(), truncation.k_max);
  PsiSpectrum s;
  s.K = psi.K();
  s.X = psi.X();
  s.k_max = truncation.k_max;
  s.f_id = psi.f().id();
  s.phi_id = psi.phi().id();
  s.tail_ratio = truncation.tail_ratio;
  s.S0 = table[0].real();
  s.coeffs.resize(static_cast<std::size_t>(truncation.k_max) + 1);
  for (long k = 0; k <= truncation.k_max; ++k) {
    s.coeffs[static_cast<std::size_t>(k)] =
        truncation.coefficients[static_cast<std::size_t>(k)] * table[k];
  }
  if (!s.certified())
    throw TruncationFailure("psi_spectrum: tail certificate |c_kmax| S_0 < 1e-12 |coeffs(0)| fails");
  return s;
}

PsiSpectrum psi_spectrum(const SmoothedCount& psi) {
  return psi_spectrum(psi, truncate_spectrum(psi.f(), psi.K()));
}

DirectVariance variance_direct(const SmoothedCount& psi, long grid_size, long k_max) {
  const auto values = psi.on_grid(grid_size);
  CompensatedSum total;
  for (const double v : values) total.add(v);
  DirectVariance out;
  out.grid_size = grid_size;
  out.mean = total.value() / static_cast<double>(grid_size);
  CompensatedSum sq;
  for (const double v : values) sq.add((v - out.mean) * (v - out.mean));
  out.variance = sq.value() / static_cast<double>(grid_size);
  out.aliasing_risk = grid_size < 4 * k_max;
  return out;
}

DirectVariance variance_direct(double K, double X, const SmoothWindow& f, const SmoothWindow& phi,
                               PsiVariant variant, long grid_size) {
  const auto [lo, hi] = norm_window(X, phi);
  const auto entries = lambda_entries(lo, hi);
  const SmoothedCount psi(entries, K, X, f, phi, variant);
  return variance_direct(psi, grid_size, truncate_spectrum(f, K).k_max);
}

double variance_parseval(const PsiSpectrum& spectrum) {
  CompensatedSum sum;
  for (std::size_t k = 1; k < spectrum.coeffs.size(); ++k) sum.add(std::norm(spectrum.coeffs[k]));
  return 2.0 * sum.value();
}

nlohmann::json to_json(const VarianceReport& r) {
  return {{"X", r.X},
          {"K", r.K},
          {"tau", r.tau},
          {"mean_empirical", r.mean_empirical},
          {"mean_formula", r.mean_formula},
          {"var_direct", r.var_direct},
          {"var_parseval", r.var_parseval},
          {"ratio", r.ratio},
          {"prime_power_gap", r.prime_power_gap},
          {"grid_size", r.grid_size},
          {"k_max", r.k_max},
          {"truncation", {{"tail_ratio", r.tail_ratio}, {"coefficient_floor", kCoefficientFloor}}},
          {"aliasing_risk", r.aliasing_risk},
          {"method", r.method},
          {"f", r.f_descriptor},
          {"phi", r.phi_descriptor}};
}

std::vector<VarianceReport> variance_sweep(std::span<const double> tau_list,
                                           std::span<const double> X_list, const SmoothWindow& f,
                                           const SmoothWindow& phi, SweepOptions options) {
  for (const double tau : tau_list)
    if (!(tau >= 0.0 && tau < 1.0)) throw BadInput("variance_sweep: need 0 <= tau < 1");
  for (std::size_t i = 1; i < X_list.size(); ++i)
    if (!(X_list[i] > X_list[i - 1])) throw BadInput("variance_sweep: X list must ascend");
  if (options.grid_factor < 1) throw BadInput("variance_sweep: grid_factor must be >= 1");

  const double f_int = f.integral();
  const double phi_int = phi.integral();
  std::vector<VarianceReport> out(tau_list.size() * X_list.size());
  for (std::size_t xi = 0; xi < X_list.size(); ++xi) {
    const double X = X_list[xi];
    const auto [lo, hi] = norm_window(X, phi);
    const auto entries = lambda_entries(lo, hi);

    // psi - psi^prime: the r >= 2 terms.
    std::vector<double> gap_theta, gap_weight;
    for (const auto& e : entries) {
      if (e.r < 2) continue;
      const double v = phi(static_cast<double>(e.norm) / X);
      if (v == 0.0) continue;
      gap_theta.push_back(e.theta);
      gap_weight.push_back(v * e.weight);
    }

    for (std::size_t ti = 0; ti < tau_list.size(); ++ti) {
      const double tau = tau_list[ti];
      const double K = std::pow(X, tau);
      const SmoothedCount psi(entries, K, X, f, phi, options.variant);
      const auto truncation = truncate_spectrum(f, K);
      const auto spectrum = psi_spectrum(psi, truncation);
      const long grid = std::max(options.grid_factor * truncation.k_max, 64L);
      const auto direct = variance_direct(psi, grid, truncation.k_max);

      const SmoothedCount gap(gap_theta, gap_weight, K, X, f, phi);
      CompensatedSum gap_sq;
      for (const double v : gap.on_grid(grid)) gap_sq.add(v * v);

      VarianceReport& r = out[ti * X_list.size() + xi];
      r.X = X;
      r.K = K;
      r.tau = tau;
      r.mean_empirical = direct.mean;
      r.mean_formula = X / K * f_int * phi_int;
      r.var_direct = direct.variance;
      r.var_parseval = variance_parseval(spectrum);
      r.ratio = direct.variance / (direct.mean * direct.mean);
      r.prime_power_gap = gap_sq.value() / static_cast<double>(grid);
      r.grid_size = grid;
      r.k_max = truncation.k_max;
      r.tail_ratio = truncation.tail_ratio;
      r.aliasing_risk = direct.aliasing_risk;
      r.method = "direct-grid+parseval/" + to_string(options.variant);
      r.f_descriptor = f.descriptor();
      r.phi_descriptor = phi.descriptor();
    }
  }
  return out;
}

}  // namespace heckelab
