#include <doctest.h>

#include <cmath>
#include <random>

#include "heckelab/characters.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/gaussian.hpp"
#include "heckelab/smoothed_variance.hpp"
#include "heckelab/windows.hpp"
#include "oracles.hpp"

using namespace heckelab;

namespace {

// psi by brute force: scan primes, raise to powers, periodize f by hand.
double oracle_psi(double theta, double K, double X, const SmoothWindow& f,
                  const SmoothWindow& phi, bool powers) {
  const auto hi = static_cast<std::int64_t>(std::floor(X * phi.hi()));
  double total = 0.0;
  for (const auto& g : oracle::gaussian_scan(0, hi)) {
    std::int64_t re = g.a, im = g.b;
    for (int r = 1; re * re + im * im <= hi; ++r) {
      if (r > 1 && !powers) break;
      const double n = double(re * re + im * im);
      double angle = std::atan2(double(im), double(re));
      while (angle < 0) angle += kHalfPi;
      while (angle >= kHalfPi) angle -= kHalfPi;
      double F = 0.0;
      for (int j = -4; j <= 4; ++j) F += f(K / kHalfPi * (angle - theta - j * kHalfPi));
      total += phi(n / X) * std::log(double(g.norm)) * F;
      const std::int64_t r2 = re * g.a - im * g.b;
      im = re * g.b + im * g.a;
      re = r2;
    }
  }
  return total;
}

struct Setup {
  SmoothWindow f = SmoothWindow::mollifier();
  SmoothWindow phi = norm_plateau_plus(0.05);
};

SmoothedCount make(double K, double X, PsiVariant variant = PsiVariant::powers) {
  const Setup s;
  const auto [lo, hi] = norm_window(X, s.phi);
  const auto entries = lambda_entries(lo, hi);
  return SmoothedCount(entries, K, X, s.f, s.phi, variant);
}

double grid_mean(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m += x;
  return m / v.size();
}

}  // namespace

TEST_CASE("psi: zero window and direct oracle") {
  const Setup s;
  const auto zero = SmoothWindow::custom("zero", -1.0, 1.0, [](double) { return 0.0; });
  for (double theta : {0.0, 0.4, 1.3}) CHECK(psi_eval(theta, 5, 50, zero, s.phi, PsiVariant::powers) == 0.0);

  for (double theta : {0.0, 0.2, 0.7853981633974483, 1.5}) {
    for (bool powers : {true, false}) {
      const auto variant = powers ? PsiVariant::powers : PsiVariant::primes;
      const double got = psi_eval(theta, 5, 50, s.f, s.phi, variant);
      const double want = oracle_psi(theta, 5, 50, s.f, s.phi, powers);
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("psi: nonnegative and powers dominate primes") {
  const auto all = make(12, 5000);
  const auto primes = make(12, 5000, PsiVariant::primes);
  const auto a = all.on_grid(512);
  const auto b = primes.on_grid(512);
  for (std::size_t j = 0; j < a.size(); ++j) {
    CHECK(a[j] >= 0.0);
    CHECK(b[j] >= 0.0);
    CHECK(a[j] - b[j] >= -1e-12 * a[j]);
  }
}

TEST_CASE("mean formula") {
  const Setup s;
  CHECK(mean_formula(20, 1e4, s.f, s.phi) * 2 == doctest::Approx(mean_formula(10, 1e4, s.f, s.phi)).epsilon(1e-15));
  const double If = oracle::simpson(mollifier_eval, -1.0, 1.0, 1 << 14);
  const double Iphi = oracle::simpson([&](double u) { return s.phi(u); }, 0.95, 2.05, 1 << 14);
  CHECK(mean_formula(10, 1e4, s.f, s.phi) == doctest::Approx(1e4 / 10 * If * Iphi).epsilon(1e-9));

  const auto psi = make(10, 1e5);
  const double mean = grid_mean(psi.on_grid(4096));
  CHECK(std::abs(mean - mean_formula(10, 1e5, s.f, s.phi)) < 0.05 * mean);
}

TEST_CASE("truncation rule") {
  const Setup s;
  const auto t = truncate_spectrum(s.f, 8);
  REQUIRE(t.coefficients.size() == std::size_t(t.k_max) + 1);
  CHECK(t.tail_ratio < kCoefficientFloor);
  // Every coefficient past k_max is under the floor, sampled densely.
  const double c0 = std::abs(t.coefficients[0]);
  const auto longer = fourier_coefficients(s.f, 8, long(kXiCap * 8));
  for (std::size_t k = t.k_max; k < longer.size(); ++k) CHECK(std::abs(longer[k]) <= kCoefficientFloor * c0 * 1.0001);
  CHECK(std::abs(longer[t.k_max - 1]) > kCoefficientFloor * c0);

  // A discontinuous f never decays: the certificate cannot be met.
  const auto box = SmoothWindow::custom("box", -1.0, 1.0, [](double u) { return std::abs(u) < 0.5 ? 1.0 : 0.0; });
  CHECK_THROWS_AS(truncate_spectrum(box, 2), TruncationFailure);
}

TEST_CASE("spectrum: zero mode, synthesis, realness") {
  const auto psi = make(8, 1e4);
  const auto spectrum = psi_spectrum(psi);
  CHECK(spectrum.certified());
  CHECK(spectrum.coeffs[0].imag() == 0.0);
  CHECK(spectrum.S0 == doctest::Approx(psi.total_weight()).epsilon(1e-15));
  const long grid = 4 * spectrum.k_max;
  const auto values = psi.on_grid(grid);
  const double mean = grid_mean(values);
  CHECK(std::abs(mean - spectrum.coeffs[0].real()) <= 1e-10 * mean);
  for (long k = 0; k <= spectrum.k_max; ++k) CHECK(std::abs(spectrum.coeffs[k]) <= std::abs(fourier_coefficient(psi.f(), 8, k)) * spectrum.S0 * (1 + 1e-9) + 1e-13 * mean);

  std::mt19937_64 rng(20240521);
  std::uniform_real_distribution<double> angle(0.0, kHalfPi);
  for (int i = 0; i < 64; ++i) {
    const double theta = angle(rng);
    CHECK(std::abs(spectrum.synthesize(theta) - psi(theta)) <= 1e-8 * mean);
  }
  // synthesize() returns the real part; the full sum is real by symmetry.
  const double theta = 0.123;
  std::complex<double> full = spectrum.coeffs[0];
  for (long k = 1; k <= spectrum.k_max; ++k) {
    full += spectrum.coeffs[k] * std::polar(1.0, -4.0 * k * theta);
    full += std::conj(spectrum.coeffs[k]) * std::polar(1.0, 4.0 * k * theta);
  }
  CHECK(std::abs(full.imag()) <= 1e-10 * mean);
}

TEST_CASE("variance: direct vs parseval, grid refinement") {
  const auto psi = make(8, 1e4);
  const auto spectrum = psi_spectrum(psi);
  const auto direct = variance_direct(psi, 4 * spectrum.k_max, spectrum.k_max);
  CHECK_FALSE(direct.aliasing_risk);
  const double parseval = variance_parseval(spectrum);
  CHECK(direct.variance > 0.0);
  CHECK(std::abs(direct.variance - parseval) <= 1e-6 * direct.variance);
  const auto finer = variance_direct(psi, 8 * spectrum.k_max, spectrum.k_max);
  CHECK(std::abs(finer.variance - direct.variance) <= 1e-9 * direct.variance);
  CHECK(variance_direct(psi, spectrum.k_max, spectrum.k_max).aliasing_risk);

  const Setup s;
  const auto zero = SmoothWindow::custom("zero", -1.0, 1.0, [](double) { return 0.0; });
  CHECK(variance_direct(8, 1e4, zero, s.phi, PsiVariant::powers, 64).variance == 0.0);
}

TEST_CASE("parseval on hand-built spectra") {
  PsiSpectrum only_mean;
  only_mean.coeffs = {{5.0, 0.0}};
  CHECK(variance_parseval(only_mean) == 0.0);
  PsiSpectrum one_mode;
  one_mode.coeffs = {{5.0, 0.0}, {0.3, -0.4}};
  one_mode.k_max = 1;
  CHECK(variance_parseval(one_mode) == doctest::Approx(2 * 0.25).epsilon(1e-15));
}

TEST_CASE("variance sweep") {
  const Setup s;
  const std::vector<double> taus{0.0, 0.4};
  const std::vector<double> xs{1e4, 3e4};
  const auto reports = variance_sweep(taus, xs, s.f, s.phi);
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].tau == 0.0);
  CHECK(reports[0].K == 1.0);
  CHECK(reports[0].ratio < 1e-6);
  CHECK(reports[1].X == 3e4);
  CHECK(reports[2].tau == 0.4);
  for (const auto& r : reports) {
    CHECK(r.var_direct >= 0.0);
    CHECK(r.var_parseval >= 0.0);
    CHECK(std::abs(r.var_direct - r.var_parseval) <=
          1e-6 * std::max(r.var_direct, r.mean_empirical * r.mean_empirical * 1e-12));
    CHECK(r.grid_size >= 4 * r.k_max);
    CHECK(r.K == doctest::Approx(std::pow(r.X, r.tau)));
    CHECK(r.ratio == doctest::Approx(r.var_direct / (r.mean_empirical * r.mean_empirical)));
    CHECK(r.prime_power_gap > 0.0);
  }
  CHECK(reports[3].ratio < reports[2].ratio);
  const auto j = to_json(reports[2]);
  for (const char* key : {"X", "K", "tau", "mean_empirical", "mean_formula", "var_direct", "var_parseval",
                          "ratio", "prime_power_gap", "grid_size", "k_max", "f", "phi", "truncation"})
    CHECK(j.contains(key));
}

TEST_CASE("prime power gap is the mean square of psi minus psi_prime") {
  const double K = 6, X = 5000;
  const auto all = make(K, X);
  const auto primes = make(K, X, PsiVariant::primes);
  const Setup s;
  const std::vector<double> taus{std::log(K) / std::log(X)};
  const std::vector<double> xs{X};
  const auto report = variance_sweep(taus, xs, s.f, s.phi).front();
  const auto a = all.on_grid(report.grid_size);
  const auto b = primes.on_grid(report.grid_size);
  double ms = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) ms += (a[j] - b[j]) * (a[j] - b[j]);
  ms /= a.size();
  CHECK(report.prime_power_gap == doctest::Approx(ms).epsilon(1e-9));
}
