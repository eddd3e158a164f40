// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "heckelab/characters.hpp"
#include "heckelab/gaussian.hpp"
#include "heckelab/real_quadratic.hpp"
#include "heckelab/run.hpp"
#include "heckelab/sectors.hpp"
#include "heckelab/sieve.hpp"
#include "heckelab/smoothed_variance.hpp"
#include "heckelab/windows.hpp"
#include "oracles.hpp"

using namespace heckelab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

std::string list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt("%.4g", v[i]);
  return s + "]";
}

const SmoothWindow& f_window() {
  static const SmoothWindow f = SmoothWindow::mollifier();
  return f;
}
const SmoothWindow& phi_window() {
  static const SmoothWindow phi = norm_plateau_plus(0.05);
  return phi;
}

SmoothedCount smoothed(double K, double X) {
  const auto [lo, hi] = norm_window(X, phi_window());
  const auto entries = lambda_entries(lo, hi);
  return SmoothedCount(entries, K, X, f_window(), phi_window(), PsiVariant::powers);
}

// Shared by 7 and 8.
const std::vector<VarianceReport>& sweep(double* elapsed = nullptr) {
  static double took = 0.0;
  static const std::vector<VarianceReport> reports = [] {
    const auto t0 = Clock::now();
    const std::vector<double> taus{0.2, 0.4, 0.55};
    const std::vector<double> xs{1e4, 1e5, 1e6};
    auto r = variance_sweep(taus, xs, f_window(), phi_window());
    took = seconds_since(t0);
    return r;
  }();
  if (elapsed) *elapsed = took;
  return reports;
}

Outcome enumeration_oracle() {
  const auto t0 = Clock::now();
  const auto got = enumerate_prime_ideals(1, 10000);
  const double took = seconds_since(t0);
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> a, b;
  for (const auto& g : got) a.insert({g.norm, g.a, g.b});
  for (const auto& g : oracle::gaussian_scan(1, 10000)) b.insert({g.norm, g.a, g.b});
  const bool same = a == b && a.size() == got.size();
  return {same && took < 5.0,
          std::to_string(got.size()) + " ideals, oracle " + std::to_string(b.size()) + ", " +
              fmt("%.3f s", took)};
}

Outcome cornacchia_oracle() {
  const auto primes = sieve_rational_primes(9999);
  const auto t0 = Clock::now();
  std::vector<std::pair<std::int64_t, std::int64_t>> got;
  for (auto p : primes)
    if (p % 4 == 1) got.push_back(cornacchia(p));
  const double took = seconds_since(t0);
  std::size_t i = 0, bad = 0;
  for (auto p : primes)
    if (p % 4 == 1) bad += got[i++] != oracle::two_squares(p);
  return {bad == 0 && took < 1.0,
          std::to_string(got.size()) + " primes, " + std::to_string(bad) + " mismatches, " +
              fmt("%.4f s", took)};
}

Outcome conjugate_angles() {
  const auto t0 = Clock::now();
  const auto ideals = enumerate_prime_ideals(0, 1'000'000, {.include_nonsplit = false});
  double worst = 0.0;
  std::size_t pairs = 0;
  bool paired = true;
  for (std::size_t i = 0; i + 1 < ideals.size(); i += 2) {
    paired = paired && ideals[i].p == ideals[i + 1].p;
    worst = std::max(worst, std::abs(ideals[i].theta + ideals[i + 1].theta - kHalfPi));
    ++pairs;
  }
  const double took = seconds_since(t0);
  return {paired && ideals.size() % 2 == 0 && worst < 1e-12 && took < 30.0,
          std::to_string(pairs) + " pairs, max |sum - pi/2| = " + fmt("%.3g", worst) + ", " +
              fmt("%.2f s", took)};
}

Outcome parseval() {
  const auto t0 = Clock::now();
  std::string detail;
  bool ok = true;
  for (const auto& [X, K] : {std::pair{1e4, 8.0}, std::pair{1e5, 32.0}}) {
    const auto psi = smoothed(K, X);
    const auto spectrum = psi_spectrum(psi);
    const auto direct = variance_direct(psi, 4 * spectrum.k_max, spectrum.k_max);
    const double rel = std::abs(direct.variance - variance_parseval(spectrum)) / direct.variance;
    ok = ok && rel < 1e-6 && !direct.aliasing_risk && spectrum.certified();
    detail += "X=" + fmt("%.0e", X) + " K=" + fmt("%.0f", K) + " rel " + fmt("%.2e", rel) + "; ";
  }
  const double took = seconds_since(t0);
  return {ok && took < 60.0, detail + fmt("%.2f s", took)};
}

Outcome synthesis() {
  const auto t0 = Clock::now();
  const auto psi = smoothed(8, 1e4);
  const auto spectrum = psi_spectrum(psi);
  const double mean = spectrum.coeffs[0].real();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, kHalfPi);
  double worst = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double theta = angle(rng);
    worst = std::max(worst, std::abs(spectrum.synthesize(theta) - psi(theta)) / mean);
  }
  const double took = seconds_since(t0);
  return {worst <= 1e-8 && took < 30.0,
          "max |synth - direct| / mean = " + fmt("%.2e", worst) + ", k_max " +
              std::to_string(spectrum.k_max) + ", " + fmt("%.2f s", took)};
}

Outcome mean_formula_check() {
  std::vector<double> gaps;
  for (double X : {1e4, 1e5, 1e6}) {
    const double K = std::pow(X, 0.3);
    const auto psi = smoothed(K, X);
    const auto t = truncate_spectrum(f_window(), K);
    const auto grid = psi.on_grid(std::max(4 * t.k_max, 64L));
    double mean = 0.0;
    for (double v : grid) mean += v;
    mean /= grid.size();
    const double formula = mean_formula(K, X, f_window(), phi_window());
    gaps.push_back(std::abs(mean - formula) / formula);
  }
  const bool tolerances = gaps[1] <= 0.10 && gaps[2] <= 0.05;
  const bool decreasing = strictly_decreasing(gaps);
  std::string detail = "relative gaps at X=1e4,1e5,1e6: " + list(gaps) + "; tolerances " +
                       (tolerances ? "met" : "missed") + ", gap " +
                       (decreasing ? "decreasing" : "not decreasing");
  return {tolerances && decreasing, detail};
}

Outcome variance_decay() {
  double took = 0.0;
  const auto& reports = sweep(&took);
  bool ok = true;
  std::string detail;
  for (std::size_t t = 0; t < 3; ++t) {
    std::vector<double> ratios;
    for (std::size_t x = 0; x < 3; ++x) ratios.push_back(reports[3 * t + x].ratio);
    ok = ok && strictly_decreasing(ratios);
    detail += "tau=" + fmt("%.2f", reports[3 * t].tau) + " " + list(ratios) + "; ";
  }
  return {ok && took < 600.0, detail + fmt("%.1f s", took)};
}

Outcome prime_power_gap() {
  const auto& reports = sweep();
  std::vector<double> gaps;
  for (std::size_t x = 0; x < 3; ++x) {
    const auto& r = reports[3 + x];
    gaps.push_back(r.prime_power_gap / (r.mean_empirical * r.mean_empirical));
  }
  return {strictly_decreasing(gaps), "tau=0.40 gap/mean^2 " + list(gaps)};
}

Outcome almost_all_sectors() {
  const std::vector<double> deltas{0.5};
  std::vector<double> fractions;
  bool flat = true;
  for (double X : {1e4, 1e5, 1e6}) {
    fractions.push_back(sector_scan(X, 0.3, 1024, deltas).exceptional_fraction.at(0.5));
    flat = flat && sector_scan(X, 0.0, 1024, deltas).exceptional_fraction.at(0.5) == 0.0;
  }
  bool nonincreasing = true;
  for (std::size_t i = 1; i < fractions.size(); ++i) nonincreasing = nonincreasing && fractions[i] <= fractions[i - 1];
  return {nonincreasing && flat,
          "rho=0.3 fraction(0.5) " + list(fractions) + "; rho=0 all zero: " + (flat ? "yes" : "no")};
}

Outcome forbidden() {
  const auto t0 = Clock::now();
  const auto r = forbidden_region_check(1'000'000);
  const double took = seconds_since(t0);
  return {r.min_angle > 1.0 / 2000.0 && took < 30.0,
          "min angle " + fmt("%.6g", r.min_angle) + " at p=" + std::to_string(r.witness.p) +
              ", bound 5e-4, " + fmt("%.2f s", took)};
}

Outcome unsmoothing_bracket() {
  const double X = 1e5, K = 50, eps = 0.05;
  const auto phi_plus = norm_plateau_plus(eps);
  const auto phi_minus = norm_plateau_minus(eps);
  const auto [lo, hi] = norm_window(X, phi_plus);
  const auto entries = lambda_entries(lo, hi);
  const SmoothedCount upper(entries, K, X, unit_plateau_plus(eps), phi_plus, PsiVariant::primes);
  const SmoothedCount lower(entries, K, X, unit_plateau_minus(eps), phi_minus, PsiVariant::primes);
  const AngleSet set(enumerate_prime_ideals(std::int64_t(X), std::int64_t(2 * X)));
  const double gamma = kHalfPi / K;
  int violations = 0;
  double tightest = 1e300;
  for (int j = 0; j < 128; ++j) {
    const double beta = j * kHalfPi / 128;
    const double count = double(set.count(beta, gamma));
    // psi(theta) weighs theta_a - theta; the sector starts at beta.
    const double up = upper(beta) / std::log(X * (1 - eps));
    const double down = lower(beta) / std::log(2 * X * (1 + eps));
    violations += !(down <= count && count <= up);
    tightest = std::min({tightest, count - down, up - count});
  }
  return {violations == 0,
          std::to_string(violations) + " violations over 128 offsets, smallest margin " + fmt("%.3g", tightest)};
}

Outcome real_quadratic() {
  const auto t0 = Clock::now();
  std::size_t solved = 0, bad = 0;
  for (auto p : sieve_rational_primes(100000)) {
    if (p % 8 != 1 && p % 8 != 7) continue;
    const auto s = realquad::solve_norm_equation(p, realquad::Solver::fast);
    bad += s.a * s.a - 2 * s.b * s.b != s.sign * p;
    ++solved;
  }
  std::vector<std::vector<double>> mags(3);
  for (std::int64_t limit : {1000, 10000, 100000}) {
    const auto report = realquad::equidistribution_report_real(limit, 3, realquad::Solver::fast);
    for (long k = 1; k <= 3; ++k) mags[k - 1].push_back(std::abs(report.at(k)));
  }
  const double fast_time = seconds_since(t0);

  const auto t1 = Clock::now();
  for (auto p : sieve_rational_primes(100000)) {
    if (p % 8 != 1 && p % 8 != 7) continue;
    const auto s = realquad::solve_norm_equation(p, realquad::Solver::brute_force);
    bad += s.a * s.a - 2 * s.b * s.b != s.sign * p;
  }
  const double brute_time = seconds_since(t1);

  bool decreasing = true;
  std::string detail = std::to_string(solved) + " primes solved, " + std::to_string(bad) + " bad; ";
  for (int k = 0; k < 3; ++k) {
    decreasing = decreasing && strictly_decreasing(mags[k]);
    detail += "k=" + std::to_string(k + 1) + " " + list(mags[k]) + "; ";
  }
  detail += fmt("fast %.2f s, ", fast_time) + fmt("brute force %.2f s", brute_time);
  return {bad == 0 && decreasing && fast_time < 60.0 && brute_time < 600.0, detail};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "heckelab_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<ExperimentConfig> configs;
  ExperimentConfig c;
  c.command = Command::sieve;
  c.x = 1e4;
  configs.push_back(c);
  c.command = Command::sectors;
  c.x = 1e5;
  c.grid_size = 1024;
  configs.push_back(c);
  c.command = Command::weyl;
  configs.push_back(c);
  c.command = Command::forbidden;
  c.x = 1e6;
  configs.push_back(c);
  c.command = Command::realquad;
  c.limit = 100000;
  configs.push_back(c);
  c.command = Command::variance;
  c.x_list = {1e4, 1e5};
  c.tau_list = {0.2, 0.4};
  c.dump_sums = true;
  configs.push_back(c);

  int differing = 0;
  std::ostringstream log;
  for (auto& cfg : configs) {
    std::string runs[2];
    for (int round = 0; round < 2; ++round) {
      // The second run uses a different worker count.
      setenv("HECKELAB_THREADS", round ? "3" : "1", 1);
      cfg.output_path = (dir / (to_string(cfg.command) + std::to_string(round))).string();
      if (run(cfg, log) != kExitOk) return {false, to_string(cfg.command) + " failed: " + log.str()};
      for (const char* ext : {".csv", ".json"})
        if (std::filesystem::exists(cfg.output_path + ext)) runs[round] += slurp(cfg.output_path + ext);
    }
    differing += runs[0].empty() || runs[0] != runs[1];
  }
  unsetenv("HECKELAB_THREADS");
  std::filesystem::remove_all(dir);
  return {differing == 0, std::to_string(configs.size()) + " commands, " + std::to_string(differing) +
                              " with differing bytes (threads 1 vs 3)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"enumeration equals the 2D scan oracle up to 1e4", enumeration_oracle},
      {"cornacchia equals brute force below 1e4", cornacchia_oracle},
      {"conjugate angles sum to pi/2 below 1e6", conjugate_angles},
      {"direct variance equals Parseval", parseval},
      {"spectral synthesis equals direct psi", synthesis},
      {"grid mean against (X/K) int f int Phi, K = X^0.3", mean_formula_check},
      {"Var/mean^2 strictly decreasing in X", variance_decay},
      {"prime power gap / mean^2 decreasing in X", prime_power_gap},
      {"exceptional sector fraction nonincreasing", almost_all_sectors},
      {"forbidden region below norm 1e6", forbidden},
      {"plateau brackets around raw sector counts", unsmoothing_bracket},
      {"Q(sqrt 2) norm equation and Weyl decay", real_quadratic},
      {"byte-identical reruns", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("AC%-2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
