#include "heckelab/windows.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>

#include "heckelab/errors.hpp"
#include "heckelab/quadrature.hpp"
#include "heckelab/summation.hpp"

namespace heckelab {

namespace {

constexpr int kRampCells = 4096;

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 4> kGlNodes = {0.1834346424956498, 0.5255324099163290,
                                            0.7966664774136267, 0.9602898564975363};
constexpr std::array<double, 4> kGlWeights = {0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};

// Cubic Hermite table of the normalized running integral of the mollifier,
// reparametrized to [0, 1].
class RampTable {
 public:
  RampTable() {
    const double h = 1.0 / kRampCells;
    auto density = [](double t) { return mollifier_eval(2.0 * t - 1.0); };
    std::array<double, kRampCells + 1> cumulative{};
    CompensatedSum running;
    for (int i = 0; i < kRampCells; ++i) {
      const double mid = (i + 0.5) * h;
      double cell = 0.0;
      for (std::size_t j = 0; j < kGlNodes.size(); ++j) {
        const double dx = 0.5 * h * kGlNodes[j];
        cell += kGlWeights[j] * (density(mid - dx) + density(mid + dx));
      }
      running.add(0.5 * h * cell);
      cumulative[i + 1] = running.value();
    }
    const double total = cumulative[kRampCells];
    for (int i = 0; i <= kRampCells; ++i) {
      value_[i] = cumulative[i] / total;
      slope_[i] = density(i * h) / total;
    }
    value_[kRampCells] = 1.0;
  }

  double operator()(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double x = t * kRampCells;
    const int i = std::min(static_cast<int>(x), kRampCells - 1);
    const double s = x - i;
    const double h = 1.0 / kRampCells;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double v = (2 * s3 - 3 * s2 + 1) * value_[i] + (s3 - 2 * s2 + s) * h * slope_[i] +
                     (-2 * s3 + 3 * s2) * value_[i + 1] + (s3 - s2) * h * slope_[i + 1];
    return std::clamp(v, 0.0, 1.0);
  }

 private:
  std::array<double, kRampCells + 1> value_{};
  std::array<double, kRampCells + 1> slope_{};
};

const RampTable& ramp_table() {
  static const RampTable table;
  return table;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void check_tol(double quad_tol) {
  if (!(quad_tol > 0.0)) throw BadInput("window: quad_tol must be positive");
}

}  // namespace

std::string to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::mollifier:
      return "mollifier";
    case WindowKind::plateau_plus:
      return "plateau_plus";
    case WindowKind::plateau_minus:
      return "plateau_minus";
    case WindowKind::custom:
      return "custom";
  }
  return "?";
}

double mollifier_eval(double x) {
  if (!(std::abs(x) < 1.0)) return 0.0;
  return std::exp(-1.0 / (1.0 - x * x));
}

double smooth_ramp(double t) { return ramp_table()(t); }

SmoothWindow SmoothWindow::mollifier(double lo, double hi, double quad_tol) {
  if (!(lo < hi)) throw BadInput("mollifier: need lo < hi");
  check_tol(quad_tol);
  SmoothWindow w;
  w.kind_ = WindowKind::mollifier;
  w.lo_ = lo;
  w.hi_ = hi;
  w.quad_tol_ = quad_tol;
  if (lo == -1.0 && hi == 1.0) {
    w.eval_ = mollifier_eval;
  } else {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    w.eval_ = [center, half](double x) { return mollifier_eval((x - center) / half); };
  }
  return w;
}

namespace {

// Ramp up on [lo, lo + eps], 1 in between, ramp down on [hi - eps, hi].
std::function<double(double)> plateau_profile(double lo, double hi, double eps) {
  ramp_table();
  return [lo, hi, eps](double x) {
    if (x <= lo || x >= hi) return 0.0;
    if (x < lo + eps) return smooth_ramp((x - lo) / eps);
    if (x > hi - eps) return smooth_ramp((hi - x) / eps);
    return 1.0;
  };
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw BadEps("plateau window: eps must lie in (0, 1/2)");
}

}  // namespace

SmoothWindow SmoothWindow::plateau_plus(double a, double b, double eps, double quad_tol) {
  check_eps(eps);
  check_tol(quad_tol);
  if (!(a < b)) throw BadInput("plateau_plus: need a < b");
  SmoothWindow w;
  w.kind_ = WindowKind::plateau_plus;
  w.lo_ = a - eps;
  w.hi_ = b + eps;
  w.eps_ = eps;
  w.quad_tol_ = quad_tol;
  w.eval_ = plateau_profile(w.lo_, w.hi_, eps);
  return w;
}

SmoothWindow SmoothWindow::plateau_minus(double a, double b, double eps, double quad_tol) {
  check_eps(eps);
  check_tol(quad_tol);
  if (!(b - a > 2.0 * eps)) throw BadEps("plateau_minus: core [a + eps, b - eps] is empty");
  SmoothWindow w;
  w.kind_ = WindowKind::plateau_minus;
  w.lo_ = a;
  w.hi_ = b;
  w.eps_ = eps;
  w.quad_tol_ = quad_tol;
  w.eval_ = plateau_profile(a, b, eps);
  return w;
}

SmoothWindow SmoothWindow::custom(std::string label, double lo, double hi,
                                  std::function<double(double)> evaluator, double quad_tol) {
  if (!(lo < hi)) throw BadInput("custom window: need lo < hi");
  if (!evaluator) throw BadInput("custom window: empty evaluator");
  check_tol(quad_tol);
  SmoothWindow w;
  w.kind_ = WindowKind::custom;
  w.lo_ = lo;
  w.hi_ = hi;
  w.quad_tol_ = quad_tol;
  w.label_ = std::move(label);
  w.eval_ = [lo, hi, fn = std::move(evaluator)](double x) {
    return (x < lo || x > hi) ? 0.0 : fn(x);
  };
  return w;
}

SmoothWindow SmoothWindow::from_descriptor(const nlohmann::json& d) {
  const std::string kind = d.at("kind").get<std::string>();
  const double lo = d.at("lo").get<double>();
  const double hi = d.at("hi").get<double>();
  const double eps = d.value("eps", 0.0);
  const double tol = d.value("quad_tol", 1e-10);
  if (kind == "mollifier") return mollifier(lo, hi, tol);
  if (kind == "plateau_plus") return plateau_plus(lo + eps, hi - eps, eps, tol);
  if (kind == "plateau_minus") return plateau_minus(lo, hi, eps, tol);
  throw BadInput("window descriptor: cannot rebuild kind '" + kind + "'");
}

double SmoothWindow::operator()(double x) const { return eval_(x); }

nlohmann::json SmoothWindow::descriptor() const {
  nlohmann::json d = {{"kind", to_string(kind_)},
                      {"lo", lo_},
                      {"hi", hi_},
                      {"eps", eps_},
                      {"quad_tol", quad_tol_}};
  if (kind_ == WindowKind::custom) d["label"] = label_;
  return d;
}

std::string SmoothWindow::id() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(descriptor().dump())));
  return buf;
}

double SmoothWindow::integral() const {
  QuadratureOptions opts;
  opts.abs_tol = quad_tol_;
  return adaptive_simpson(eval_, lo_, hi_, opts).value;
}

SmoothWindow unit_plateau_plus(double eps) { return SmoothWindow::plateau_plus(0.0, 1.0, eps); }
SmoothWindow unit_plateau_minus(double eps) { return SmoothWindow::plateau_minus(0.0, 1.0, eps); }
SmoothWindow norm_plateau_plus(double eps) { return SmoothWindow::plateau_plus(1.0, 2.0, eps); }
SmoothWindow norm_plateau_minus(double eps) { return SmoothWindow::plateau_minus(1.0, 2.0, eps); }

std::complex<double> fourier_hat(const SmoothWindow& w, double xi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  QuadratureOptions opts;
  opts.abs_tol = w.quad_tol();
  const double width = w.hi() - w.lo();
  opts.initial_panels =
      std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil(4.0 * std::abs(xi) * width)));
  const double re =
      adaptive_simpson([&](double u) { return w(u) * std::cos(two_pi * u * xi); }, w.lo(), w.hi(),
                       opts)
          .value;
  if (xi == 0.0) return {re, 0.0};
  const double im =
      -adaptive_simpson([&](double u) { return w(u) * std::sin(two_pi * u * xi); }, w.lo(),
                        w.hi(), opts)
           .value;
  return {re, im};
}

std::complex<double> fourier_coefficient(const SmoothWindow& base, double K, long k) {
  if (!(K >= 1.0)) throw BadInput("fourier_coefficient: need K >= 1");
  return fourier_hat(base, static_cast<double>(k) / K) / K;
}

std::vector<std::complex<double>> fourier_coefficients(const SmoothWindow& base, double K,
                                                       long k_max) {
  if (!(K >= 1.0)) throw BadInput("fourier_coefficients: need K >= 1");
  if (k_max < 0) throw BadInput("fourier_coefficients: need k_max >= 0");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  constexpr long kAnchorEvery = 16;

  const double width = base.hi() - base.lo();
  const double xi_max = static_cast<double>(k_max) / K;
  std::size_t n = 1024;
  while (static_cast<double>(n) < 8.0 * width * std::max(xi_max, 32.0)) n *= 2;
  const double h = width / static_cast<double>(n);

  std::vector<double> u;
  std::vector<double> w;
  for (std::size_t m = 0; m <= n; ++m) {
    const double x = base.lo() + h * static_cast<double>(m);
    const double v = base(x) * ((m == 0 || m == n) ? 0.5 : 1.0);
    if (v != 0.0) {
      u.push_back(x);
      w.push_back(v);
    }
  }
  const std::size_t nodes = u.size();
  std::vector<double> pr(nodes), pi(nodes), zr(nodes), zi(nodes);
  for (std::size_t m = 0; m < nodes; ++m) {
    const double step = -two_pi * u[m] / K;
    zr[m] = std::cos(step);
    zi[m] = std::sin(step);
  }

  std::vector<std::complex<double>> out(static_cast<std::size_t>(k_max) + 1);
  for (long k = 0; k <= k_max; ++k) {
    if (k % kAnchorEvery == 0) {
      for (std::size_t m = 0; m < nodes; ++m) {
        const double phase = -two_pi * u[m] * (static_cast<double>(k) / K);
        pr[m] = w[m] * std::cos(phase);
        pi[m] = w[m] * std::sin(phase);
      }
    }
    CompensatedSum re, im;
    for (std::size_t m = 0; m < nodes; ++m) {
      re.add(pr[m]);
      im.add(pi[m]);
      const double r = pr[m] * zr[m] - pi[m] * zi[m];
      pi[m] = pr[m] * zi[m] + pi[m] * zr[m];
      pr[m] = r;
    }
    out[static_cast<std::size_t>(k)] = {h * re.value() / K, h * im.value() / K};
  }
  return out;
}

PeriodizedWindow::PeriodizedWindow(SmoothWindow base, double K) : base_(std::move(base)), K_(K) {
  if (!(K >= 1.0)) throw BadInput("PeriodizedWindow: need K >= 1");
}

double PeriodizedWindow::operator()(double theta) const {
  const double t = theta / (std::numbers::pi / 2.0);
  const double s = t - std::floor(t);
  const long j_lo = static_cast<long>(std::ceil(s - base_.hi() / K_));
  const long j_hi = static_cast<long>(std::floor(s - base_.lo() / K_));
  double sum = 0.0;
  for (long j = j_lo; j <= j_hi; ++j) sum += base_(K_ * (s - static_cast<double>(j)));
  return sum;
}

}  // namespace heckelab
