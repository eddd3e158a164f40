#include "heckelab/characters.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "heckelab/errors.hpp"
#include "heckelab/parallel.hpp"
#include "heckelab/summation.hpp"

namespace heckelab {

std::complex<double> xi(std::int64_t a, std::int64_t b, long k) {
  if (a == 0 && b == 0) throw BadInput("xi: (0, 0) generates no ideal");
  if (k == 0) return {1.0, 0.0};
  return std::polar(1.0, 4.0 * static_cast<double>(k) * hecke_angle(a, b));
}

CharacterSumTable::CharacterSumTable(double X, std::string window_id,
                                     std::vector<std::complex<double>> values)
    : X_(X), window_id_(std::move(window_id)), values_(std::move(values)) {
  if (values_.empty()) throw BadInput("CharacterSumTable: need at least S_0");
}

std::complex<double> CharacterSumTable::operator[](long k) const {
  const long m = k < 0 ? -k : k;
  if (m > k_max()) throw BadInput("CharacterSumTable: |k| exceeds k_max");
  const auto v = values_[static_cast<std::size_t>(m)];
  return k < 0 ? std::conj(v) : v;
}

std::pair<std::int64_t, std::int64_t> norm_window(double X, const SmoothWindow& phi) {
  if (!(X >= 2.0)) throw BadInput("character sums: need X >= 2");
  if (!(phi.lo() >= 0.0)) throw BadInput("character sums: Phi must be supported in (0, inf)");
  const auto lo = static_cast<std::int64_t>(std::floor(X * phi.lo()));
  const auto hi = static_cast<std::int64_t>(std::floor(X * phi.hi()));
  return {lo, hi};
}

WeightedAngles weight_entries(std::span<const LambdaEntry> entries, double X,
                              const SmoothWindow& phi) {
  WeightedAngles out;
  out.theta.reserve(entries.size());
  out.weight.reserve(entries.size());
  for (const auto& e : entries) {
    const double v = phi(static_cast<double>(e.norm) / X);
    if (v == 0.0) continue;
    out.theta.push_back(e.theta);
    out.weight.push_back(v * e.weight);
  }
  return out;
}

std::complex<double> character_sum(long k, std::span<const LambdaEntry> entries, double X,
                                   const SmoothWindow& phi) {
  CompensatedComplexSum sum;
  for (const auto& e : entries) {
    const double v = phi(static_cast<double>(e.norm) / X);
    if (v == 0.0) continue;
    sum.add(std::polar(v * e.weight, 4.0 * static_cast<double>(k) * e.theta));
  }
  return sum.value();
}

std::complex<double> character_sum(long k, double X, const SmoothWindow& phi) {
  const auto [lo, hi] = norm_window(X, phi);
  const auto entries = lambda_entries(lo, hi);
  return character_sum(k, entries, X, phi);
}

namespace {

constexpr long kAnchorEvery = 256;
constexpr std::size_t kLanes = 8;

// Sum of q over the entries, entry j feeding lane j % kLanes; lanes are merged
// in order. The partition is fixed, so the result is reproducible.
struct LaneSums {
  std::array<double, kLanes> s{}, c{};

  void add(std::size_t lane, double x) {
    const double t = s[lane] + x;
    const double bp = t - s[lane];
    c[lane] += (s[lane] - (t - bp)) + (x - bp);
    s[lane] = t;
  }

  double value() const {
    CompensatedSum total;
    for (std::size_t l = 0; l < kLanes; ++l) total.add(s[l]);
    for (std::size_t l = 0; l < kLanes; ++l) total.add(c[l]);
    return total.value();
  }
};

void sum_block(const WeightedAngles& wa, const std::vector<double>& zr,
               const std::vector<double>& zi, long k0, long k1,
               std::vector<std::complex<double>>& out) {
  const std::size_t n = wa.theta.size();
  std::vector<double> qr(n), qi(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double phase = 4.0 * static_cast<double>(k0) * wa.theta[j];
    qr[j] = wa.weight[j] * std::cos(phase);
    qi[j] = wa.weight[j] * std::sin(phase);
  }
  const std::size_t full = n - n % kLanes;
  for (long k = k0; k < k1; ++k) {
    LaneSums re, im;
    for (std::size_t j = 0; j < full; j += kLanes) {
      for (std::size_t l = 0; l < kLanes; ++l) {
        const std::size_t i = j + l;
        re.add(l, qr[i]);
        im.add(l, qi[i]);
        const double r = qr[i] * zr[i] - qi[i] * zi[i];
        qi[i] = qr[i] * zi[i] + qi[i] * zr[i];
        qr[i] = r;
      }
    }
    for (std::size_t i = full; i < n; ++i) {
      re.add(i - full, qr[i]);
      im.add(i - full, qi[i]);
      const double r = qr[i] * zr[i] - qi[i] * zi[i];
      qi[i] = qr[i] * zi[i] + qi[i] * zr[i];
      qr[i] = r;
    }
    out[static_cast<std::size_t>(k)] = {re.value(), im.value()};
  }
}

}  // namespace

CharacterSumTable character_sum_table(const WeightedAngles& wa, double X,
                                      const std::string& window_id, long k_max) {
  if (k_max < 0) throw BadInput("character_sum_table: need k_max >= 0");
  const std::size_t n = wa.theta.size();
  std::vector<double> zr(n), zi(n);
  for (std::size_t j = 0; j < n; ++j) {
    zr[j] = std::cos(4.0 * wa.theta[j]);
    zi[j] = std::sin(4.0 * wa.theta[j]);
  }
  std::vector<std::complex<double>> values(static_cast<std::size_t>(k_max) + 1);
  const auto blocks = static_cast<std::size_t>(k_max / kAnchorEvery + 1);
  parallel_for(blocks, 1, [&](std::size_t b0, std::size_t b1) {
    for (std::size_t b = b0; b < b1; ++b) {
      const long k0 = static_cast<long>(b) * kAnchorEvery;
      const long k1 = std::min(k_max + 1, k0 + kAnchorEvery);
      sum_block(wa, zr, zi, k0, k1, values);
    }
  });
  values[0] = {values[0].real(), 0.0};
  return CharacterSumTable(X, window_id, std::move(values));
}

CharacterSumTable character_sum_table(std::span<const LambdaEntry> entries, double X,
                                      const SmoothWindow& phi, long k_max) {
  return character_sum_table(weight_entries(entries, X, phi), X, phi.id(), k_max);
}

std::complex<double> weyl_sum(long k, std::span<const GaussianPrimeIdeal> ideals) {
  if (k == 0) throw BadInput("weyl_sum: k = 0 is the ideal count");
  CompensatedComplexSum sum;
  for (const auto& g : ideals) sum.add(std::polar(1.0, 4.0 * static_cast<double>(k) * g.theta));
  return sum.value();
}

std::complex<double> weyl_sum(long k, std::int64_t norm_min, std::int64_t norm_max,
                              EnumerationOptions options) {
  if (k == 0) throw BadInput("weyl_sum: k = 0 is the ideal count");
  const auto ideals = enumerate_prime_ideals(norm_min, norm_max, options);
  return weyl_sum(k, ideals);
}

void write_character_sum_csv(std::ostream& out, const CharacterSumTable& table) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g", table.X());
  out << "# X=" << buf << '\n';
  out << "# window_id=" << table.window_id() << '\n';
  out << "# k_max=" << table.k_max() << '\n';
  out << "k,re,im\n";
  long k = 0;
  for (const auto& v : table.values()) {
    std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g", k++, v.real(), v.imag());
    out << buf << '\n';
  }
}

}  // namespace heckelab
