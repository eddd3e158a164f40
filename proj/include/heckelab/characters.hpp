#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "heckelab/gaussian.hpp"
#include "heckelab/windows.hpp"

namespace heckelab {

// Xi_k(a + bi) = exp(4ik theta) where theta is the Hecke angle of a + bi.
// The generator is first normalized, so all four associates give identical
// results.
std::complex<double> xi(std::int64_t a, std::int64_t b, long k);

// S_k for k = 0..k_max. S_{-k} = conj(S_k).
class CharacterSumTable {
 public:
  CharacterSumTable(double X, std::string window_id, std::vector<std::complex<double>> values);

  double X() const { return X_; }
  long k_max() const { return static_cast<long>(values_.size()) - 1; }
  const std::string& window_id() const { return window_id_; }

  // Any k in [-k_max, k_max].
  std::complex<double> operator[](long k) const;
  std::span<const std::complex<double>> values() const { return values_; }

 private:
  double X_;
  std::string window_id_;
  std::vector<std::complex<double>> values_;
};

// Weighted angles Phi(N/X) * Lambda, kept in the entries' (norm, theta) order.
struct WeightedAngles {
  std::vector<double> theta;
  std::vector<double> weight;
};

WeightedAngles weight_entries(std::span<const LambdaEntry> entries, double X,
                              const SmoothWindow& phi);

// S_k = sum over entries of Phi(N/X) * Lambda * exp(4ik theta).
std::complex<double> character_sum(long k, double X, const SmoothWindow& phi);
std::complex<double> character_sum(long k, std::span<const LambdaEntry> entries, double X,
                                   const SmoothWindow& phi);

// All S_0..S_{k_max}. Each k is summed over the same fixed entry order with
// compensated accumulation, so values do not depend on the thread count.
CharacterSumTable character_sum_table(const WeightedAngles& weighted, double X,
                                      const std::string& window_id, long k_max);
CharacterSumTable character_sum_table(std::span<const LambdaEntry> entries, double X,
                                      const SmoothWindow& phi, long k_max);

// Norm range of the entries that Phi(N/X) can see: (floor(X lo), floor(X hi)].
std::pair<std::int64_t, std::int64_t> norm_window(double X, const SmoothWindow& phi);

// sum over prime ideals with norm in (norm_min, norm_max] of exp(4ik theta).
// BadInput for k = 0.
std::complex<double> weyl_sum(long k, std::int64_t norm_min, std::int64_t norm_max,
                              EnumerationOptions options = {});
std::complex<double> weyl_sum(long k, std::span<const GaussianPrimeIdeal> ideals);

// CSV: '#' header lines carrying X, window id and k_max, then k,re,im rows.
void write_character_sum_csv(std::ostream& out, const CharacterSumTable& table);

}  // namespace heckelab
