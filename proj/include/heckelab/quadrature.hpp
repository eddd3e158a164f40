#pragma once

#include <cstddef>
#include <functional>

namespace heckelab {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  std::size_t max_intervals = std::size_t{1} << 20;
  // Number of equal panels the interval is split into before adapting;
  // oscillatory integrands need at least a few panels per period.
  std::size_t initial_panels = 8;
};

struct QuadratureResult {
  double value = 0.0;
  std::size_t intervals = 0;
};

// Adaptive Simpson with Richardson correction. Throws QuadratureFailure when
// the tolerance cannot be met within max_intervals subintervals.
QuadratureResult adaptive_simpson(const std::function<double(double)>& g, double lo, double hi,
                                  const QuadratureOptions& options = {});

}  // namespace heckelab
