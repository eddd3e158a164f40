#include "heckelab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "heckelab/errors.hpp"
#include "heckelab/summation.hpp"

namespace heckelab {

namespace {

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
  double tol;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& g, double lo, double hi,
                                  const QuadratureOptions& options) {
  QuadratureResult result;
  if (hi == lo) return result;
  const double width = hi - lo;
  const std::size_t panels = std::max<std::size_t>(1, options.initial_panels);

  std::vector<Panel> stack;
  for (std::size_t i = panels; i-- > 0;) {
    const double a = lo + width * static_cast<double>(i) / static_cast<double>(panels);
    const double b = i + 1 == panels ? hi : lo + width * static_cast<double>(i + 1) / panels;
    const double m = 0.5 * (a + b);
    Panel p{a, b, g(a), g(m), g(b), 0.0, options.abs_tol * (b - a) / width};
    p.whole = simpson(a, b, p.fa, p.fm, p.fb);
    stack.push_back(p);
  }

  CompensatedSum total;
  std::size_t live = panels;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = g(lm);
    const double frm = g(rm);
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    if (std::abs(delta) <= 15.0 * p.tol || m <= p.a || p.b <= m) {
      total.add(left + right + delta / 15.0);
      ++result.intervals;
      --live;
      continue;
    }
    if (++live > options.max_intervals)
      throw QuadratureFailure("adaptive_simpson: tolerance " + std::to_string(options.abs_tol) +
                              " not reached within " + std::to_string(options.max_intervals) +
                              " intervals");
    stack.push_back({m, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol});
    stack.push_back({p.a, m, p.fa, flm, p.fm, left, 0.5 * p.tol});
  }
  result.value = total.value();
  return result;
}

}  // namespace heckelab
