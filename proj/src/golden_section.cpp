// SPDX-License-Identifier: Apache-2.0

#include "drs/golden_section.hpp"

#include <cmath>
#include <stdexcept>

namespace drs {

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      double tolerance, int max_iterations) {
  if (!(lo <= hi)) throw std::invalid_argument("golden_section_minimize: lo must not exceed hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while (b - a > tolerance && it < max_iterations) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++it;
  }

  ScalarMinimum best{0.5 * (a + b), f(0.5 * (a + b)), it};
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe < best.value) best = {edge, fe, it};
  }
  return best;
}

}  // namespace drs
