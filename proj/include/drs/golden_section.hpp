// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace drs {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section search for a unimodal function on [lo, hi]. Stops once the
/// bracket is narrower than `tolerance`; the bracket endpoints are compared
/// against the interior estimate so minima sitting on a bound are returned
/// exactly.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      double tolerance = 1e-4, int max_iterations = 500);

}  // namespace drs
