// SPDX-License-Identifier: Apache-2.0
//
// Minimal self-contained SVG 1.1 charts.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace drs::cli {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y), x ascending
};

struct Bar {
  std::string label;
  double value = 0.0;
};

std::string line_chart_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<Series>& series);

/// Each bar carries its exact value in a `data-value` attribute.
std::string bar_chart_svg(const std::string& title, const std::string& y_label, const std::vector<Bar>& bars);

}  // namespace drs::cli
