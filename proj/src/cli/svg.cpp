// SPDX-License-Identifier: Apache-2.0

#include "drs/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "drs/cli/report.hpp"

namespace drs::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double x) {
  std::ostringstream ss;
  ss.precision(6);
  ss << x;
  return ss.str();
}

void header(std::ostringstream& svg, const std::string& title) {
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
      << "</text>\n";
}

void axes(std::ostringstream& svg, const std::string& x_label, const std::string& y_label, double y_lo,
          double y_hi) {
  const double x0 = kLeft;
  const double y0 = kHeight - kBottom;
  svg << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << kWidth - kRight << "\" y2=\"" << y0
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << x0 << "\" y1=\"" << kTop << "\" x2=\"" << x0 << "\" y2=\"" << y0 << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n"
      << "<text x=\"16\" y=\"" << (kTop + y0) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (kTop + y0) / 2 << ")\">" << escape(y_label) << "</text>\n"
      << "<text x=\"" << x0 - 6 << "\" y=\"" << y0 << "\" text-anchor=\"end\">" << num(y_lo) << "</text>\n"
      << "<text x=\"" << x0 - 6 << "\" y=\"" << kTop + 4 << "\" text-anchor=\"end\">" << num(y_hi) << "</text>\n";
}

void legend(std::ostringstream& svg, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double y = kTop + 14.0 * i;
    svg << "<rect x=\"" << kWidth - kRight - 110 << "\" y=\"" << y - 9 << "\" width=\"10\" height=\"10\" fill=\""
        << kPalette[i % 4] << "\"/>\n"
        << "<text x=\"" << kWidth - kRight - 95 << "\" y=\"" << y << "\">" << escape(labels[i]) << "</text>\n";
  }
}

}  // namespace

std::string line_chart_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<Series>& series) {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const Series& s : series) {
    for (auto [x, y] : s.points) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!std::isfinite(x_lo)) x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  if (y_hi == y_lo) y_hi = y_lo + 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + plot_w * (x - x_lo) / (x_hi - x_lo); };
  const auto py = [&](double y) { return kHeight - kBottom - plot_h * (y - y_lo) / (y_hi - y_lo); };

  std::ostringstream svg;
  header(svg, title);
  axes(svg, x_label, y_label, y_lo, y_hi);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < series.size(); ++i) {
    labels.push_back(series[i].label);
    svg << "<polyline fill=\"none\" stroke=\"" << kPalette[i % 4] << "\" stroke-width=\"1.5\" data-series=\""
        << escape(series[i].label) << "\" points=\"";
    for (auto [x, y] : series[i].points) svg << num(px(x)) << ',' << num(py(y)) << ' ';
    svg << "\"/>\n";
  }
  legend(svg, labels);
  svg << "</svg>\n";
  return svg.str();
}

std::string bar_chart_svg(const std::string& title, const std::string& y_label, const std::vector<Bar>& bars) {
  double y_hi = 0.0;
  for (const Bar& b : bars) y_hi = std::max(y_hi, b.value);
  if (y_hi <= 0.0) y_hi = 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double slot = plot_w / std::max<std::size_t>(bars.size(), 1);

  std::ostringstream svg;
  header(svg, title);
  axes(svg, "mode", y_label, 0.0, y_hi);
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const double h = plot_h * bars[i].value / y_hi;
    const double x = kLeft + slot * i + slot * 0.2;
    svg << "<rect x=\"" << num(x) << "\" y=\"" << num(kHeight - kBottom - h) << "\" width=\"" << num(slot * 0.6)
        << "\" height=\"" << num(h) << "\" fill=\"" << kPalette[i % 4] << "\" data-label=\"" << escape(bars[i].label)
        << "\" data-value=\"" << format_number(bars[i].value) << "\"/>\n"
        << "<text x=\"" << num(x + slot * 0.3) << "\" y=\"" << kHeight - kBottom + 16
        << "\" text-anchor=\"middle\">" << escape(bars[i].label) << "</text>\n"
        << "<text x=\"" << num(x + slot * 0.3) << "\" y=\"" << num(kHeight - kBottom - h - 4)
        << "\" text-anchor=\"middle\">" << num(bars[i].value) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace drs::cli
