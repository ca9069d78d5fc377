#include "svg_chart.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "costlab/error.hpp"

namespace costlab::tools {

namespace {

constexpr std::array<const char*, 8> kSeriesColors = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string sweep_svg(const SweepResult& sweep, int width, int height) {
  if (sweep.rows.empty()) fail(errc::empty_grid, "cannot chart an empty sweep");

  const double margin_left = 70, margin_right = 20, margin_top = 40, margin_bottom = 50;
  const double plot_w = width - margin_left - margin_right;
  const double plot_h = height - margin_top - margin_bottom;

  double x_lo = std::log10(static_cast<double>(sweep.rows.front().n));
  double x_hi = std::log10(static_cast<double>(sweep.rows.back().n));
  if (x_hi <= x_lo) x_hi = x_lo + 1;
  double y_lo = 1e300, y_hi = -1e300;
  for (const SweepRow& row : sweep.rows)
    for (double c : row.costs)
      if (c > 0) {
        y_lo = std::min(y_lo, std::log10(c));
        y_hi = std::max(y_hi, std::log10(c));
      }
  if (y_hi <= y_lo) y_hi = y_lo + 1;

  auto x_at = [&](double log_n) { return margin_left + (log_n - x_lo) / (x_hi - x_lo) * plot_w; };
  auto y_at = [&](double log_c) {
    return margin_top + plot_h - (log_c - y_lo) / (y_hi - y_lo) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\""
      << " font-size=\"15\">" << sweep.scenario << ": theoretical cost vs n (log-log)</text>\n";

  // Axes box and decade gridlines.
  svg << "<rect x=\"" << num(margin_left) << "\" y=\"" << num(margin_top) << "\" width=\""
      << num(plot_w) << "\" height=\"" << num(plot_h)
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  for (int d = static_cast<int>(std::ceil(x_lo)); d <= static_cast<int>(std::floor(x_hi)); ++d) {
    const double x = x_at(d);
    svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(margin_top) << "\" x2=\"" << num(x)
        << "\" y2=\"" << num(margin_top + plot_h) << "\" stroke=\"#ddd\"/>\n"
        << "<text x=\"" << num(x) << "\" y=\"" << num(margin_top + plot_h + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">1e" << d
        << "</text>\n";
  }
  for (int d = static_cast<int>(std::ceil(y_lo)); d <= static_cast<int>(std::floor(y_hi)); ++d) {
    const double y = y_at(d);
    svg << "<line x1=\"" << num(margin_left) << "\" y1=\"" << num(y) << "\" x2=\""
        << num(margin_left + plot_w) << "\" y2=\"" << num(y) << "\" stroke=\"#ddd\"/>\n"
        << "<text x=\"" << num(margin_left - 6) << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e" << d
        << "</text>\n";
  }
  svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 10
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">vertices n</text>\n";

  for (std::size_t s = 0; s < sweep.model_ids.size(); ++s) {
    svg << "<polyline fill=\"none\" stroke=\"" << kSeriesColors[s % kSeriesColors.size()]
        << "\" stroke-width=\"1.5\" points=\"";
    for (const SweepRow& row : sweep.rows) {
      const double c = row.costs[s];
      if (!(c > 0)) continue;
      svg << num(x_at(std::log10(static_cast<double>(row.n)))) << ','
          << num(y_at(std::log10(c))) << ' ';
    }
    svg << "\"/>\n";
    const double legend_y = margin_top + 16 + 16 * static_cast<double>(s);
    svg << "<line x1=\"" << num(margin_left + 10) << "\" y1=\"" << num(legend_y - 4) << "\" x2=\""
        << num(margin_left + 34) << "\" y2=\"" << num(legend_y - 4) << "\" stroke=\""
        << kSeriesColors[s % kSeriesColors.size()] << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << num(margin_left + 40) << "\" y=\"" << num(legend_y)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << sweep.model_ids[s] << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace costlab::tools
