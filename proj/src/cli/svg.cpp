#include "speclab/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace speclab::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 615.0;
constexpr double kTop = 45.0;
constexpr double kBottom = 370.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

std::string fmt(double value, const char* spec = "%.2f") {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), spec, value);
  return buffer;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finalize() {
    if (!(lo <= hi)) {  // no finite data at all
      lo = 0.0;
      hi = 1.0;
    }
    if (lo == hi) {  // degenerate span: pad symmetrically
      const double pad = std::max(1.0, std::abs(lo));
      lo -= 0.5 * pad;
      hi += 0.5 * pad;
    } else {
      const double pad = 0.05 * (hi - lo);
      lo -= pad;
      hi += pad;
    }
  }
  double fraction(double v) const { return (v - lo) / (hi - lo); }
};

}  // namespace

void write_line_plot(const std::filesystem::path& file,
                     const std::string& title, const std::string& x_label,
                     const std::string& y_label,
                     const std::vector<PlotSeries>& series) {
  Range xr, yr;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) {
      throw std::invalid_argument("plot: series '" + s.label +
                                  "' has mismatched x/y lengths");
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
        xr.include(s.x[i]);
        yr.include(s.y[i]);
      }
    }
  }
  xr.finalize();
  yr.finalize();

  const auto px = [&](double x) {
    return kLeft + xr.fraction(x) * (kRight - kLeft);
  };
  const auto py = [&](double y) {
    return kBottom - yr.fraction(y) * (kBottom - kTop);
  };

  std::ofstream out(file);
  if (!out) {
    throw std::invalid_argument("cannot write '" + file.string() + "'");
  }
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2
      << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\" "
         "font-family=\"sans-serif\">"
      << title << "</text>\n";

  // Grid and ticks: five divisions per axis.
  for (int i = 0; i <= 4; ++i) {
    const double fx = static_cast<double>(i) / 4.0;
    const double gx = kLeft + fx * (kRight - kLeft);
    const double gy = kBottom - fx * (kBottom - kTop);
    const double xv = xr.lo + fx * (xr.hi - xr.lo);
    const double yv = yr.lo + fx * (yr.hi - yr.lo);
    out << "<line x1=\"" << fmt(gx) << "\" y1=\"" << kTop << "\" x2=\""
        << fmt(gx) << "\" y2=\"" << kBottom
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(gy) << "\" x2=\""
        << kRight << "\" y2=\"" << fmt(gy)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt(gx) << "\" y=\"" << kBottom + 18
        << "\" text-anchor=\"middle\" font-size=\"11\" "
           "font-family=\"sans-serif\">"
        << fmt(xv, "%.4g") << "</text>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(gy + 4)
        << "\" text-anchor=\"end\" font-size=\"11\" "
           "font-family=\"sans-serif\">"
        << fmt(yv, "%.4g") << "</text>\n";
  }
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\""
      << kRight << "\" y2=\"" << kBottom
      << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kBottom << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kHeight - 8
      << "\" text-anchor=\"middle\" font-size=\"12\" "
         "font-family=\"sans-serif\">"
      << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << (kTop + kBottom) / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" "
         "font-family=\"sans-serif\" transform=\"rotate(-90 16 "
      << (kTop + kBottom) / 2 << ")\">" << y_label << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(*kPalette))];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < series[s].x.size(); ++i) {
      const double x = series[s].x[i];
      const double y = series[s].y[i];
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      out << fmt(px(x)) << "," << fmt(py(y)) << " ";
    }
    out << "\"/>\n";
    // markers help when the ladder has only a handful of points
    for (std::size_t i = 0; i < series[s].x.size(); ++i) {
      const double x = series[s].x[i];
      const double y = series[s].y[i];
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      out << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = kTop + 16.0 * static_cast<double>(s);
    out << "<rect x=\"" << kRight - 150 << "\" y=\"" << fmt(ly - 9)
        << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
    out << "<text x=\"" << kRight - 135 << "\" y=\"" << fmt(ly)
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << series[s].label
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace speclab::cli
