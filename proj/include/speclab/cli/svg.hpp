#ifndef SPECLAB_CLI_SVG_HPP
#define SPECLAB_CLI_SVG_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace speclab::cli {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Minimal self-contained SVG line plot: axes, ticks, polylines, legend.
/// Output is deterministic (fixed-precision formatting, no timestamps).
/// Nonfinite points are dropped.
void write_line_plot(const std::filesystem::path& file,
                     const std::string& title, const std::string& x_label,
                     const std::string& y_label,
                     const std::vector<PlotSeries>& series);

}  // namespace speclab::cli

#endif  // SPECLAB_CLI_SVG_HPP
