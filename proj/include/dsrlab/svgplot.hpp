#pragma once

#include <string>
#include <vector>

namespace dsrlab {

struct Curve {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  int width = 720;
  int height = 480;
};

/// Writes a self-contained SVG line plot: axes, tick labels, a legend, and
/// one polyline per curve. Throws IoError if the file cannot be written.
void write_svg(const std::string& path, const std::vector<Curve>& curves,
               const PlotOptions& options);

}  // namespace dsrlab
