#include "dsrlab/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "dsrlab/errors.hpp"

namespace dsrlab {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
};

AxisRange span(const std::vector<Curve>& curves, bool y_axis, bool log_scale) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Curve& c : curves) {
    for (double v : y_axis ? c.y : c.x) {
      if (!std::isfinite(v)) continue;
      if (log_scale && v <= 0.0) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(lo <= hi)) return {0.0, 1.0};
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  return {lo, hi};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

void write_svg(const std::string& path, const std::vector<Curve>& curves,
               const PlotOptions& opt) {
  const int ml = 70, mr = 20, mt = 40, mb = 55;  // margins
  const double pw = opt.width - ml - mr;
  const double ph = opt.height - mt - mb;

  AxisRange xr = span(curves, false, false);
  AxisRange yr = span(curves, true, opt.log_y);
  if (opt.log_y) {
    yr.lo = std::log10(yr.lo);
    yr.hi = std::log10(yr.hi);
    if (yr.lo == yr.hi) {
      yr.lo -= 0.5;
      yr.hi += 0.5;
    }
  }

  auto px = [&](double x) { return ml + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) {
    const double v = opt.log_y ? std::log10(y) : y;
    return mt + ph - (v - yr.lo) / (yr.hi - yr.lo) * ph;
  };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width
    << "\" height=\"" << opt.height << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << opt.width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
    << "font-size=\"15\" font-family=\"sans-serif\">" << opt.title
    << "</text>\n";

  // axes
  s << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
    << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n"
    << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
    << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";

  const int n_ticks = 5;
  for (int i = 0; i <= n_ticks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / n_ticks;
    const double gx = px(fx);
    s << "<line x1=\"" << gx << "\" y1=\"" << mt + ph << "\" x2=\"" << gx
      << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << gx << "\" y=\"" << mt + ph + 20
      << "\" text-anchor=\"middle\" font-size=\"11\" "
         "font-family=\"sans-serif\">"
      << fmt(fx) << "</text>\n";

    const double fv = yr.lo + (yr.hi - yr.lo) * i / n_ticks;
    const double fy = opt.log_y ? std::pow(10.0, fv) : fv;
    const double gy = mt + ph - (fv - yr.lo) / (yr.hi - yr.lo) * ph;
    s << "<line x1=\"" << ml - 5 << "\" y1=\"" << gy << "\" x2=\"" << ml
      << "\" y2=\"" << gy << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << ml - 8 << "\" y=\"" << gy + 4
      << "\" text-anchor=\"end\" font-size=\"11\" "
         "font-family=\"sans-serif\">"
      << fmt(fy) << "</text>\n";
  }

  s << "<text x=\"" << ml + pw / 2 << "\" y=\"" << opt.height - 12
    << "\" text-anchor=\"middle\" font-size=\"13\" "
       "font-family=\"sans-serif\">"
    << opt.x_label << "</text>\n"
    << "<text x=\"18\" y=\"" << mt + ph / 2
    << "\" text-anchor=\"middle\" font-size=\"13\" "
       "font-family=\"sans-serif\" transform=\"rotate(-90 18 "
    << mt + ph / 2 << ")\">" << opt.y_label << "</text>\n";

  for (size_t c = 0; c < curves.size(); ++c) {
    const char* color = kPalette[c % (sizeof(kPalette) / sizeof(*kPalette))];
    s << "<polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < curves[c].x.size(); ++i) {
      const double y = curves[c].y[i];
      if (!std::isfinite(y) || (opt.log_y && y <= 0.0)) continue;
      s << px(curves[c].x[i]) << "," << py(y) << " ";
    }
    s << "\"/>\n";
    const double ly = mt + 14 + 16.0 * c;
    s << "<line x1=\"" << ml + pw - 130 << "\" y1=\"" << ly << "\" x2=\""
      << ml + pw - 108 << "\" y2=\"" << ly << "\" stroke=\"" << color
      << "\" stroke-width=\"1.5\"/>\n"
      << "<text x=\"" << ml + pw - 102 << "\" y=\"" << ly + 4
      << "\" font-size=\"11\" font-family=\"sans-serif\">" << curves[c].name
      << "</text>\n";
  }
  s << "</svg>\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("write_svg: cannot open " + path);
  out << s.str();
  if (!out) throw IoError("write_svg: write failed for " + path);
}

}  // namespace dsrlab
