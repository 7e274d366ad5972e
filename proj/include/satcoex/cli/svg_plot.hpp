#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satcoex::cli {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

// Static line chart with axes, ticks and a legend.
void write_svg(std::ostream& out, const Plot& plot);

}  // namespace satcoex::cli
