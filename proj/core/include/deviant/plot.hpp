#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "deviant/pipeline.hpp"
#include "deviant/series.hpp"

namespace deviant {

struct PlotOptions {
  int width = 800;
  int height = 400;
  /// Draws one bar per point scaled to the largest rdd.
  bool rdd_bars = true;
  std::string title;
};

/// Standalone SVG: polyline, one `circle.point` per value, one
/// `circle.outlier` per flagged index. Output depends only on the inputs.
std::string render_svg(const Series& s, std::span<const std::size_t> outliers,
                       std::span<const double> rdd, const PlotOptions& options = {});

/// Renders and writes; throws IoError.
void render_plot(const Series& s, const DetectionResult& result, const std::string& path,
                 const PlotOptions& options = {});

}  // namespace deviant
