#include "deviant/plot.hpp"

#include <algorithm>
#include <cstdio>

#include "deviant/error.hpp"
#include "deviant/io.hpp"

namespace deviant {

namespace {

constexpr double kMargin = 40.0;

void append(std::string& out, const char* fmt, auto... args) {
  char buf[256];
  const int n = std::snprintf(buf, sizeof buf, fmt, args...);
  out.append(buf, static_cast<std::size_t>(std::max(n, 0)));
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Series& s, std::span<const std::size_t> outliers,
                       std::span<const double> rdd, const PlotOptions& options) {
  const double w = options.width;
  const double h = options.height;
  const double plot_w = w - 2 * kMargin;
  const double plot_h = h - 2 * kMargin;
  const std::size_t n = s.size();
  const double span_y = s.max() - s.min();

  auto px = [&](std::size_t i) {
    return n > 1 ? kMargin + plot_w * static_cast<double>(i) / static_cast<double>(n - 1)
                 : kMargin + plot_w / 2;
  };
  auto py = [&](double v) {
    return span_y > 0 ? kMargin + plot_h * (1.0 - (v - s.min()) / span_y) : kMargin + plot_h / 2;
  };

  std::string out;
  append(out,
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
         "viewBox=\"0 0 %d %d\">\n",
         options.width, options.height, options.width, options.height);
  out += "<style>.series{fill:none;stroke:#336;stroke-width:1.5}"
         ".point{fill:#336}.outlier{fill:none;stroke:#c22;stroke-width:2}"
         ".rdd-bar{fill:#e8a33d;fill-opacity:0.35}</style>\n";
  append(out, "<rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"#fff\"/>\n",
         options.width, options.height);
  if (!options.title.empty()) {
    append(out, "<text x=\"%.2f\" y=\"24\" font-size=\"14\" font-family=\"sans-serif\">",
           kMargin);
    out += escape(options.title) + "</text>\n";
  }

  if (options.rdd_bars && rdd.size() == n && n > 0) {
    const double top = *std::max_element(rdd.begin(), rdd.end());
    const double bar_w = std::max(1.0, plot_w / static_cast<double>(n) * 0.6);
    out += "<g class=\"rdd\">\n";
    for (std::size_t i = 0; i < n; ++i) {
      const double bh = top > 0 ? plot_h * std::max(rdd[i], 0.0) / top : 0.0;
      append(out,
             "<rect class=\"rdd-bar\" x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\"/>\n",
             px(i) - bar_w / 2, kMargin + plot_h - bh, bar_w, bh);
    }
    out += "</g>\n";
  }

  out += "<polyline class=\"series\" points=\"";
  for (std::size_t i = 0; i < n; ++i) append(out, i ? " %.2f,%.2f" : "%.2f,%.2f", px(i), py(s[i]));
  out += "\"/>\n";

  for (std::size_t i = 0; i < n; ++i)
    append(out, "<circle class=\"point\" cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\"/>\n", px(i), py(s[i]));

  std::vector<std::size_t> flagged(outliers.begin(), outliers.end());
  std::sort(flagged.begin(), flagged.end());
  flagged.erase(std::unique(flagged.begin(), flagged.end()), flagged.end());
  for (auto i : flagged) {
    if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "outlier index out of range", i);
    append(out, "<circle class=\"outlier\" cx=\"%.2f\" cy=\"%.2f\" r=\"6\"/>\n", px(i),
           py(s[i]));
  }
  out += "</svg>\n";
  return out;
}

void render_plot(const Series& s, const DetectionResult& result, const std::string& path,
                 const PlotOptions& options) {
  write_file(path, render_svg(s, result.outliers, result.rdd.rdd, options));
}

}  // namespace deviant
