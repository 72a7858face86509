#include "specsim/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "specsim/errors.hpp"
#include "specsim/io.hpp"

namespace specsim {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kMarginLeft = 80.0;
constexpr double kMarginRight = 170.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 60.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

void render_summary_chart(std::span<const DeviationSummary> summaries,
                          const std::filesystem::path& path,
                          std::span<const std::string> entities) {
  std::map<std::pair<std::string, std::string>,
           std::vector<std::pair<double, double>>>
      series;
  std::string axis_name = "axis";
  for (const DeviationSummary& s : summaries) {
    if (!entities.empty() &&
        std::find(entities.begin(), entities.end(), s.entity) ==
            entities.end()) {
      continue;
    }
    series[{s.policy, s.entity}].push_back(
        {s.axis_value, s.mean_deviation_mhz});
    axis_name = s.axis_name;
  }
  if (series.empty()) {
    fail(Errc::empty_table, "no summary groups to chart");
  }

  double x_min = 0.0, x_max = 0.0, y_max = 0.0;
  bool first = true;
  for (auto& [key, points] : series) {
    std::sort(points.begin(), points.end());
    for (auto [x, y] : points) {
      if (first) {
        x_min = x_max = x;
        first = false;
      }
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_max = std::max(y_max, y);
    }
  }
  if (x_max - x_min < 1e-12) {
    x_min -= 1.0;
    x_max += 1.0;
  }
  if (y_max <= 0.0) y_max = 1.0;
  y_max *= 1.05;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto sx = [&](double x) {
    return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w;
  };
  const auto sy = [&](double y) {
    return kMarginTop + plot_h - y / y_max * plot_h;
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
         " " + num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes with five ticks each.
  svg += "<g stroke=\"#333\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" +
         num(kMarginTop + plot_h) + "\" x2=\"" + num(kMarginLeft + plot_w) +
         "\" y2=\"" + num(kMarginTop + plot_h) + "\"/>\n";
  svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kMarginTop) +
         "\" x2=\"" + num(kMarginLeft) + "\" y2=\"" + num(kMarginTop + plot_h) +
         "\"/>\n";
  svg += "</g>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = x_min + (x_max - x_min) * t / 4.0;
    const double fy = y_max * t / 4.0;
    svg += "<line x1=\"" + num(sx(fx)) + "\" y1=\"" + num(kMarginTop + plot_h) +
           "\" x2=\"" + num(sx(fx)) + "\" y2=\"" +
           num(kMarginTop + plot_h + 5) + "\" stroke=\"#333\"/>\n";
    svg += "<text x=\"" + num(sx(fx)) + "\" y=\"" +
           num(kMarginTop + plot_h + 20) + "\" text-anchor=\"middle\">" +
           escape_xml(tick_label(fx)) + "</text>\n";
    svg += "<line x1=\"" + num(kMarginLeft - 5) + "\" y1=\"" + num(sy(fy)) +
           "\" x2=\"" + num(kMarginLeft) + "\" y2=\"" + num(sy(fy)) +
           "\" stroke=\"#333\"/>\n";
    svg += "<text x=\"" + num(kMarginLeft - 9) + "\" y=\"" + num(sy(fy) + 4) +
           "\" text-anchor=\"end\">" + escape_xml(tick_label(fy)) +
           "</text>\n";
  }
  svg += "<text x=\"" + num(kMarginLeft + plot_w / 2) + "\" y=\"" +
         num(kHeight - 15) + "\" text-anchor=\"middle\">" +
         escape_xml(axis_name) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + num(kMarginTop + plot_h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         num(kMarginTop + plot_h / 2) + ")\">mean deviation (MHz)</text>\n";
  svg += "</g>\n";

  std::size_t color = 0;
  double legend_y = kMarginTop + 10.0;
  for (const auto& [key, points] : series) {
    const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(char*))];
    ++color;
    if (points.size() > 1) {
      std::string poly = "<polyline fill=\"none\" stroke=\"";
      poly += stroke;
      poly += "\" stroke-width=\"2\" points=\"";
      for (auto [x, y] : points) {
        poly += num(sx(x)) + "," + num(sy(y)) + " ";
      }
      poly += "\"/>\n";
      svg += poly;
    }
    for (auto [x, y] : points) {
      svg += "<circle cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(y)) +
             "\" r=\"3.5\" fill=\"" + stroke + "\"/>\n";
    }
    const std::string label = key.first + " " + key.second;
    svg += "<line x1=\"" + num(kWidth - kMarginRight + 14) + "\" y1=\"" +
           num(legend_y - 4) + "\" x2=\"" + num(kWidth - kMarginRight + 38) +
           "\" y2=\"" + num(legend_y - 4) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\" "
           "x=\"" +
           num(kWidth - kMarginRight + 44) + "\" y=\"" + num(legend_y) + "\">" +
           escape_xml(label) + "</text>\n";
    legend_y += 18.0;
  }
  svg += "</svg>\n";
  atomic_write(path, svg);
}

}  // namespace specsim
