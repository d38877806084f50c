#include "acyclekit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace acyclekit {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_intensity_svg(std::ostream& out, const std::vector<double>& pooled, std::size_t trials,
                         const HistogramSpec& spec) {
  const double width = 640, height = 400, left = 60, right = 20, top = 40, bottom = 50;
  const double plot_w = width - left - right, plot_h = height - top - bottom;
  const double bin_w = (spec.hi - spec.lo) / static_cast<double>(spec.bins);

  std::vector<double> density(spec.bins, 0.0);
  for (double x : pooled) {
    if (x < spec.lo || x >= spec.hi) continue;
    auto b = std::min(spec.bins - 1, static_cast<std::size_t>((x - spec.lo) / bin_w));
    density[b] += 1.0;
  }
  const double norm = static_cast<double>(std::max<std::size_t>(trials, 1)) * bin_w;
  for (double& v : density) v /= norm;

  double y_max = std::exp(-spec.lo);
  for (double v : density) y_max = std::max(y_max, v);
  y_max *= 1.05;
  auto px = [&](double x) { return left + (x - spec.lo) / (spec.hi - spec.lo) * plot_w; };
  auto py = [&](double y) { return top + plot_h - y / y_max * plot_h; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"14\">" << escape(spec.title) << "</text>\n";
  for (std::size_t b = 0; b < spec.bins; ++b) {
    double x0 = spec.lo + static_cast<double>(b) * bin_w;
    out << "<rect x=\"" << num(px(x0)) << "\" y=\"" << num(py(density[b])) << "\" width=\""
        << num(px(x0 + bin_w) - px(x0)) << "\" height=\"" << num(py(0) - py(density[b]))
        << "\" fill=\"#9ecae1\" stroke=\"#3182bd\"/>\n";
  }
  out << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
  const int samples = 200;
  for (int i = 0; i <= samples; ++i) {
    double x = spec.lo + (spec.hi - spec.lo) * i / samples;
    out << (i ? " " : "") << num(px(x)) << ',' << num(py(std::exp(-x)));
  }
  out << "\"/>\n";
  out << "<line x1=\"" << num(left) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(left + plot_w) << "\" y2=\""
      << num(py(0)) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left) << "\" y2=\"" << num(py(0))
      << "\" stroke=\"black\"/>\n";
  for (double x = std::ceil(spec.lo); x <= spec.hi; x += 1.0) {
    out << "<text x=\"" << num(px(x)) << "\" y=\"" << num(py(0) + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << num(x) << "</text>\n";
  }
  out << "<text x=\"" << num(left + plot_w / 2) << "\" y=\"" << num(height - 10)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">scaled death time</text>\n";
  out << "<text x=\"" << num(left + 8) << "\" y=\"" << num(top + 14)
      << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#d62728\">exp(-x)</text>\n";
  out << "<text x=\"14\" y=\"" << num(top + plot_h / 2) << "\" transform=\"rotate(-90 14 " << num(top + plot_h / 2)
      << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">points per unit per trial</text>\n";
  out << "</svg>\n";
}

}  // namespace acyclekit
