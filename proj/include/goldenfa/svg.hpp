#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace goldenfa {

/// Static SVG charts for sweep and comparison outputs. Hand-rolled on purpose:
/// the outputs are small batch artifacts that must be byte-reproducible.
namespace svg {

struct Point {
  double x = 0.0;
  double y = 0.0;
  double y_err = 0.0;
};

struct Series {
  std::string label;
  std::vector<Point> points;
};

struct Box {
  std::string group;   // x label, e.g. "delta=4.8"
  std::string label;   // series label, e.g. "golden"
  double p5 = 0, p25 = 0, p50 = 0, p75 = 0, p95 = 0, mean = 0;
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline const char* color(std::size_t i) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  return palette[i % 8];
}

struct AxisScale {
  double lo = 0.0, hi = 1.0;
  bool log = false;
  double px0 = 0.0, px1 = 1.0;

  [[nodiscard]] double map(double v) const {
    double t;
    if (log) {
      t = (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
    } else {
      t = (v - lo) / (hi - lo);
    }
    return px0 + t * (px1 - px0);
  }

  [[nodiscard]] std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      const int e0 = static_cast<int>(std::floor(std::log10(lo)));
      const int e1 = static_cast<int>(std::ceil(std::log10(hi)));
      for (int e = e0; e <= e1; ++e) {
        const double v = std::pow(10.0, e);
        if (v >= lo * 0.999 && v <= hi * 1.001) out.push_back(v);
      }
      if (out.size() < 2) out = {lo, hi};
    } else {
      const double span = hi - lo;
      const double raw = span / 5.0;
      const double mag = std::pow(10.0, std::floor(std::log10(raw)));
      double step = mag;
      for (double m : {1.0, 2.0, 5.0, 10.0})
        if (raw <= m * mag) {
          step = m * mag;
          break;
        }
      for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step)
        out.push_back(v);
    }
    return out;
  }
};

inline void expand(double v, double& lo, double& hi) {
  lo = std::min(lo, v);
  hi = std::max(hi, v);
}

}  // namespace detail

/// Mean +/- std line chart. `manifest_ref` is embedded as a comment so the
/// artifact names the manifest that produced it.
inline std::string line_plot(const std::vector<Series>& series, const std::string& title,
                             const std::string& x_label, const std::string& y_label,
                             bool log_x = false, bool log_y = false,
                             const std::string& manifest_ref = "") {
  const double width = 720, height = 480;
  const double ml = 72, mr = 160, mt = 48, mb = 56;

  double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
  for (const auto& s : series)
    for (const auto& p : s.points) {
      detail::expand(p.x, x_lo, x_hi);
      detail::expand(p.y - p.y_err, y_lo, y_hi);
      detail::expand(p.y + p.y_err, y_lo, y_hi);
    }
  if (x_lo > x_hi) {
    x_lo = 0;
    x_hi = 1;
    y_lo = 0;
    y_hi = 1;
  }
  if (x_lo == x_hi) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  if (y_lo == y_hi) {
    y_lo -= 0.5;
    y_hi += 0.5;
  }
  if (log_y) y_lo = std::max(y_lo, 1e-12);
  if (log_x) x_lo = std::max(x_lo, 1e-12);
  if (!log_y) {
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;
  }

  detail::AxisScale xs{x_lo, x_hi, log_x, ml, width - mr};
  detail::AxisScale ys{y_lo, y_hi, log_y, height - mb, mt};

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::num(width) +
         "\" height=\"" + detail::num(height) + "\">\n";
  if (!manifest_ref.empty()) out += "<!-- produced by manifest: " + manifest_ref + " -->\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + detail::num(width / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";

  for (double t : xs.ticks()) {
    const double px = xs.map(t);
    out += "<line x1=\"" + detail::num(px) + "\" y1=\"" + detail::num(height - mb) + "\" x2=\"" +
           detail::num(px) + "\" y2=\"" + detail::num(mt) + "\" stroke=\"#eeeeee\"/>\n";
    out += "<text x=\"" + detail::num(px) + "\" y=\"" + detail::num(height - mb + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           detail::num(t) + "</text>\n";
  }
  for (double t : ys.ticks()) {
    const double py = ys.map(t);
    out += "<line x1=\"" + detail::num(ml) + "\" y1=\"" + detail::num(py) + "\" x2=\"" +
           detail::num(width - mr) + "\" y2=\"" + detail::num(py) + "\" stroke=\"#eeeeee\"/>\n";
    out += "<text x=\"" + detail::num(ml - 6) + "\" y=\"" + detail::num(py + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           detail::num(t) + "</text>\n";
  }
  out += "<rect x=\"" + detail::num(ml) + "\" y=\"" + detail::num(mt) + "\" width=\"" +
         detail::num(width - ml - mr) + "\" height=\"" + detail::num(height - mt - mb) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";
  out += "<text x=\"" + detail::num((ml + width - mr) / 2) + "\" y=\"" +
         detail::num(height - 12) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">" + x_label + "</text>\n";
  out += "<text x=\"18\" y=\"" + detail::num((mt + height - mb) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " + detail::num((mt + height - mb) / 2) + ")\">" +
         y_label + "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* col = detail::color(i);
    std::string path;
    for (const auto& p : series[i].points) {
      path += path.empty() ? "M" : " L";
      path += detail::num(xs.map(p.x)) + " " + detail::num(ys.map(p.y));
    }
    out += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + col + "\" stroke-width=\"1.5\"/>\n";
    for (const auto& p : series[i].points) {
      const double px = xs.map(p.x);
      const double py = ys.map(p.y);
      if (p.y_err > 0.0) {
        const double ylo = ys.map(log_y ? std::max(p.y - p.y_err, y_lo) : p.y - p.y_err);
        const double yhi = ys.map(p.y + p.y_err);
        out += "<line x1=\"" + detail::num(px) + "\" y1=\"" + detail::num(ylo) + "\" x2=\"" +
               detail::num(px) + "\" y2=\"" + detail::num(yhi) + "\" stroke=\"" + col + "\"/>\n";
        for (double yy : {ylo, yhi})
          out += "<line x1=\"" + detail::num(px - 3) + "\" y1=\"" + detail::num(yy) + "\" x2=\"" +
                 detail::num(px + 3) + "\" y2=\"" + detail::num(yy) + "\" stroke=\"" + col + "\"/>\n";
      }
      out += "<circle cx=\"" + detail::num(px) + "\" cy=\"" + detail::num(py) +
             "\" r=\"3\" fill=\"" + col + "\"/>\n";
    }
    const double ly = mt + 16 + 18 * static_cast<double>(i);
    out += "<line x1=\"" + detail::num(width - mr + 10) + "\" y1=\"" + detail::num(ly - 4) +
           "\" x2=\"" + detail::num(width - mr + 34) + "\" y2=\"" + detail::num(ly - 4) +
           "\" stroke=\"" + col + "\" stroke-width=\"1.5\"/>\n";
    out += "<text x=\"" + detail::num(width - mr + 40) + "\" y=\"" + detail::num(ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + series[i].label + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

/// Grouped box plot (p5/p25/p50/p75/p95 whisker boxes with a mean tick).
inline std::string box_plot(const std::vector<Box>& boxes, const std::string& title,
                            const std::string& y_label, bool log_y = false,
                            const std::string& manifest_ref = "") {
  const double width = 720, height = 480;
  const double ml = 72, mr = 160, mt = 48, mb = 72;

  std::vector<std::string> groups, labels;
  for (const auto& b : boxes) {
    if (std::find(groups.begin(), groups.end(), b.group) == groups.end()) groups.push_back(b.group);
    if (std::find(labels.begin(), labels.end(), b.label) == labels.end()) labels.push_back(b.label);
  }
  double y_lo = 1e300, y_hi = -1e300;
  for (const auto& b : boxes) {
    detail::expand(b.p5, y_lo, y_hi);
    detail::expand(b.p95, y_lo, y_hi);
    detail::expand(b.mean, y_lo, y_hi);
  }
  if (y_lo > y_hi) {
    y_lo = 0;
    y_hi = 1;
  }
  if (log_y) y_lo = std::max(y_lo, 1e-12);
  if (!log_y) {
    const double pad = 0.05 * (y_hi - y_lo + 1e-30);
    y_lo -= pad;
    y_hi += pad;
  }
  if (y_lo == y_hi) {
    y_lo -= 0.5;
    y_hi += 0.5;
  }
  detail::AxisScale ys{y_lo, y_hi, log_y, height - mb, mt};

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::num(width) +
         "\" height=\"" + detail::num(height) + "\">\n";
  if (!manifest_ref.empty()) out += "<!-- produced by manifest: " + manifest_ref + " -->\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + detail::num(width / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";
  for (double t : ys.ticks()) {
    const double py = ys.map(t);
    out += "<line x1=\"" + detail::num(ml) + "\" y1=\"" + detail::num(py) + "\" x2=\"" +
           detail::num(width - mr) + "\" y2=\"" + detail::num(py) + "\" stroke=\"#eeeeee\"/>\n";
    out += "<text x=\"" + detail::num(ml - 6) + "\" y=\"" + detail::num(py + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           detail::num(t) + "</text>\n";
  }
  out += "<rect x=\"" + detail::num(ml) + "\" y=\"" + detail::num(mt) + "\" width=\"" +
         detail::num(width - ml - mr) + "\" height=\"" + detail::num(height - mt - mb) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";
  out += "<text x=\"18\" y=\"" + detail::num((mt + height - mb) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " + detail::num((mt + height - mb) / 2) + ")\">" +
         y_label + "</text>\n";

  const double plot_w = width - ml - mr;
  const double group_w = plot_w / static_cast<double>(groups.size());
  const double box_w = std::min(28.0, group_w / (static_cast<double>(labels.size()) + 1.0));
  for (const auto& b : boxes) {
    const auto gi = static_cast<double>(
        std::find(groups.begin(), groups.end(), b.group) - groups.begin());
    const auto li = static_cast<std::size_t>(
        std::find(labels.begin(), labels.end(), b.label) - labels.begin());
    const char* col = detail::color(li);
    const double slot = ml + group_w * (gi + 0.5);
    const double cx = slot + (static_cast<double>(li) - (static_cast<double>(labels.size()) - 1) / 2.0) *
                                 (box_w + 6.0);
    const double y5 = ys.map(b.p5), y25 = ys.map(b.p25), y50 = ys.map(b.p50),
                 y75 = ys.map(b.p75), y95 = ys.map(b.p95), ymean = ys.map(b.mean);
    out += "<line x1=\"" + detail::num(cx) + "\" y1=\"" + detail::num(y5) + "\" x2=\"" +
           detail::num(cx) + "\" y2=\"" + detail::num(y95) + "\" stroke=\"" + col + "\"/>\n";
    out += "<rect x=\"" + detail::num(cx - box_w / 2) + "\" y=\"" + detail::num(y75) +
           "\" width=\"" + detail::num(box_w) + "\" height=\"" + detail::num(y25 - y75) +
           "\" fill=\"" + col + "\" fill-opacity=\"0.25\" stroke=\"" + col + "\"/>\n";
    out += "<line x1=\"" + detail::num(cx - box_w / 2) + "\" y1=\"" + detail::num(y50) +
           "\" x2=\"" + detail::num(cx + box_w / 2) + "\" y2=\"" + detail::num(y50) +
           "\" stroke=\"" + col + "\" stroke-width=\"2\"/>\n";
    out += "<path d=\"M" + detail::num(cx) + " " + detail::num(ymean - 4) + " L" +
           detail::num(cx - 4) + " " + detail::num(ymean + 3) + " L" + detail::num(cx + 4) + " " +
           detail::num(ymean + 3) + " Z\" fill=\"" + col + "\"/>\n";
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double cx = ml + group_w * (static_cast<double>(g) + 0.5);
    out += "<text x=\"" + detail::num(cx) + "\" y=\"" + detail::num(height - mb + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + groups[g] +
           "</text>\n";
  }
  for (std::size_t li = 0; li < labels.size(); ++li) {
    const double ly = mt + 16 + 18 * static_cast<double>(li);
    out += "<rect x=\"" + detail::num(width - mr + 10) + "\" y=\"" + detail::num(ly - 10) +
           "\" width=\"12\" height=\"12\" fill=\"" + std::string(detail::color(li)) +
           "\" fill-opacity=\"0.4\"/>\n";
    out += "<text x=\"" + detail::num(width - mr + 28) + "\" y=\"" + detail::num(ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + labels[li] + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace svg
}  // namespace goldenfa
