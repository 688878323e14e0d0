#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace adisc::svg {

// Fixed 800x800 viewport. World coordinates map linearly onto it with the
// y axis pointing up (SVG's own y axis points down).
class Canvas {
 public:
  explicit Canvas(std::array<double, 4> world) : world_(world) {}

  void polyline(const std::vector<std::array<double, 2>>& pts, const std::string& color,
                double width_px = 1.5) {
    if (pts.size() < 2) return;
    std::string d;
    for (size_t i = 0; i < pts.size(); ++i) {
      auto [x, y] = map(pts[i]);
      d += (i == 0 ? "M" : "L") + fmt(x) + " " + fmt(y);
    }
    body_ += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
             fmt(width_px) + "\"/>\n";
  }

  void segment(std::array<double, 2> a, std::array<double, 2> b, const std::string& color,
               double width_px = 1.0) {
    polyline({a, b}, color, width_px);
  }

  void circle(std::array<double, 2> center, double radius_px, const std::string& color,
              bool filled = true) {
    auto [x, y] = map(center);
    body_ += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"" + fmt(radius_px) +
             "\" " + (filled ? "fill=\"" + color + "\"" : "fill=\"none\" stroke=\"" + color + "\"") +
             "/>\n";
  }

  void rect_px(double x, double y, double w, double h, const std::string& color) {
    body_ += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(w) +
             "\" height=\"" + fmt(h) + "\" fill=\"" + color + "\"/>\n";
  }

  void cell(std::array<double, 2> lo, std::array<double, 2> hi, const std::string& color) {
    auto [x0, y0] = map({lo[0], hi[1]});
    auto [x1, y1] = map({hi[0], lo[1]});
    rect_px(x0, y0, x1 - x0, y1 - y0, color);
  }

  void text(std::array<double, 2> at, const std::string& s) {
    auto [x, y] = map(at);
    body_ += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-size=\"12\">" + s +
             "</text>\n";
  }

  void axes(const std::string& color = "#cccccc") {
    if (world_[0] < 0 && world_[2] > 0)
      segment({0, world_[1]}, {0, world_[3]}, color, 1.0);
    if (world_[1] < 0 && world_[3] > 0)
      segment({world_[0], 0}, {world_[2], 0}, color, 1.0);
  }

  std::string str() const {
    std::string head =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    return head + body_ + "</svg>\n";
  }

 private:
  std::array<double, 4> world_;
  std::string body_;

  std::array<double, 2> map(std::array<double, 2> p) const {
    double sx = 800.0 / (world_[2] - world_[0]);
    double sy = 800.0 / (world_[3] - world_[1]);
    return {(p[0] - world_[0]) * sx, 800.0 - (p[1] - world_[1]) * sy};
  }

  static std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
  }
};

}  // namespace adisc::svg
