#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "geom2.hpp"

namespace kite {

// Minimal deterministic SVG writer for polygon pictures.
class SvgWriter {
 public:
  SvgWriter(double xmin, double ymin, double xmax, double ymax, double scale = 400);
  void add_polygon(const Polygon& p, const std::string& fill,
                   const std::string& stroke = "black", double stroke_w = 0.5);
  void add_segment(double x1, double y1, double x2, double y2,
                   const std::string& stroke, double w = 0.5);
  void write(const std::string& path) const;

 private:
  double xmin_, ymin_, xmax_, ymax_, scale_;
  std::vector<std::string> body_;
  double tx(double x) const { return (x - xmin_) * scale_; }
  double ty(double y) const { return (ymax_ - y) * scale_; }
};

}  // namespace kite
