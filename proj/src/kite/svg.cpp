#include "svg.hpp"

#include <sstream>

namespace kite {

SvgWriter::SvgWriter(double xmin, double ymin, double xmax, double ymax, double scale)
    : xmin_(xmin), ymin_(ymin), xmax_(xmax), ymax_(ymax), scale_(scale) {}

void SvgWriter::add_polygon(const Polygon& p, const std::string& fill,
                            const std::string& stroke, double stroke_w) {
  std::ostringstream os;
  os << "<polygon points=\"";
  for (const auto& q : p.v) os << tx(q.x.to_double()) << "," << ty(q.y.to_double()) << " ";
  os << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
     << stroke_w << "\"/>";
  body_.push_back(os.str());
}

void SvgWriter::add_segment(double x1, double y1, double x2, double y2,
                            const std::string& stroke, double w) {
  std::ostringstream os;
  os << "<line x1=\"" << tx(x1) << "\" y1=\"" << ty(y1) << "\" x2=\"" << tx(x2)
     << "\" y2=\"" << ty(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
     << w << "\"/>";
  body_.push_back(os.str());
}

void SvgWriter::write(const std::string& path) const {
  std::ofstream f(path);
  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (xmax_ - xmin_) * scale_
    << "\" height=\"" << (ymax_ - ymin_) * scale_ << "\">\n";
  for (const auto& s : body_) f << s << "\n";
  f << "</svg>\n";
}

}  // namespace kite
