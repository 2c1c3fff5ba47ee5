#include "flopkit/lattice/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "flopkit/core/error.hpp"
#include "flopkit/lattice/chamber.hpp"

namespace flopkit {

namespace {

constexpr double kCenter = 250.0;
constexpr double kRadius = 220.0;

struct Point {
  double x, y;
};

// Screen coordinates: lattice x to the right, lattice y upwards.
Point screen(double x, double y) {
  double n = std::hypot(x, y);
  return {kCenter + kRadius * x / n, kCenter - kRadius * y / n};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string emit_cone_svg(int k) {
  if (k < 1) throw PreconditionError("emit_cone_svg: k must be at least 1");
  std::vector<Point> rays;
  for (int i = -k; i <= k; ++i) {
    LatticeClass r = chamber_ray(i);
    rays.push_back(screen(r.x.get_d(), r.y.get_d()));
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n";
  out << "  <rect width=\"500\" height=\"500\" fill=\"white\"/>\n";
  for (int c = 0; c < 2 * k; ++c) {
    const Point& a = rays[c];
    const Point& b = rays[c + 1];
    const int model = c - k;
    out << "  <polygon points=\"" << fmt(kCenter) << ',' << fmt(kCenter) << ' ' << fmt(a.x) << ',' << fmt(a.y) << ' '
        << fmt(b.x) << ',' << fmt(b.y) << "\" fill=\"" << (model % 2 == 0 ? "#c6dbef" : "#fdd0a2")
        << "\" stroke=\"none\"/>\n";
    Point mid = {(kCenter + a.x + b.x) / 3.0, (kCenter + a.y + b.y) / 3.0};
    out << "  <text x=\"" << fmt(mid.x) << "\" y=\"" << fmt(mid.y)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << model_label(model) << "</text>\n";
  }
  for (int i = -k; i <= k; ++i) {
    const Point& p = rays[i + k];
    LatticeClass r = chamber_ray(i);
    out << "  <line x1=\"" << fmt(kCenter) << "\" y1=\"" << fmt(kCenter) << "\" x2=\"" << fmt(p.x) << "\" y2=\""
        << fmt(p.y) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y) << "\" font-size=\"9\">" << to_string(r.x) << "g"
        << (r.y < 0 ? "" : "+") << to_string(r.y) << "t</text>\n";
  }
  // Isotropic rays g - (3 - sqrt 6) tau and (3 + sqrt 6) tau - g.
  const double s6 = std::sqrt(6.0);
  for (Point p : {screen(1.0, -(3.0 - s6)), screen(-1.0, 3.0 + s6)})
    out << "  <line x1=\"" << fmt(kCenter) << "\" y1=\"" << fmt(kCenter) << "\" x2=\"" << fmt(p.x) << "\" y2=\""
        << fmt(p.y) << "\" stroke=\"red\" stroke-dasharray=\"4 3\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace flopkit
