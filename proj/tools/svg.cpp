#include <algorithm>
#include <cmath>
#include <sstream>

#include "cli.hpp"
#include "toruscurv/serialization.hpp"

namespace toruscurv::cli {

namespace {

// SVG y grows downward; flip so the picture keeps the usual orientation.
Vec2 to_canvas(const Vec3& x) { return {x.x(), -x.y()}; }

}  // namespace

std::string render_projection_svg(const TorusCurveSpec& spec, int resolution, double tolerance) {
  const TrigCurve curve = build_trig_curve(spec);
  std::vector<Vec2> points;
  points.reserve(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) points.push_back(to_canvas(curve.evaluate(kTwoPi * i / resolution)));

  Vec2 lo = points.front();
  Vec2 hi = points.front();
  for (const Vec2& pt : points) {
    lo = lo.cwiseMin(pt);
    hi = hi.cwiseMax(pt);
  }
  const Vec2 extent = hi - lo;
  const Vec2 margin = 0.05 * extent;
  const Vec2 origin = lo - margin;
  const Vec2 size = extent + 2.0 * margin;
  const double diagonal = extent.norm();
  const double marker_radius = 0.015 * diagonal;
  const double stroke = 0.003 * diagonal;
  constexpr double kPixelWidth = 512.0;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_real(kPixelWidth)
      << "\" height=\"" << format_real(kPixelWidth * size.y() / size.x()) << "\" viewBox=\""
      << format_real(origin.x()) << ' ' << format_real(origin.y()) << ' ' << format_real(size.x()) << ' '
      << format_real(size.y()) << "\">\n";
  svg << "<title>(" << spec.p() << "," << spec.q() << ") torus curve, b=" << spec.tube().to_string()
      << ", projected along the axis</title>\n";

  svg << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << format_real(stroke) << "\" d=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    svg << (i == 0 ? "M" : " L") << format_real(points[i].x()) << ' ' << format_real(points[i].y());
  }
  svg << " Z\"/>\n";

  for (const auto& inflection : locate_higher_inflections(spec, kDefaultTResolution, tolerance)) {
    const Vec2 c = to_canvas(curve.evaluate(inflection.t));
    svg << "<circle cx=\"" << format_real(c.x()) << "\" cy=\"" << format_real(c.y()) << "\" r=\""
        << format_real(marker_radius) << "\" fill=\"none\" stroke=\"red\" stroke-width=\"" << format_real(stroke)
        << "\" data-order=\"" << inflection.report.order << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace toruscurv::cli
