#include "harmonica/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "harmonica/error.hpp"

namespace harmonica {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr char kVersionComment[] = "<!-- harmonica 0.1.0 -->";

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string polyline(const std::vector<Complex>& pts, const std::string& attrs) {
  std::string out = "<polyline " + attrs + " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += fmt(pts[i].real()) + "," + fmt(pts[i].imag());
  }
  return out + "\"/>\n";
}

}  // namespace

std::string render_svg(const HarmonicMap& f, const PlotOptions& options) {
  if (!(options.r > 0.0 && options.r < 1.0)) throw Error(ErrorCode::radius_guard, "plot radius must lie in (0, 1)");
  if (options.circles < 1 || options.spokes < 0) throw Error(ErrorCode::invalid_argument, "plot needs circles >= 1");

  std::vector<std::vector<Complex>> circles;
  for (int c = 1; c <= options.circles; ++c) {
    const double rho = options.r * c / options.circles;
    std::vector<Complex> pts;
    pts.reserve(kPlotPointsPerCurve + 1);
    for (int k = 0; k <= kPlotPointsPerCurve; ++k)
      pts.push_back(eval(f, std::polar(rho, kTwoPi * (k % kPlotPointsPerCurve) / kPlotPointsPerCurve)));
    circles.push_back(std::move(pts));
  }
  std::vector<std::vector<Complex>> spokes;
  for (int s = 0; s < options.spokes; ++s) {
    const double theta = kTwoPi * s / options.spokes;
    std::vector<Complex> pts;
    for (int k = 0; k <= kPlotPointsPerCurve; ++k)
      pts.push_back(eval(f, std::polar(options.r * k / kPlotPointsPerCurve, theta)));
    spokes.push_back(std::move(pts));
  }

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const auto& p : circles.back()) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += std::string(kVersionComment) + "\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"" + fmt(xmin) + " " +
         fmt(-ymax) + " " + fmt(xmax - xmin) + " " + fmt(ymax - ymin) + "\">\n";
  svg += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linejoin=\"round\">\n";
  for (const auto& s : spokes) svg += polyline(s, "class=\"spoke\" stroke=\"#9aa\" vector-effect=\"non-scaling-stroke\"");
  for (std::size_t c = 0; c + 1 < circles.size(); ++c)
    svg += polyline(circles[c], "class=\"circle\" stroke=\"#468\" vector-effect=\"non-scaling-stroke\"");
  svg += polyline(circles.back(), "id=\"boundary\" stroke=\"#c22\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"");
  svg += "</g>\n</svg>\n";
  return svg;
}

std::vector<Complex> boundary_vertices(std::string_view svg) {
  const auto tag = svg.find("id=\"boundary\"");
  if (tag == std::string_view::npos) throw Error(ErrorCode::parse_error, "svg has no boundary polyline");
  const auto start = svg.find("points=\"", tag);
  if (start == std::string_view::npos) throw Error(ErrorCode::parse_error, "boundary polyline has no points");
  const auto end = svg.find('"', start + 8);
  const std::string body(svg.substr(start + 8, end - start - 8));
  std::vector<Complex> out;
  const char* p = body.c_str();
  char* next = nullptr;
  for (;;) {
    const double x = std::strtod(p, &next);
    if (next == p) break;
    if (*next != ',') throw Error(ErrorCode::parse_error, "malformed boundary point");
    p = next + 1;
    const double y = std::strtod(p, &next);
    if (next == p) throw Error(ErrorCode::parse_error, "malformed boundary point");
    out.emplace_back(x, y);
    p = next;
  }
  return out;
}

double boundary_monotonicity(const std::vector<Complex>& vertices, Property property) {
  std::vector<Complex> pts = vertices;
  if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  const std::size_t n = pts.size();
  if (n < 3) throw Error(ErrorCode::invalid_argument, "need at least three vertices");
  const double step = kTwoPi / n;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = pts[k], b = pts[(k + 1) % n], c = pts[(k + 2) % n];
    const double turn = property == Property::starlike ? std::arg(b / a) : std::arg((c - b) / (b - a));
    worst = std::min(worst, turn / step);
  }
  return worst;
}

}  // namespace harmonica
