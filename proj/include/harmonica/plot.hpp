#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "harmonica/criteria.hpp"

namespace harmonica {

inline constexpr int kPlotPointsPerCurve = 1024;

struct PlotOptions {
  double r = 0.5;
  int circles = 8;
  int spokes = 16;
};

/// SVG with the images of `circles` concentric circles (the outermost at r)
/// and `spokes` radial segments. The image of |z| = r is the polyline with
/// id "boundary"; coordinates are written untransformed.
std::string render_svg(const HarmonicMap& f, const PlotOptions& options);

/// Vertices of the polyline with id "boundary".
std::vector<Complex> boundary_vertices(std::string_view svg);

/// Smallest discrete d/dtheta of arg(vertex) (starlike) or of the argument of
/// the edge direction (convex) along a closed polyline sampled uniformly in theta.
double boundary_monotonicity(const std::vector<Complex>& vertices, Property property);

}  // namespace harmonica
