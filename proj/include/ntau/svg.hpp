#pragma once

#include <string>
#include <vector>

#include "ntau/geometry.hpp"

namespace ntau {

/// Deterministic SVG plot: fixed viewport, coordinates mapped through the
/// bounding box of everything drawn, polygon vertices labeled. Suitable for
/// plotting hulls with astronomically large lattice coordinates (mapping is
/// relative to the bounding box).
std::string svg_plot(const PointSet& points, const std::vector<ConvexPolygon>& polygons,
                     int width = 640, int height = 480);

} // namespace ntau
