#ifndef LIFTCOVER_SVG_HPP
#define LIFTCOVER_SVG_HPP

#include <string>
#include <vector>

#include "liftcover/lifting.hpp"

namespace liftcover {

struct PlotOptions {
  long range = 2;  // draws [-range, range]^2
  long scale = 100;  // pixels per unit
};

// Vertices of a bounded polygon in counterclockwise order; segments and
// points give two or one vertices.
std::vector<QVector> polygon_vertices(const HPolyhedron& P);

// Decimal rendering with three digits after the point, rounded half up.
std::string fixed3(const Rational& x);

// B, the spindles of R(S,B) and their W_S translates, and the points of S
// in the window. Requires a 2-d pair; deterministic output.
std::string plot_svg(const LiftingContext& ctx, PlotOptions options = {});

}  // namespace liftcover

#endif
