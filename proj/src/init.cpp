#include "polyeig/init.hpp"

#include <cmath>
#include <numbers>

namespace polyeig {

namespace {

void place_circle(std::vector<Complex>& out, double radius, std::size_t count, std::size_t edge) {
  const double phase = circle_phase(edge, count);
  for (std::size_t j = 0; j < count; ++j) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count) + phase;
    out.push_back(std::polar(radius, angle));
  }
}

}  // namespace

const char* to_string(InitKind kind) {
  switch (kind) {
    case InitKind::tropical_circles: return "newton";
    case InitKind::unit_circle: return "circle";
    case InitKind::uv_circles: return "uv";
  }
  return "?";
}

double circle_phase(std::size_t edge, std::size_t count) {
  const double golden = (std::sqrt(5.0) - 1) / 2;
  return 2 * std::numbers::pi * static_cast<double>(edge) * golden +
         std::numbers::pi / (2 * static_cast<double>(count));
}

std::vector<Complex> initial_points(const NewtonPolygon& polygon, std::size_t m, const InitStrategy& strategy) {
  std::vector<Complex> out;
  out.reserve(m * polygon.degree());
  if (strategy.kind == InitKind::unit_circle) {
    const double radius = strategy.radius.value_or(1.0);
    if (!(radius > 0)) throw BadInput("initial circle radius must be positive");
    place_circle(out, radius, m * polygon.degree(), 1);
    return out;
  }
  for (std::size_t e = 0; e < polygon.edges(); ++e)
    place_circle(out, polygon.radii[e], m * polygon.multiplicities[e], e + 1);
  return out;
}

std::vector<Complex> initial_points(const MatrixPolynomial& p, const InitStrategy& strategy) {
  const auto m = static_cast<std::size_t>(p.size());
  if (strategy.kind == InitKind::uv_circles) {
    try {
      const auto s = vertex_set(p);
      if (auto poly = uv_polygon(s, p.degree())) return initial_points(*poly, m, strategy);
    } catch (const EmptyVertexSet&) {
    }
  }
  if (strategy.kind == InitKind::unit_circle) {
    NewtonPolygon trivial;
    trivial.vertices = {0, p.degree()};
    return initial_points(trivial, m, strategy);
  }
  return initial_points(tropical_roots(norm_majorant(p)), m, {InitKind::tropical_circles, {}});
}

}  // namespace polyeig
