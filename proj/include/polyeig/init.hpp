#pragma once

#include <optional>
#include <vector>

#include "polyeig/matpoly.hpp"
#include "polyeig/tropical.hpp"

namespace polyeig {

enum class InitKind {
  /// m * m_i points on the circle of radius r_i for each edge of the majorant's Newton polygon.
  tropical_circles,
  /// All points on one circle (radius 1 unless overridden).
  unit_circle,
  /// As tropical_circles, on the vertex-set polygon with radii u_{k_i}.
  uv_circles,
};

const char* to_string(InitKind kind);

struct InitStrategy {
  InitKind kind = InitKind::tropical_circles;
  /// Circle radius for unit_circle.
  std::optional<double> radius;
};

/// Phase of the circle for edge i holding `count` points:
/// 2 pi i (sqrt 5 - 1) / 2 + pi / (2 count).
double circle_phase(std::size_t edge, std::size_t count);

/// m * n starting points from `polygon` (which only supplies n for unit_circle).
std::vector<Complex> initial_points(const NewtonPolygon& polygon, std::size_t m, const InitStrategy& strategy);

/// Builds the polygon the strategy needs from `p` and places the points.
/// uv_circles falls back to the majorant polygon when the vertex set does not
/// span 0..n (singular A_0 or A_n).
std::vector<Complex> initial_points(const MatrixPolynomial& p, const InitStrategy& strategy);

}  // namespace polyeig
