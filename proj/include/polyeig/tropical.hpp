#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "polyeig/matpoly.hpp"

namespace polyeig {

struct HullPoint {
  std::size_t abscissa;
  /// May be -inf (zero coefficient); such points never become vertices.
  double ordinate;
};

/// Strict upper convex hull (monotone chain) of points with increasing
/// abscissas. Returns indices into `points`; interior points on or below a
/// chord within kSlopeTolerance are dropped.
std::vector<std::size_t> upper_hull(std::span<const HullPoint> points);

/// Relative slack used when deciding whether two consecutive log-slopes
/// strictly decrease (hull vertices) or u_kappa < v_kappa (vertex set).
inline constexpr double kSlopeTolerance = 1e-12;

/// True if `left` exceeds `right` by more than kSlopeTolerance (relative).
bool strictly_greater_slope(double left, double right);

/// Upper Newton polygon of (i, log w_i): vertices k_0 = 0 < ... < k_q = n,
/// per-edge tropical roots r_1 <= ... <= r_q and multiplicities k_i - k_{i-1}.
struct NewtonPolygon {
  std::vector<std::size_t> vertices;
  std::vector<double> log_radii;
  std::vector<double> radii;
  std::vector<std::size_t> multiplicities;

  std::size_t edges() const { return radii.size(); }
  std::size_t degree() const { return vertices.empty() ? 0 : vertices.back(); }
};

NewtonPolygon tropical_roots(std::span<const double> w);
inline NewtonPolygon tropical_roots(const NormMajorant& w) { return tropical_roots(w.w); }

/// Rows `i<TAB>log_w<TAB>vertex` (vertex is 0/1), one per coefficient, with a header line.
void write_polygon_tsv(std::ostream& out, std::span<const double> w, const NewtonPolygon& polygon);

struct UVBounds {
  std::size_t kappa = 0;
  /// max_{i<kappa} |A_kappa^-1 A_i|^(1/(kappa-i)); 0 when kappa = 0.
  double u = 0;
  /// min_{i>kappa} |A_kappa^-1 A_i|^(1/(kappa-i)); +inf when kappa = n.
  double v = 0;
  double log_u = 0;
  double log_v = 0;
  /// False when A_kappa is numerically singular.
  bool defined = false;
};

UVBounds uv_bounds(const MatrixPolynomial& p, std::size_t kappa);

/// u/v from precomputed c_i = |A_kappa^-1 A_i| (see scaled_coefficient_norms).
UVBounds uv_bounds_from_norms(std::span<const double> c, std::size_t kappa);

/// All kappa with defined bounds and u_kappa < v_kappa, ascending. Throws
/// EmptyVertexSet if none qualifies and std::logic_error if the chain
/// v_{k_i} <= u_{k_{i+1}} is violated beyond 1e-9 relative.
std::vector<UVBounds> vertex_set(const MatrixPolynomial& p);

/// Polygon on the vertex set with edge radius u at the right vertex of each
/// edge. nullopt unless the vertex set spans 0..n.
std::optional<NewtonPolygon> uv_polygon(std::span<const UVBounds> vertices, std::size_t degree);

}  // namespace polyeig
