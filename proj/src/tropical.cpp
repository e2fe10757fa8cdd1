#include "polyeig/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace polyeig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double slope(const HullPoint& a, const HullPoint& b) {
  return (b.ordinate - a.ordinate) / static_cast<double>(b.abscissa - a.abscissa);
}

}  // namespace

bool strictly_greater_slope(double left, double right) {
  if (!std::isfinite(left) || !std::isfinite(right)) return left > right;
  return left - right > kSlopeTolerance * (1.0 + std::max(std::abs(left), std::abs(right)));
}

std::vector<std::size_t> upper_hull(std::span<const HullPoint> points) {
  if (points.size() < 2) throw DegenerateInput("upper hull needs at least two points");
  if (!std::isfinite(points.front().ordinate) || !std::isfinite(points.back().ordinate))
    throw BadInput("upper hull: first and last ordinates must be finite");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].abscissa <= points[i - 1].abscissa) throw BadInput("upper hull: abscissas must increase");

  std::vector<std::size_t> hull;
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    if (points[idx].ordinate == -kInf) continue;
    while (hull.size() >= 2) {
      const HullPoint& a = points[hull[hull.size() - 2]];
      const HullPoint& b = points[hull.back()];
      if (strictly_greater_slope(slope(a, b), slope(b, points[idx]))) break;
      hull.pop_back();
    }
    hull.push_back(idx);
  }
  return hull;
}

NewtonPolygon tropical_roots(std::span<const double> w) {
  std::vector<HullPoint> pts;
  pts.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] >= 0.0) || !std::isfinite(w[i])) throw BadInput("majorant coefficients must be finite and nonnegative");
    pts.push_back({i, w[i] > 0.0 ? std::log(w[i]) : -kInf});
  }
  if (!w.empty() && (w.front() == 0.0 || w.back() == 0.0))
    throw BadInput("majorant must have nonzero first and last coefficients");

  NewtonPolygon poly;
  poly.vertices = upper_hull(pts);
  for (std::size_t e = 1; e < poly.vertices.size(); ++e) {
    const auto& a = pts[poly.vertices[e - 1]];
    const auto& b = pts[poly.vertices[e]];
    const double log_r = -slope(a, b);
    poly.log_radii.push_back(log_r);
    poly.radii.push_back(std::exp(log_r));
    poly.multiplicities.push_back(b.abscissa - a.abscissa);
  }
  return poly;
}

void write_polygon_tsv(std::ostream& out, std::span<const double> w, const NewtonPolygon& polygon) {
  out << "i\tlog_w\tvertex\n";
  std::size_t next = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool vertex = next < polygon.vertices.size() && polygon.vertices[next] == i;
    if (vertex) ++next;
    out << i << '\t';
    if (w[i] > 0.0)
      out << std::log(w[i]);
    else
      out << "-inf";
    out << '\t' << (vertex ? 1 : 0) << '\n';
  }
}

UVBounds uv_bounds_from_norms(std::span<const double> c, std::size_t kappa) {
  UVBounds b;
  b.kappa = kappa;
  b.defined = true;
  b.log_u = -kInf;
  b.log_v = kInf;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == kappa || c[i] <= 0.0) continue;
    const double exponent = std::log(c[i]) / (static_cast<double>(kappa) - static_cast<double>(i));
    if (i < kappa)
      b.log_u = std::max(b.log_u, exponent);
    else
      b.log_v = std::min(b.log_v, exponent);
  }
  b.u = std::exp(b.log_u);
  b.v = std::exp(b.log_v);
  return b;
}

UVBounds uv_bounds(const MatrixPolynomial& p, std::size_t kappa) {
  if (kappa > p.degree()) throw BadInput("uv_bounds: kappa exceeds degree");
  const auto c = scaled_coefficient_norms(p, kappa);
  if (!c) {
    UVBounds b;
    b.kappa = kappa;
    return b;
  }
  return uv_bounds_from_norms(*c, kappa);
}

std::vector<UVBounds> vertex_set(const MatrixPolynomial& p) {
  std::vector<UVBounds> s;
  for (std::size_t k = 0; k <= p.degree(); ++k) {
    const UVBounds b = uv_bounds(p, k);
    if (b.defined && strictly_greater_slope(-b.log_u, -b.log_v)) s.push_back(b);
  }
  if (s.empty()) throw EmptyVertexSet("no coefficient index satisfies u < v");
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].log_v > s[i + 1].log_u + 1e-9)
      throw std::logic_error("vertex set chain v_k <= u_next violated at kappa=" + std::to_string(s[i].kappa));
  }
  return s;
}

std::optional<NewtonPolygon> uv_polygon(std::span<const UVBounds> vertices, std::size_t degree) {
  if (vertices.empty() || vertices.front().kappa != 0 || vertices.back().kappa != degree) return std::nullopt;
  NewtonPolygon poly;
  poly.vertices.push_back(0);
  for (std::size_t e = 1; e < vertices.size(); ++e) {
    poly.vertices.push_back(vertices[e].kappa);
    poly.log_radii.push_back(vertices[e].log_u);
    poly.radii.push_back(vertices[e].u);
    poly.multiplicities.push_back(vertices[e].kappa - vertices[e - 1].kappa);
  }
  return poly;
}

}  // namespace polyeig
