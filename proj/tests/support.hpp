#pragma once

// Test-only reference computations. Nothing here goes through the library's
// own LU, norm or QR code: determinants, SVDs and eigenvalues come from Eigen.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "polyeig/polyeig.hpp"

namespace support {

using polyeig::Complex;
using polyeig::ComplexMatrix;
using polyeig::MatrixPolynomial;

inline double svd_norm(const ComplexMatrix& a) {
  return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues()(0);
}

inline double svd_rcond(const ComplexMatrix& a) {
  const auto s = Eigen::JacobiSVD<ComplexMatrix>(a).singularValues();
  return s(s.size() - 1) / s(0);
}

inline ComplexMatrix direct_sum(const MatrixPolynomial& p, Complex x) {
  ComplexMatrix out = ComplexMatrix::Zero(p.size(), p.size());
  Complex power = 1.0;
  for (const auto& a : p.coeffs()) {
    out += power * a;
    power *= x;
  }
  return out;
}

/// Coefficients of det A(x) (degree m n) by interpolation at m n + 1 points
/// on the circle of radius rho.
inline std::vector<Complex> det_coefficients(const MatrixPolynomial& p, double rho) {
  const std::size_t d = static_cast<std::size_t>(p.size()) * p.degree();
  const std::size_t count = d + 1;
  std::vector<Complex> values(count);
  for (std::size_t j = 0; j < count; ++j) {
    const Complex z = std::polar(rho, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count));
    values[j] = direct_sum(p, z).determinant();
  }
  std::vector<Complex> c(count);
  for (std::size_t k = 0; k < count; ++k) {
    Complex sum = 0;
    for (std::size_t j = 0; j < count; ++j)
      sum += values[j] *
             std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(j * k % count) / static_cast<double>(count));
    c[k] = sum / static_cast<double>(count) / std::pow(rho, static_cast<double>(k));
  }
  return c;
}

/// Roots of a scalar polynomial (ascending coefficients) from Eigen's
/// eigenvalue solver on the companion matrix.
inline std::vector<Complex> scalar_roots(const std::vector<Complex>& c) {
  const auto d = static_cast<Eigen::Index>(c.size() - 1);
  ComplexMatrix comp = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) comp(i, i - 1) = 1;
  for (Eigen::Index i = 0; i < d; ++i) comp(i, d - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  const Eigen::ComplexEigenSolver<ComplexMatrix> es(comp, false);
  return {es.eigenvalues().data(), es.eigenvalues().data() + d};
}

/// Eigenvalues of a moderately scaled matrix polynomial from det A(x).
inline std::vector<Complex> det_roots(const MatrixPolynomial& p) {
  const double n = static_cast<double>(p.degree());
  const double rho = std::pow(svd_norm(p.coeffs().front()) / svd_norm(p.coeffs().back()), 1.0 / n);
  return scalar_roots(det_coefficients(p, rho));
}

/// Eigenvalues from Eigen's solver on the library companion (independent QR).
inline std::vector<Complex> eigen_companion_roots(const MatrixPolynomial& p) {
  const Eigen::ComplexEigenSolver<ComplexMatrix> es(polyeig::companion(p), false);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

inline std::vector<Complex> sorted_by_modulus(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  return v;
}

/// Gaussian matrix scaled to 2-norm `scale` (measured by SVD).
inline ComplexMatrix scaled_gaussian(Eigen::Index m, double scale, polyeig::SplitMix64& rng) {
  const ComplexMatrix g = polyeig::gaussian_matrix(m, m, rng);
  return (scale / svd_norm(g)) * g;
}

inline double log_uniform(polyeig::SplitMix64& rng, double lo, double hi) {
  return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * rng.uniform());
}

/// A_i = s_i G_i / |G_i| with s_i log-uniform in [lo, hi].
inline MatrixPolynomial random_polynomial(polyeig::SplitMix64& rng, Eigen::Index m, std::size_t n, double lo = 1e-3,
                                          double hi = 1e3) {
  std::vector<ComplexMatrix> c;
  for (std::size_t i = 0; i <= n; ++i) c.push_back(scaled_gaussian(m, log_uniform(rng, lo, hi), rng));
  return MatrixPolynomial::normalize(std::move(c));
}

/// A_i = sigma_i Q_i.
inline MatrixPolynomial q_class(const std::vector<double>& sigma, Eigen::Index m, std::uint64_t seed) {
  std::vector<ComplexMatrix> c;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    c.push_back(sigma[i] * polyeig::random_unitary(m, polyeig::split_seed(seed, i)));
  return MatrixPolynomial::normalize(std::move(c));
}

/// Greedy nearest matching, max |a_i - b_j| / |a_i|.
inline double matched_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<bool> used(b.size());
  double worst = 0;
  for (Complex z : sorted_by_modulus(a)) {
    std::size_t best = b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!used[j] && (best == b.size() || std::abs(z - b[j]) < std::abs(z - b[best]))) best = j;
    if (best == b.size()) return INFINITY;
    used[best] = true;
    worst = std::max(worst, std::abs(z - b[best]) / std::max(std::abs(z), 1e-300));
  }
  return worst;
}

}  // namespace support
