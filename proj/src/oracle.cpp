#include "polyeig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace polyeig {

namespace {

void balance(ComplexMatrix& a) {
  constexpr double radix = 2.0;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0, r = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0 || r == 0) continue;
      const double s = c + r;
      double f = 1;
      double g = r / radix;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

void to_hessenberg(ComplexMatrix& h) {
  const Eigen::Index n = h.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index len = n - k - 1;
    ComplexVector v = h.col(k).tail(len);
    const double norm_x = v.norm();
    if (norm_x == 0) continue;
    const Complex phase = std::abs(v(0)) > 0 ? v(0) / std::abs(v(0)) : Complex(1.0);
    v(0) += phase * norm_x;
    const double nv = v.norm();
    if (nv == 0) continue;
    v /= nv;
    // H <- (I - 2 v v^*) H (I - 2 v v^*) on the trailing rows / columns.
    const Eigen::Matrix<Complex, 1, Eigen::Dynamic> row = v.adjoint() * h.bottomRows(len);
    h.bottomRows(len) -= 2.0 * v * row;
    const ComplexVector col = h.rightCols(len) * v;
    h.rightCols(len) -= 2.0 * col * v.adjoint();
    h.col(k).tail(len - 1).setZero();
  }
}

struct Givens {
  double c;
  Complex s;
};

// Rotation with [c s; -conj(s) c] [a; b] = [r; 0].
Givens make_givens(Complex a, Complex b) {
  const double abs_a = std::abs(a);
  const double abs_b = std::abs(b);
  const double nrm = std::hypot(abs_a, abs_b);
  if (nrm == 0) return {1.0, Complex(0.0)};
  if (abs_a == 0) return {0.0, std::conj(b) / abs_b};
  const Complex alpha = a / abs_a;
  return {abs_a / nrm, alpha * std::conj(b) / nrm};
}

Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  const Complex half = 0.5 * (a - d);
  const Complex disc = std::sqrt(half * half + b * c);
  const Complex mid = 0.5 * (a + d);
  const Complex mu1 = mid + disc;
  const Complex mu2 = mid - disc;
  return std::abs(mu1 - d) <= std::abs(mu2 - d) ? mu1 : mu2;
}

}  // namespace

ComplexMatrix companion(const MatrixPolynomial& p) {
  const Eigen::Index m = p.size();
  const auto n = static_cast<Eigen::Index>(p.degree());
  if (n == 0) throw DegenerateInput("companion: constant polynomial");
  const auto lead = lu_factor(p.coeffs().back());
  if (lead.singular) throw SingularLeading("companion: leading coefficient is singular (try reversing the polynomial)");

  ComplexMatrix c = ComplexMatrix::Zero(m * n, m * n);
  for (Eigen::Index k = 0; k + 1 < n; ++k) c.block((k + 1) * m, k * m, m, m).setIdentity();
  for (Eigen::Index k = 0; k < n; ++k)
    c.block(k * m, (n - 1) * m, m, m) = -lu_solve(lead, p.coeff(static_cast<std::size_t>(k)));
  return c;
}

std::vector<Complex> dense_eigenvalues(const ComplexMatrix& input) {
  if (input.rows() != input.cols()) throw BadInput("dense_eigenvalues: matrix is not square");
  const Eigen::Index n = input.rows();
  if (n > kOracleMaxSize) throw SizeLimit("dense_eigenvalues: matrix larger than " + std::to_string(kOracleMaxSize));
  if (!input.allFinite()) throw BadInput("dense_eigenvalues: non-finite entries");

  ComplexMatrix h = input;
  balance(h);
  to_hessenberg(h);
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  constexpr double tol = 1e-14;

  std::vector<Complex> eig(static_cast<std::size_t>(n));
  Eigen::Index hi = n - 1;
  int iterations = 0;
  while (hi >= 0) {
    Eigen::Index lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      if (sub <= tol * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo))) || sub <= tiny) {
        h(lo, lo - 1) = 0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[static_cast<std::size_t>(hi)] = h(hi, hi);
      --hi;
      iterations = 0;
      continue;
    }
    if (++iterations > 100 * n) throw QRNoConvergence("dense_eigenvalues: QR iteration did not converge");

    Complex mu;
    if (iterations % 10 == 0) {
      // Exceptional shift to break cycles.
      const double e = std::abs(h(hi, hi - 1)) + (hi - 1 > lo ? std::abs(h(hi - 1, hi - 2)) : 0.0);
      mu = h(hi, hi) + Complex(0.75 * e, 0.4375 * e);
    } else {
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    const Eigen::Index len = hi - lo + 1;
    auto win = h.block(lo, lo, len, len);
    win.diagonal().array() -= mu;
    std::vector<Givens> rot(static_cast<std::size_t>(len - 1));
    for (Eigen::Index k = 0; k + 1 < len; ++k) {
      const Givens g = make_givens(win(k, k), win(k + 1, k));
      rot[static_cast<std::size_t>(k)] = g;
      for (Eigen::Index j = k; j < len; ++j) {
        const Complex x = win(k, j), y = win(k + 1, j);
        win(k, j) = g.c * x + g.s * y;
        win(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (Eigen::Index k = 0; k + 1 < len; ++k) {
      const Givens g = rot[static_cast<std::size_t>(k)];
      for (Eigen::Index i = 0; i <= std::min(k + 1, len - 1); ++i) {
        const Complex x = win(i, k), y = win(i, k + 1);
        win(i, k) = x * g.c + y * std::conj(g.s);
        win(i, k + 1) = -x * g.s + y * g.c;
      }
    }
    win.diagonal().array() += mu;
  }
  return eig;
}

std::vector<Complex> oracle_eigenvalues(const MatrixPolynomial& p) {
  auto eig = dense_eigenvalues(companion(p));
  const std::size_t zeros = static_cast<std::size_t>(p.size()) * p.stripped_power();
  eig.insert(eig.end(), zeros, Complex(0.0));
  std::sort(eig.begin(), eig.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  return eig;
}

std::size_t count_in_annulus(const std::vector<Complex>& eigs, double inner, double outer, double guard) {
  if (inner > outer) throw BadInput("count_in_annulus: inner radius exceeds outer radius");
  const double lo = inner * (1 - guard);
  const double hi = outer * (1 + guard);
  return static_cast<std::size_t>(std::count_if(eigs.begin(), eigs.end(), [&](Complex z) {
    const double r = std::abs(z);
    return r >= lo && r <= hi;
  }));
}

double max_matched_relative_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw BadInput("max_matched_relative_distance: sizes differ");
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  pairs.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) pairs.emplace_back(std::abs(a[i] - b[j]), i, j);
  std::sort(pairs.begin(), pairs.end());
  std::vector<bool> used_a(a.size()), used_b(b.size());
  double worst = 0;
  for (const auto& [dist, i, j] : pairs) {
    if (used_a[i] || used_b[j]) continue;
    used_a[i] = used_b[j] = true;
    worst = std::max(worst, dist / std::max(std::abs(a[i]), std::numeric_limits<double>::min()));
  }
  return worst;
}

}  // namespace polyeig
