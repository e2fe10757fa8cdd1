#pragma once

// Dense complex kernels: partial-pivoting LU, 2-norm by power iteration,
// reciprocal condition numbers and seeded random unitary matrices.
//
// Everything here is templated on the real scalar type and accepts any Eigen
// expression, so `spectral_norm(a * b)` or `lu_factor(x * c1 - c0)` work
// without materialising temporaries at the call site.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "polyeig/errors.hpp"

namespace polyeig {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;

/// A pivot is treated as zero when |pivot| <= kPivotTolerance * max|a_ij|.
inline constexpr double kPivotTolerance = 1e-14;

/// Power-iteration controls for spectral_norm.
inline constexpr double kNormTolerance = 1e-12;
inline constexpr int kNormMaxSweeps = 2000;

template <typename Real>
struct LUFactors {
  /// Unit-lower L strictly below the diagonal, U on and above it.
  CMatrix<Real> lu;
  /// Row i of P*A is row perm[i] of A.
  std::vector<Eigen::Index> perm;
  int perm_sign = 1;
  bool singular = false;
  /// sum log|u_ii|, or -inf when the singular flag is set.
  Real log_abs_det = 0;

  Eigen::Index size() const { return lu.rows(); }

  CMatrix<Real> lower() const {
    CMatrix<Real> l = lu.template triangularView<Eigen::StrictlyLower>();
    l.diagonal().setOnes();
    return l;
  }
  CMatrix<Real> upper() const { return lu.template triangularView<Eigen::Upper>(); }

  /// Applies the row permutation to `a`, i.e. returns P*a.
  template <typename Derived>
  CMatrix<Real> permute(const Eigen::MatrixBase<Derived>& a) const {
    CMatrix<Real> out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) out.row(i) = a.row(perm[i]).template cast<std::complex<Real>>();
    return out;
  }
};

template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

template <typename Derived>
LUFactors<RealOf<Derived>> lu_factor(const Eigen::MatrixBase<Derived>& a) {
  using Real = RealOf<Derived>;
  if (a.rows() != a.cols()) throw BadInput("lu_factor: matrix is not square");

  LUFactors<Real> f;
  const Eigen::Index n = a.rows();
  f.lu = a.template cast<std::complex<Real>>();
  f.perm.resize(static_cast<std::size_t>(n));
  std::iota(f.perm.begin(), f.perm.end(), Eigen::Index{0});

  const Real scale = n > 0 ? f.lu.cwiseAbs().maxCoeff() : Real(0);
  const Real threshold = static_cast<Real>(kPivotTolerance) * scale;

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    f.lu.col(k).tail(n - k).cwiseAbs().maxCoeff(&p);
    p += k;
    if (p != k) {
      f.lu.row(k).swap(f.lu.row(p));
      std::swap(f.perm[k], f.perm[p]);
      f.perm_sign = -f.perm_sign;
    }
    const std::complex<Real> pivot = f.lu(k, k);
    const Real mag = std::abs(pivot);
    if (mag <= threshold) f.singular = true;
    if (mag == Real(0)) continue;
    f.log_abs_det += std::log(mag);

    const Eigen::Index rest = n - k - 1;
    if (rest > 0) {
      f.lu.col(k).tail(rest) /= pivot;
      f.lu.bottomRightCorner(rest, rest).noalias() -= f.lu.col(k).tail(rest) * f.lu.row(k).tail(rest);
    }
  }
  if (f.singular) f.log_abs_det = -std::numeric_limits<Real>::infinity();
  return f;
}

template <typename Real, typename Derived>
CMatrix<Real> lu_solve(const LUFactors<Real>& f, const Eigen::MatrixBase<Derived>& b) {
  if (f.singular) throw SingularMatrix("lu_solve: factorization is singular");
  if (b.rows() != f.size()) throw BadInput("lu_solve: right-hand side has wrong row count");
  CMatrix<Real> x = f.permute(b);
  f.lu.template triangularView<Eigen::UnitLower>().solveInPlace(x);
  f.lu.template triangularView<Eigen::Upper>().solveInPlace(x);
  return x;
}

/// SplitMix64: 64-bit state, one multiply-xorshift mix per output.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on (0, 1].
  double uniform() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; the second variate of each pair is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Independent seed for sub-stream `stream` of `seed` (one stream per coefficient).
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 mixer(seed ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
  return mixer.next();
}

/// m x n matrix of independent standard complex Gaussians (re, im ~ N(0, 1)).
inline ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, SplitMix64& rng) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = rng.gaussian();
      g(i, j) = Complex(re, rng.gaussian());
    }
  return g;
}

namespace detail {

// One run of power iteration on A^*A from `v`. Returns false on sweep exhaustion.
template <typename Real, typename Derived>
bool power_iterate(const Eigen::MatrixBase<Derived>& a, CVector<Real> v, Real& sigma) {
  v.normalize();
  Real prev = 0;
  for (int sweep = 0; sweep < kNormMaxSweeps; ++sweep) {
    const CVector<Real> w = a * v;
    const Real nw = w.norm();
    if (nw == Real(0)) {
      sigma = 0;
      return true;
    }
    CVector<Real> z = a.adjoint() * w;
    const Real nz = z.norm();
    // |A^* w| / |w| is a lower bound on sigma_max that dominates |A v|.
    sigma = nz / nw;
    if (sweep > 0 && std::abs(sigma - prev) <= static_cast<Real>(kNormTolerance) * sigma) return true;
    prev = sigma;
    v = z / nz;
  }
  return false;
}

}  // namespace detail

/// 2-norm by power iteration on A^*A from the all-ones vector.
///
/// If the all-ones start is (numerically) orthogonal to the dominant right
/// singular vector the result falls below |A|_F / sqrt(min(m, n)); the
/// iteration is then repeated from a fixed pseudo-random start and the larger
/// value is kept. Throws ConvergenceFailure when neither run meets the
/// tolerance within kNormMaxSweeps.
template <typename Derived>
RealOf<Derived> spectral_norm(const Eigen::MatrixBase<Derived>& a_in) {
  using Real = RealOf<Derived>;
  if (a_in.size() == 0) throw BadInput("spectral_norm: empty matrix");
  CMatrix<Real> a = a_in.template cast<std::complex<Real>>();
  const Real frob = a.stableNorm();
  if (frob == Real(0)) return 0;
  // Iterate on A / |A|_F so that A^*A v neither underflows nor overflows.
  a /= frob;

  Real sigma = 0;
  bool ok = detail::power_iterate<Real>(a, CVector<Real>::Ones(a.cols()), sigma);
  const Real floor = Real(1) / std::sqrt(static_cast<Real>(std::min(a.rows(), a.cols())));
  if (!ok || sigma < floor * (1 - Real(1e-9))) {
    SplitMix64 rng(0x5eed5eed5eed5eedULL);
    CVector<Real> v(a.cols());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double re = rng.gaussian();
      v(i) = std::complex<Real>(static_cast<Real>(re), static_cast<Real>(rng.gaussian()));
    }
    Real retry = 0;
    const bool ok2 = detail::power_iterate<Real>(a, v, retry);
    if (!ok && !ok2) throw ConvergenceFailure("spectral_norm: power iteration did not converge");
    if (ok2) sigma = ok ? std::max(sigma, retry) : retry;
  }
  return sigma * frob;
}

template <typename Real>
struct NormEstimate {
  Real value = 0;
  /// True when spectral_norm failed and the Frobenius norm was used instead.
  bool degraded = false;
};

/// spectral_norm with the flagged Frobenius fallback (an upper bound on the 2-norm).
template <typename Derived>
NormEstimate<RealOf<Derived>> norm2_or_frobenius(const Eigen::MatrixBase<Derived>& a) {
  try {
    return {spectral_norm(a), false};
  } catch (const ConvergenceFailure&) {
    return {a.stableNorm(), true};
  }
}

/// 1 / (|A|_2 |A^-1|_2) using the explicit inverse; 0 for a singular factorization.
template <typename Real>
Real rcond_estimate(const LUFactors<Real>& f, Real norm_a) {
  if (f.singular || norm_a == Real(0)) return 0;
  const CMatrix<Real> inv = lu_solve(f, CMatrix<Real>::Identity(f.size(), f.size()));
  const Real norm_inv = norm2_or_frobenius(inv).value;
  if (!std::isfinite(norm_inv) || norm_inv == Real(0)) return 0;
  return Real(1) / (norm_a * norm_inv);
}

/// Haar-distributed unitary matrix: Householder QR of a complex Gaussian
/// matrix with the phases of diag(R) moved into Q so that R has a positive
/// real diagonal. Deterministic in `seed`.
inline ComplexMatrix random_unitary(Eigen::Index m, std::uint64_t seed) {
  if (m < 1) throw BadInput("random_unitary: size must be positive");
  SplitMix64 rng(seed);
  const ComplexMatrix g = gaussian_matrix(m, m, rng);
  const Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  for (Eigen::Index j = 0; j < m; ++j) {
    const Complex r = qr.matrixQR()(j, j);
    const double mag = std::abs(r);
    if (mag > 0) q.col(j) *= r / mag;
  }
  return q;
}

}  // namespace polyeig
