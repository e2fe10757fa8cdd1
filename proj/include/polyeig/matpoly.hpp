#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyeig/kernels.hpp"

namespace polyeig {

/// A(x) = sum_i A_i x^i with m x m complex coefficients, normalized so that
/// A_0 != 0 and A_n != 0. A factor x^stripped_power removed during
/// normalization is remembered so that callers can report the corresponding
/// zero eigenvalues.
class MatrixPolynomial {
 public:
  MatrixPolynomial() = default;

  /// Drops trailing zero coefficients and factors out leading ones.
  /// Throws ZeroPolynomial if every coefficient is zero, BadInput on
  /// mismatched or non-square sizes.
  static MatrixPolynomial normalize(std::vector<ComplexMatrix> raw);

  Eigen::Index size() const { return m_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  std::size_t stripped_power() const { return stripped_; }
  const std::vector<ComplexMatrix>& coeffs() const { return coeffs_; }
  const ComplexMatrix& coeff(std::size_t i) const { return coeffs_[i]; }

  /// x^n A(1/x); its eigenvalues are the reciprocals of those of A.
  MatrixPolynomial reversed() const;

  /// Number of eigenvalues including the stripped zeros: m (n + stripped_power).
  std::size_t eigenvalue_count() const {
    return static_cast<std::size_t>(m_) * (degree() + stripped_);
  }

 private:
  Eigen::Index m_ = 0;
  std::vector<ComplexMatrix> coeffs_;
  std::size_t stripped_ = 0;
};

/// sum_i A_i x^i by Horner's rule.
ComplexMatrix evaluate(const MatrixPolynomial& p, Complex x);

/// sum_i i A_i x^(i-1) by Horner's rule on the derivative coefficients.
ComplexMatrix evaluate_derivative(const MatrixPolynomial& p, Complex x);

/// Coefficients w_i = |A_i|_2 of the scalar majorant w(x) = sum_i |A_i| x^i.
struct NormMajorant {
  std::vector<double> w;
  /// Set when some norm fell back to Frobenius.
  bool degraded = false;

  std::size_t degree() const { return w.size() - 1; }
};

NormMajorant norm_majorant(const MatrixPolynomial& p);

/// c_i = |A_kappa^-1 A_i|_2 for every i (c_kappa = 1, zero blocks give 0), or
/// nullopt when A_kappa is numerically singular.
std::optional<std::vector<double>> scaled_coefficient_norms(const MatrixPolynomial& p, std::size_t kappa);

struct NewtonCorrection {
  /// 1 / trace(A(x)^-1 A'(x)) = a(x) / a'(x) with a = det A; 0 when singular or underflowed.
  Complex value;
  /// Reciprocal 2-norm condition number of A(x); 0 when A(x) is numerically singular.
  double rcond = 0;
  /// trace(A^-1 A') fell below kTraceUnderflow, so `value` would be unbounded.
  bool trace_underflow = false;
};

inline constexpr double kTraceUnderflow = 1e-290;

NewtonCorrection newton_correction(const MatrixPolynomial& p, Complex x);

}  // namespace polyeig
