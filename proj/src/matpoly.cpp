#include "polyeig/matpoly.hpp"

#include <algorithm>

namespace polyeig {

namespace {

bool is_zero(const ComplexMatrix& a) { return (a.array() == Complex(0.0)).all(); }

}  // namespace

MatrixPolynomial MatrixPolynomial::normalize(std::vector<ComplexMatrix> raw) {
  if (raw.empty()) throw ZeroPolynomial("matrix polynomial has no coefficients");
  const Eigen::Index m = raw.front().rows();
  if (m < 1) throw BadInput("matrix polynomial coefficients must be nonempty");
  for (const auto& a : raw)
    if (a.rows() != m || a.cols() != m) throw BadInput("coefficients must all be square and of equal size");

  auto first = std::find_if(raw.begin(), raw.end(), [](const ComplexMatrix& a) { return !is_zero(a); });
  if (first == raw.end()) throw ZeroPolynomial("all coefficients are zero");
  auto last = std::find_if(raw.rbegin(), raw.rend(), [](const ComplexMatrix& a) { return !is_zero(a); });

  MatrixPolynomial p;
  p.m_ = m;
  p.stripped_ = static_cast<std::size_t>(first - raw.begin());
  p.coeffs_.assign(std::make_move_iterator(first), std::make_move_iterator(last.base()));
  return p;
}

MatrixPolynomial MatrixPolynomial::reversed() const {
  MatrixPolynomial r = *this;
  std::reverse(r.coeffs_.begin(), r.coeffs_.end());
  r.stripped_ = 0;
  return r;
}

ComplexMatrix evaluate(const MatrixPolynomial& p, Complex x) {
  const auto& c = p.coeffs();
  ComplexMatrix acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

ComplexMatrix evaluate_derivative(const MatrixPolynomial& p, Complex x) {
  const auto& c = p.coeffs();
  const std::size_t n = p.degree();
  if (n == 0) return ComplexMatrix::Zero(p.size(), p.size());
  ComplexMatrix acc = static_cast<double>(n) * c[n];
  for (std::size_t i = n - 1; i >= 1; --i) acc = acc * x + static_cast<double>(i) * c[i];
  return acc;
}

NormMajorant norm_majorant(const MatrixPolynomial& p) {
  NormMajorant out;
  out.w.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) {
    if (is_zero(a)) {
      out.w.push_back(0.0);
      continue;
    }
    const auto est = norm2_or_frobenius(a);
    out.degraded = out.degraded || est.degraded;
    out.w.push_back(est.value);
  }
  return out;
}

std::optional<std::vector<double>> scaled_coefficient_norms(const MatrixPolynomial& p, std::size_t kappa) {
  const auto lu = lu_factor(p.coeff(kappa));
  if (lu.singular) return std::nullopt;
  std::vector<double> c(p.coeffs().size(), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == kappa) {
      c[i] = 1.0;
    } else if (!is_zero(p.coeff(i))) {
      c[i] = norm2_or_frobenius(lu_solve(lu, p.coeff(i))).value;
    }
  }
  return c;
}

NewtonCorrection newton_correction(const MatrixPolynomial& p, Complex x) {
  const ComplexMatrix ax = evaluate(p, x);
  const auto lu = lu_factor(ax);
  NewtonCorrection out;
  if (lu.singular) return out;

  const ComplexMatrix y = lu_solve(lu, evaluate_derivative(p, x));
  out.rcond = rcond_estimate(lu, norm2_or_frobenius(ax).value);
  const Complex tr = y.trace();
  if (std::abs(tr) < kTraceUnderflow) {
    out.trace_underflow = true;
    return out;
  }
  out.value = 1.0 / tr;
  return out;
}

}  // namespace polyeig
