#pragma once

#include <cstddef>
#include <vector>

#include "polyeig/matpoly.hpp"

namespace polyeig {

/// Largest matrix dense_eigenvalues accepts.
inline constexpr Eigen::Index kOracleMaxSize = 512;

/// Block companion of A_n^-1 A(x): identity blocks on the block subdiagonal,
/// -A_n^-1 A_i in block row i of the last block column. Throws
/// SingularLeading if A_n is numerically singular.
ComplexMatrix companion(const MatrixPolynomial& p);

/// All eigenvalues of a square matrix: diagonal balancing, Householder
/// reduction to Hessenberg form, then single-shift QR with Wilkinson shifts.
/// Throws SizeLimit above kOracleMaxSize and QRNoConvergence when an
/// eigenvalue needs more than 100 * size iterations.
std::vector<Complex> dense_eigenvalues(const ComplexMatrix& m);

/// Eigenvalues of `p` from its companion, sorted by modulus.
std::vector<Complex> oracle_eigenvalues(const MatrixPolynomial& p);

/// Number of values with inner (1 - guard) <= |z| <= outer (1 + guard).
std::size_t count_in_annulus(const std::vector<Complex>& eigs, double inner, double outer, double guard);

/// Pairs every value of `a` with its nearest unused value of `b` (greedy, in
/// order of increasing distance) and returns max |a_i - b_j| / max(|a_i|, tiny).
double max_matched_relative_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace polyeig
