#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "polyeig/init.hpp"
#include "polyeig/matpoly.hpp"

namespace polyeig {

enum class UpdateOrder {
  /// Gauss-Seidel: later points see this sweep's updates of earlier ones.
  sequential,
  /// Jacobi: every update uses the sweep-start snapshot.
  simultaneous,
};

enum class StopReason { not_converged, newton_small, rcond_small };

const char* to_string(StopReason reason);
const char* to_string(UpdateOrder order);

struct SolveOptions {
  /// Converged when |N(x)| <= eps |x|.
  double eps = 1e-13;
  /// Converged when rcond(A(x)) <= delta.
  double delta = 1e-14;
  int max_sweeps = 5000;
  UpdateOrder order = UpdateOrder::sequential;
  /// Called after every sweep with (sweep index, number of points still active).
  std::function<void(int, std::size_t)> observer;
};

struct PointDiagnostics {
  Complex correction;
  double rcond = 0;
  bool moved = false;
  /// 1 - N * sum was exactly zero and a plain Newton step was taken.
  bool newton_fallback = false;
  bool trace_underflow = false;
  bool perturbed = false;
};

struct SweepReport {
  std::vector<PointDiagnostics> points;
  std::size_t newly_converged = 0;
};

/// Distance below which two approximations are considered to collide.
inline constexpr double kCollisionDistance = 1e-300;

/// One Ehrlich-Aberth sweep over the points whose status is not_converged:
///
///   x_i <- x_i - N(x_i) / (1 - N(x_i) sum_{j != i} 1 / (x_i - x_j)),
///   N(x) = 1 / trace(A(x)^-1 A'(x)).
///
/// A point whose rcond is <= delta or whose correction satisfies
/// |N| <= eps |x_i| is marked converged and left where it is. The repulsion
/// sum runs over all other points, frozen ones included, in ascending j.
/// A colliding active point is nudged by 1e-10 |x_i| once; a second collision
/// throws CollisionError.
SweepReport aberth_sweep(const MatrixPolynomial& p, std::vector<Complex>& x, std::vector<StopReason>& status,
                         const SolveOptions& opts);

struct SolveResult {
  /// m (n + stripped_power) values; stripped zeros come last.
  std::vector<Complex> eigenvalues;
  std::vector<int> nu;
  std::vector<StopReason> stop;
  /// Set for eigenvalues at infinity (singular A_n, see `reversed`).
  std::vector<bool> infinite;
  /// Max nu_i over converged components, or max_sweeps if any did not converge.
  int simul_it = 0;
  /// sum nu_i / (number of eigenvalues).
  double aver_it = 0;
  /// The iteration ran on x^n A(1/x) because A_n was singular.
  bool reversed = false;

  bool converged(std::size_t i) const { return stop[i] != StopReason::not_converged; }
  bool all_converged() const;
};

/// Runs sweeps from the strategy's starting points until every point has
/// converged or max_sweeps is reached.
///
/// When A_n is singular and A_0 is not, the iteration runs on the reversed
/// polynomial and reports reciprocals; points of the reversal converging to
/// (numerically) zero are flagged as infinite eigenvalues.
SolveResult solve(const MatrixPolynomial& p, const InitStrategy& strategy, const SolveOptions& opts = {});

/// Same, from caller-supplied starting points (size must be m n).
SolveResult solve_from(const MatrixPolynomial& p, std::vector<Complex> start, const SolveOptions& opts = {});

}  // namespace polyeig
