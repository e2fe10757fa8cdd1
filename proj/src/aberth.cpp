#include "polyeig/aberth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyeig/tropical.hpp"

namespace polyeig {

namespace {

// Points of the reversal smaller than this fraction of its smallest tropical
// root are reported as infinite eigenvalues of the original polynomial.
constexpr double kInfiniteThreshold = 1e-6;

bool collides(const std::vector<Complex>& x, std::size_t i) {
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != i && std::abs(x[i] - x[j]) < kCollisionDistance) return true;
  return false;
}

struct Iteration {
  std::vector<Complex> x;
  std::vector<int> nu;
  std::vector<StopReason> stop;
};

Iteration iterate(const MatrixPolynomial& p, std::vector<Complex> start, const SolveOptions& opts) {
  if (opts.max_sweeps < 1 || !(opts.eps > 0) || !(opts.delta > 0)) throw BadInput("invalid solve options");
  Iteration it;
  it.x = std::move(start);
  it.nu.assign(it.x.size(), 0);
  it.stop.assign(it.x.size(), StopReason::not_converged);

  auto active = [&] {
    return static_cast<std::size_t>(std::count(it.stop.begin(), it.stop.end(), StopReason::not_converged));
  };
  for (int sweep = 1; sweep <= opts.max_sweeps && active() > 0; ++sweep) {
    const std::vector<StopReason> before = it.stop;
    aberth_sweep(p, it.x, it.stop, opts);
    for (std::size_t i = 0; i < it.x.size(); ++i)
      if (before[i] == StopReason::not_converged && it.stop[i] != StopReason::not_converged) it.nu[i] = sweep;
    if (opts.observer) opts.observer(sweep, active());
  }
  for (std::size_t i = 0; i < it.x.size(); ++i)
    if (it.stop[i] == StopReason::not_converged) it.nu[i] = opts.max_sweeps;
  return it;
}

SolveResult finish(const MatrixPolynomial& p, Iteration it, const SolveOptions& opts) {
  SolveResult r;
  r.eigenvalues = std::move(it.x);
  r.nu = std::move(it.nu);
  r.stop = std::move(it.stop);
  r.infinite.assign(r.eigenvalues.size(), false);

  const std::size_t zeros = static_cast<std::size_t>(p.size()) * p.stripped_power();
  for (std::size_t k = 0; k < zeros; ++k) {
    r.eigenvalues.emplace_back(0.0);
    r.nu.push_back(0);
    r.stop.push_back(StopReason::rcond_small);
    r.infinite.push_back(false);
  }

  long total = 0;
  for (std::size_t i = 0; i < r.nu.size(); ++i) {
    total += r.nu[i];
    if (r.converged(i))
      r.simul_it = std::max(r.simul_it, r.nu[i]);
    else
      r.simul_it = opts.max_sweeps;
  }
  r.aver_it = r.nu.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(r.nu.size());
  return r;
}

}  // namespace

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::not_converged: return "not_converged";
    case StopReason::newton_small: return "newton_small";
    case StopReason::rcond_small: return "rcond_small";
  }
  return "?";
}

const char* to_string(UpdateOrder order) {
  return order == UpdateOrder::sequential ? "sequential" : "simultaneous";
}

bool SolveResult::all_converged() const {
  return std::none_of(stop.begin(), stop.end(), [](StopReason s) { return s == StopReason::not_converged; });
}

SweepReport aberth_sweep(const MatrixPolynomial& p, std::vector<Complex>& x, std::vector<StopReason>& status,
                         const SolveOptions& opts) {
  if (status.size() != x.size()) throw BadInput("aberth_sweep: status and point counts differ");
  SweepReport report;
  report.points.resize(x.size());

  const bool sequential = opts.order == UpdateOrder::sequential;
  std::vector<Complex> snapshot;
  if (!sequential) snapshot = x;
  std::vector<Complex>& src = sequential ? x : snapshot;

  for (std::size_t i = 0; i < x.size(); ++i) {
    if (status[i] != StopReason::not_converged) continue;
    PointDiagnostics& d = report.points[i];

    if (collides(src, i)) {
      const double scale = std::abs(src[i]) > 0 ? std::abs(src[i]) : 1.0;
      src[i] += Complex(1e-10 * scale, 1e-10 * scale) / std::sqrt(2.0);
      if (!sequential) x[i] = src[i];
      d.perturbed = true;
      if (collides(src, i)) throw CollisionError("aberth_sweep: approximations collide");
    }
    const Complex xi = src[i];

    const NewtonCorrection nc = newton_correction(p, xi);
    d.correction = nc.value;
    d.rcond = nc.rcond;
    d.trace_underflow = nc.trace_underflow;
    if (nc.rcond <= opts.delta) {
      status[i] = StopReason::rcond_small;
      ++report.newly_converged;
      continue;
    }
    if (!nc.trace_underflow && std::abs(nc.value) <= opts.eps * std::abs(xi)) {
      status[i] = StopReason::newton_small;
      ++report.newly_converged;
      continue;
    }

    Complex repulsion(0.0);
    for (std::size_t j = 0; j < src.size(); ++j)
      if (j != i) repulsion += 1.0 / (xi - src[j]);

    Complex next = xi;
    if (nc.trace_underflow) {
      // N -> infinity: the update tends to x_i + 1 / sum.
      if (repulsion != Complex(0.0)) next = xi + 1.0 / repulsion;
    } else {
      const Complex denom = 1.0 - nc.value * repulsion;
      if (denom == Complex(0.0)) {
        next = xi - nc.value;
        d.newton_fallback = true;
      } else {
        next = xi - nc.value / denom;
      }
    }
    d.moved = next != xi;
    x[i] = next;
  }
  return report;
}

SolveResult solve_from(const MatrixPolynomial& p, std::vector<Complex> start, const SolveOptions& opts) {
  if (start.size() != static_cast<std::size_t>(p.size()) * p.degree())
    throw BadInput("solve_from: need m * n starting points");
  return finish(p, iterate(p, std::move(start), opts), opts);
}

SolveResult solve(const MatrixPolynomial& p, const InitStrategy& strategy, const SolveOptions& opts) {
  if (p.degree() == 0) return finish(p, Iteration{}, opts);

  const bool reverse = lu_factor(p.coeffs().back()).singular && !lu_factor(p.coeffs().front()).singular;
  if (!reverse) return finish(p, iterate(p, initial_points(p, strategy), opts), opts);

  const MatrixPolynomial rev = p.reversed();
  Iteration it = iterate(rev, initial_points(rev, strategy), opts);
  const auto polygon = tropical_roots(norm_majorant(rev));
  const double tiny = kInfiniteThreshold * polygon.radii.front();
  std::vector<bool> infinite(it.x.size(), false);
  for (std::size_t i = 0; i < it.x.size(); ++i) {
    if (std::abs(it.x[i]) <= tiny) {
      infinite[i] = true;
      it.x[i] = Complex(std::numeric_limits<double>::infinity(), 0.0);
    } else {
      it.x[i] = 1.0 / it.x[i];
    }
  }
  SolveResult r = finish(p, std::move(it), opts);
  std::copy(infinite.begin(), infinite.end(), r.infinite.begin());
  r.reversed = true;
  return r;
}

}  // namespace polyeig
