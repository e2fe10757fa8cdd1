#include "polyeig/bench.hpp"

#include <cmath>

#include "polyeig/pellet.hpp"

namespace polyeig {

const char* to_string(BenchClass cls) { return cls == BenchClass::q_class ? "Q" : "random_scaled"; }

std::vector<double> default_sigma() { return {1, 3e5, 3e10, 1e15, 0, 0, 0, 0, 0, 1e40, 0, 0, 0, 1}; }

CoefficientList bench_instance(const BenchSpec& spec) {
  const auto& s = spec.sigma;
  if (s.size() < 2) throw BadInput("bench: sigma needs at least two entries");
  if (!(s.front() > 0) || !(s.back() > 0)) throw BadInput("bench: first and last sigma must be nonzero");
  for (double v : s)
    if (!(v >= 0) || !std::isfinite(v)) throw BadInput("bench: sigma entries must be finite and nonnegative");
  if (spec.m < 1) throw BadInput("bench: m must be positive");

  CoefficientList coeffs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) {
      coeffs.push_back(ComplexMatrix::Zero(spec.m, spec.m));
      continue;
    }
    const std::uint64_t stream = split_seed(spec.seed, i);
    if (spec.cls == BenchClass::q_class) {
      coeffs.push_back(s[i] * random_unitary(spec.m, stream));
    } else {
      SplitMix64 rng(stream);
      const ComplexMatrix g = gaussian_matrix(spec.m, spec.m, rng);
      coeffs.push_back((s[i] / spectral_norm(g)) * g);
    }
  }
  return coeffs;
}

BenchResult run_bench(const BenchSpec& spec, const SolveOptions& opts) {
  const auto p = MatrixPolynomial::normalize(bench_instance(spec));
  BenchResult out;
  for (const auto& a : p.coeffs()) {
    if ((a.array() == Complex(0.0)).all()) continue;
    const double rc = rcond_estimate(lu_factor(a), spectral_norm(a));
    out.max_condition = std::max(out.max_condition, rc > 0 ? 1.0 / rc : INFINITY);
  }
  for (const auto& strategy : spec.strategies) {
    const SolveResult r = solve(p, strategy, opts);
    out.rows.push_back({strategy, r.simul_it, r.aver_it, r.all_converged()});
  }
  return out;
}

}  // namespace polyeig
