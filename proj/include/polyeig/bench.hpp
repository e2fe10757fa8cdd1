#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyeig/aberth.hpp"
#include "polyeig/polyfile.hpp"

namespace polyeig {

enum class BenchClass {
  /// A_i = sigma_i Q_i with Q_i Haar unitary.
  q_class,
  /// A_i = sigma_i G_i / |G_i|_2 with G_i complex Gaussian.
  random_scaled,
};

const char* to_string(BenchClass cls);

/// [1, 3e5, 3e10, 1e15, 0, 0, 0, 0, 0, 1e40, 0, 0, 0, 1].
std::vector<double> default_sigma();

struct BenchSpec {
  BenchClass cls = BenchClass::q_class;
  Eigen::Index m = 5;
  std::vector<double> sigma = default_sigma();
  std::uint64_t seed = 1;
  std::vector<InitStrategy> strategies = {{InitKind::tropical_circles, {}}, {InitKind::unit_circle, {}}};
};

/// Coefficients of the instance; coefficient i uses stream split_seed(seed, i).
/// Throws BadInput unless sigma has nonzero, finite first and last entries.
CoefficientList bench_instance(const BenchSpec& spec);

struct BenchRow {
  InitStrategy strategy;
  int simul_it = 0;
  double aver_it = 0;
  bool converged = false;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  /// Largest 2-norm condition number among nonzero coefficients.
  double max_condition = 1;
};

BenchResult run_bench(const BenchSpec& spec, const SolveOptions& opts = {});

}  // namespace polyeig
