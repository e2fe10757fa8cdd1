#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyeig/matpoly.hpp"
#include "polyeig/tropical.hpp"

namespace polyeig {

enum class PelletStatus { two_roots, single_root_endpoint, no_roots, undefined_singular };

const char* to_string(PelletStatus status);

/// Positive solutions s <= t of x^kappa = sum_{i != kappa} c_i x^i.
/// kappa = 0 has only t (s = 0), kappa = n only s (t = +inf).
struct PelletInterval {
  std::size_t kappa = 0;
  double s = 0;
  double t = 0;
  PelletStatus status = PelletStatus::no_roots;

  bool has_roots() const {
    return status == PelletStatus::two_roots || status == PelletStatus::single_root_endpoint;
  }
};

/// Tangency threshold on min log(sum c_i x^(i-kappa)) for reporting a double root.
inline constexpr double kTangentTolerance = 1e-13;

/// Solves x^kappa = sum_{i != kappa} c_i x^i; c_kappa is ignored (taken as 1).
///
/// Works with phi(t) = log sum_i c_i exp((i - kappa) t), which is convex in
/// t = log x: the minimum of phi decides between zero and two roots and each
/// root is then bracketed and bisected down to adjacent doubles in t.
/// Throws BadInput when an endpoint coefficient c_0 or c_n (other than
/// c_kappa) is zero or when there is nothing on the right-hand side.
PelletInterval posynomial_roots(std::span<const double> c, std::size_t kappa);

/// Pellet intervals for every kappa with c_i = |A_kappa^-1 A_i|.
std::vector<PelletInterval> matrix_pellet(const MatrixPolynomial& p);

/// Pellet intervals of a scalar majorant, c_i = w_i / w_kappa. For a Q-class
/// polynomial (A_i = sigma_i Q_i) these coincide with matrix_pellet.
std::vector<PelletInterval> majorant_pellet(std::span<const double> w);

struct Annulus {
  double inner = 0;
  double outer = 0;
  /// Number of eigenvalues the annulus is known to hold (inclusion annuli only).
  std::size_t count = 0;
};

struct AnnulusReport {
  std::size_t m = 0;
  std::size_t degree = 0;
  /// Indices h_0 < ... < h_p with positive Pellet roots.
  std::vector<std::size_t> indices;
  /// Closed [t_{h_{i-1}}, s_{h_i}] holding m (h_i - h_{i-1}) eigenvalues.
  std::vector<Annulus> inclusion;
  /// Open (s_h, t_h) holding no eigenvalue; s_0 = 0 and t_n = +inf.
  std::vector<Annulus> exclusion;
  /// |x| <= s_{h_0} holds m h_0 eigenvalues when h_0 > 0 (A_0 singular).
  std::optional<Annulus> inner_disk;
  /// |x| >= t_{h_p} holds m (n - h_p) eigenvalues, infinite ones included, when h_p < n.
  std::optional<Annulus> outer_region;
  std::vector<std::string> notes;

  std::size_t inclusion_total() const;
};

/// Assembles inclusion/exclusion annuli; throws NoBounds if no interval has roots.
AnnulusReport annuli_report(std::span<const PelletInterval> intervals, std::size_t m);

/// (7 + 3 sqrt 3)/2 - sqrt(18 + 21 sqrt 3 / 2), the largest admissible separation ratio.
double delta_max();
/// (3 + sqrt 3)/2 + sqrt(2 + 7 sqrt 3 / 6), where delta_plus peaks.
double optimal_radius();

struct LocalizationConstants {
  /// Separation threshold: consecutive tropical roots must satisfy r_{i}/r_{i+1} < 1/f.
  double f;
  /// Interior annuli are A(r_i / g, g r_i).
  double g;
  /// Outer end of the first / inner end of the last annulus use this factor.
  double g_endpoint;
  /// Whether delta_plus refinement applies (matrix constants only).
  bool refinable;

  /// f = 1/delta_max in (12.11, 12.12), g = r_0 in (4.371, 4.372), g' = 2 + sqrt 2.
  static LocalizationConstants matrix();
  /// Scalar constants: f = 9, g = 3 at every edge.
  static LocalizationConstants scalar();
};

struct LocalizedAnnulus {
  /// 1-based edge index of the Newton polygon.
  std::size_t edge = 0;
  double radius = 0;
  /// count = m * multiplicity.
  Annulus annulus;
  bool applicable = false;
  /// Tightened radii from the actual separation ratios (equal to `annulus` when not refinable).
  Annulus refined;
};

struct Localization {
  std::vector<LocalizedAnnulus> annuli;
  /// Largest 2-norm condition number among nonzero coefficients.
  double max_condition = 1;
  /// Set when max_condition > kConditionWarning: the Q-class guarantee is then only heuristic.
  bool conditioning_warning = false;
};

inline constexpr double kConditionWarning = 1e3;

/// Tropical-root localization for a caller-asserted Q-class polynomial.
Localization tropical_localize(const MatrixPolynomial& p, const NewtonPolygon& polygon,
                               const LocalizationConstants& constants = LocalizationConstants::matrix());

/// delta_+(r) = (-c + (r - 1) sqrt c) / (r (2r - 1)), c = r^2 - 4r + 2; DomainError for r <= 2 + sqrt 2.
double delta_plus(double r);

/// Smallest r in [2 + sqrt 2, r_0] with delta_plus(r) >= delta. DomainError unless 0 <= delta < delta_max.
double refine_radius(double delta);

/// A(r_i / refine_radius(epsilon), r_i refine_radius(delta)).
Annulus refine_annulus(double delta, double epsilon, double base_radius);

}  // namespace polyeig
