#include "polyeig/pellet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace polyeig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt2 = std::numbers::sqrt2;
const double kSqrt3 = std::numbers::sqrt3;

struct Term {
  double log_coeff;
  double exponent;
};

// phi(t) = log sum exp(log_coeff + exponent * t) and its derivative.
struct LogPosynomial {
  std::vector<Term> terms;

  double value(double t) const {
    double peak = -kInf;
    for (const auto& term : terms) peak = std::max(peak, term.log_coeff + term.exponent * t);
    double sum = 0;
    for (const auto& term : terms) sum += std::exp(term.log_coeff + term.exponent * t - peak);
    return peak + std::log(sum);
  }

  double slope(double t) const {
    double peak = -kInf;
    for (const auto& term : terms) peak = std::max(peak, term.log_coeff + term.exponent * t);
    double sum = 0, weighted = 0;
    for (const auto& term : terms) {
      const double e = std::exp(term.log_coeff + term.exponent * t - peak);
      sum += e;
      weighted += e * term.exponent;
    }
    return weighted / sum;
  }
};

// Bisection on a sign change of f between a and b (either order) down to adjacent doubles.
template <typename F>
double bisect(F&& f, double a, double b) {
  double lo = std::min(a, b);
  double hi = std::max(a, b);
  const bool lo_negative = f(lo) < 0;
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if ((f(mid) < 0) == lo_negative)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Walks from `start` in direction `dir` with doubling steps until pred holds.
template <typename Pred>
double expand_until(Pred&& pred, double start, double dir) {
  double step = 1.0;
  double t = start;
  for (int it = 0; it < 64 && !pred(t); ++it) {
    t = start + dir * step;
    step *= 2.0;
  }
  if (!pred(t)) throw ConvergenceFailure("posynomial_roots: could not bracket a root");
  return t;
}

}  // namespace

const char* to_string(PelletStatus status) {
  switch (status) {
    case PelletStatus::two_roots: return "two_roots";
    case PelletStatus::single_root_endpoint: return "single_root_endpoint";
    case PelletStatus::no_roots: return "no_roots";
    case PelletStatus::undefined_singular: return "undefined_singular";
  }
  return "?";
}

PelletInterval posynomial_roots(std::span<const double> c, std::size_t kappa) {
  if (c.size() < 2) throw BadInput("posynomial_roots: need degree >= 1");
  const std::size_t n = c.size() - 1;
  if (kappa > n) throw BadInput("posynomial_roots: kappa exceeds degree");
  if ((kappa != 0 && !(c[0] > 0)) || (kappa != n && !(c[n] > 0)))
    throw BadInput("posynomial_roots: c_0 and c_n must be positive");

  LogPosynomial phi;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == kappa) continue;
    if (!(c[i] >= 0) || !std::isfinite(c[i])) throw BadInput("posynomial_roots: coefficients must be finite and >= 0");
    if (c[i] > 0) phi.terms.push_back({std::log(c[i]), static_cast<double>(i) - static_cast<double>(kappa)});
  }

  // A starting abscissa near the scale of the problem: the mean of the points
  // where individual terms equal one.
  double centre = 0;
  for (const auto& term : phi.terms) centre -= term.log_coeff / term.exponent;
  centre /= static_cast<double>(phi.terms.size());

  PelletInterval out;
  out.kappa = kappa;
  auto f = [&](double t) { return phi.value(t); };

  if (kappa == 0 || kappa == n) {
    // Monotone: increasing for kappa = 0, decreasing for kappa = n.
    const double up = kappa == 0 ? 1.0 : -1.0;
    const double hi = expand_until([&](double t) { return f(t) > 0; }, centre, up);
    const double lo = expand_until([&](double t) { return f(t) < 0; }, centre, -up);
    const double root = std::exp(bisect(f, lo, hi));
    out.status = PelletStatus::single_root_endpoint;
    if (kappa == 0) {
      out.s = 0;
      out.t = root;
    } else {
      out.s = root;
      out.t = kInf;
    }
    return out;
  }

  auto dphi = [&](double t) { return phi.slope(t); };
  const double lo = expand_until([&](double t) { return dphi(t) < 0; }, centre, -1.0);
  const double hi = expand_until([&](double t) { return dphi(t) > 0; }, centre, 1.0);
  const double t_min = bisect(dphi, lo, hi);
  const double phi_min = f(t_min);

  if (std::abs(phi_min) <= kTangentTolerance) {
    out.status = PelletStatus::two_roots;
    out.s = out.t = std::exp(t_min);
    return out;
  }
  if (phi_min > 0) {
    out.status = PelletStatus::no_roots;
    out.s = out.t = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double left = expand_until([&](double t) { return f(t) > 0; }, t_min, -1.0);
  const double right = expand_until([&](double t) { return f(t) > 0; }, t_min, 1.0);
  out.status = PelletStatus::two_roots;
  out.s = std::exp(bisect(f, left, t_min));
  out.t = std::exp(bisect(f, t_min, right));
  return out;
}

std::vector<PelletInterval> matrix_pellet(const MatrixPolynomial& p) {
  if (p.degree() == 0) throw DegenerateInput("constant matrix polynomial has no finite eigenvalues to bound");
  std::vector<PelletInterval> out;
  for (std::size_t k = 0; k <= p.degree(); ++k) {
    const auto c = scaled_coefficient_norms(p, k);
    if (!c) {
      PelletInterval undefined;
      undefined.kappa = k;
      undefined.status = PelletStatus::undefined_singular;
      out.push_back(undefined);
      continue;
    }
    out.push_back(posynomial_roots(*c, k));
  }
  return out;
}

std::vector<PelletInterval> majorant_pellet(std::span<const double> w) {
  if (w.size() < 2) throw DegenerateInput("constant majorant has no roots to bound");
  std::vector<PelletInterval> out;
  std::vector<double> c(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!(w[k] > 0)) {
      PelletInterval undefined;
      undefined.kappa = k;
      undefined.status = PelletStatus::undefined_singular;
      out.push_back(undefined);
      continue;
    }
    for (std::size_t i = 0; i < w.size(); ++i) c[i] = w[i] / w[k];
    out.push_back(posynomial_roots(c, k));
  }
  return out;
}

std::size_t AnnulusReport::inclusion_total() const {
  std::size_t total = 0;
  for (const auto& a : inclusion) total += a.count;
  return total;
}

AnnulusReport annuli_report(std::span<const PelletInterval> intervals, std::size_t m) {
  std::vector<const PelletInterval*> kept;
  for (const auto& iv : intervals)
    if (iv.has_roots()) kept.push_back(&iv);
  if (kept.empty()) throw NoBounds("no Pellet equation has a positive solution");

  AnnulusReport r;
  r.m = m;
  r.degree = intervals.empty() ? 0 : intervals.back().kappa;
  for (const auto* iv : kept) {
    r.indices.push_back(iv->kappa);
    if (iv->s < iv->t) r.exclusion.push_back({iv->s, iv->t, 0});
  }
  for (std::size_t i = 1; i < kept.size(); ++i)
    r.inclusion.push_back({kept[i - 1]->t, kept[i]->s, m * (kept[i]->kappa - kept[i - 1]->kappa)});

  const std::size_t h0 = kept.front()->kappa;
  const std::size_t hp = kept.back()->kappa;
  if (h0 > 0) {
    r.inner_disk = Annulus{0, kept.front()->s, m * h0};
    r.notes.push_back("no lower bound t_0; zero eigenvalues present (A_0 singular)");
  }
  if (hp < r.degree) {
    r.outer_region = Annulus{kept.back()->t, kInf, m * (r.degree - hp)};
    r.notes.push_back("no upper bound s_n; infinite eigenvalues present (A_n singular)");
  }
  return r;
}

double delta_max() { return (7 + 3 * kSqrt3) / 2 - std::sqrt(18 + 21 * kSqrt3 / 2); }

double optimal_radius() { return (3 + kSqrt3) / 2 + std::sqrt(2 + 7 * kSqrt3 / 6); }

LocalizationConstants LocalizationConstants::matrix() {
  return {1.0 / delta_max(), optimal_radius(), 2 + kSqrt2, true};
}

LocalizationConstants LocalizationConstants::scalar() { return {9.0, 3.0, 3.0, false}; }

double delta_plus(double r) {
  if (!(r > 2 + kSqrt2)) throw DomainError("delta_plus: r must exceed 2 + sqrt(2)");
  const double c = r * r - 4 * r + 2;
  return (-c + (r - 1) * std::sqrt(c)) / (r * (2 * r - 1));
}

double refine_radius(double delta) {
  if (!(delta >= 0) || !(delta < delta_max())) throw DomainError("refine_radius: need 0 <= delta < delta_max");
  double lo = 2 + kSqrt2;
  double hi = optimal_radius();
  if (delta == 0) return lo;
  if (delta_plus(hi) <= delta) return hi;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (delta_plus(mid) >= delta)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

Annulus refine_annulus(double delta, double epsilon, double base_radius) {
  return {base_radius / refine_radius(epsilon), base_radius * refine_radius(delta), 0};
}

Localization tropical_localize(const MatrixPolynomial& p, const NewtonPolygon& polygon,
                               const LocalizationConstants& k) {
  Localization out;
  for (const auto& a : p.coeffs()) {
    if ((a.array() == Complex(0.0)).all()) continue;
    const auto lu = lu_factor(a);
    const double rc = rcond_estimate(lu, norm2_or_frobenius(a).value);
    out.max_condition = std::max(out.max_condition, rc > 0 ? 1.0 / rc : kInf);
  }
  out.conditioning_warning = out.max_condition > kConditionWarning;

  const std::size_t q = polygon.edges();
  const auto m = static_cast<std::size_t>(p.size());
  const double threshold = 1.0 / k.f;
  for (std::size_t i = 1; i <= q; ++i) {
    const double r = polygon.radii[i - 1];
    const bool first = i == 1;
    const bool last = i == q;
    // epsilon = r_{i-1}/r_i and delta = r_i/r_{i+1} in log space.
    const double epsilon = first ? 0.0 : std::exp(polygon.log_radii[i - 2] - polygon.log_radii[i - 1]);
    const double delta = last ? 0.0 : std::exp(polygon.log_radii[i - 1] - polygon.log_radii[i]);

    LocalizedAnnulus la;
    la.edge = i;
    la.radius = r;
    la.applicable = (first || epsilon < threshold) && (last || delta < threshold);
    const double inner_factor = first ? k.g_endpoint : k.g;
    const double outer_factor = last ? k.g_endpoint : k.g;
    la.annulus = {r / inner_factor, r * outer_factor, m * polygon.multiplicities[i - 1]};
    la.refined = la.annulus;
    if (la.applicable && k.refinable) {
      if (!first) la.refined.inner = r / refine_radius(epsilon);
      if (!last) la.refined.outer = r * refine_radius(delta);
    }
    out.annuli.push_back(la);
  }
  return out;
}

}  // namespace polyeig
