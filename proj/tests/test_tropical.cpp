#include <doctest.h>

#include <sstream>

#include "support.hpp"

using namespace polyeig;

namespace {

const std::vector<double> kQuintic{1.0, 1e3, 1e-2, 1.0, 1e6, 1.0};

std::vector<HullPoint> points(const std::vector<double>& ordinates) {
  std::vector<HullPoint> out;
  for (std::size_t i = 0; i < ordinates.size(); ++i) out.push_back({i, ordinates[i]});
  return out;
}

MatrixPolynomial scalar(const std::vector<double>& c) {
  std::vector<ComplexMatrix> cs;
  for (double v : c) cs.push_back(ComplexMatrix::Constant(1, 1, v));
  return MatrixPolynomial::normalize(cs);
}

}  // namespace

TEST_CASE("upper_hull examples") {
  std::vector<double> logs;
  for (double v : kQuintic) logs.push_back(std::log(v));
  CHECK(upper_hull(points(logs)) == std::vector<std::size_t>{0, 1, 4, 5});
  CHECK(upper_hull(points({0.0, 1.0})) == std::vector<std::size_t>{0, 1});
  CHECK(upper_hull(points({2.0, 2.0, 2.0, 2.0})) == std::vector<std::size_t>{0, 3});
  CHECK(upper_hull(points({0.0, 1.0, 2.0, 3.0})) == std::vector<std::size_t>{0, 3});
  const double ninf = -std::numeric_limits<double>::infinity();
  CHECK(upper_hull(points({0.0, ninf, 0.0})) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("upper_hull rejects degenerate input") {
  CHECK_THROWS_AS(upper_hull(points({1.0})), DegenerateInput);
  const double ninf = -std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(upper_hull(points({ninf, 0.0})), BadInput);
  std::vector<HullPoint> unordered{{1, 0.0}, {0, 1.0}};
  CHECK_THROWS_AS(upper_hull(unordered), BadInput);
}

TEST_CASE("tropical_roots of the sample quintic") {
  const auto poly = tropical_roots(std::span<const double>(kQuintic));
  CHECK(poly.vertices == std::vector<std::size_t>{0, 1, 4, 5});
  CHECK(poly.multiplicities == std::vector<std::size_t>{1, 3, 1});
  REQUIRE(poly.radii.size() == 3);
  CHECK(poly.radii[0] == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(poly.radii[1] == doctest::Approx(1e-1).epsilon(1e-12));
  CHECK(poly.radii[2] == doctest::Approx(1e6).epsilon(1e-12));
  CHECK(poly.degree() == 5);
}

TEST_CASE("tropical_roots small cases") {
  const std::vector<double> lin{1.0, 1.0};
  auto p = tropical_roots(std::span<const double>(lin));
  CHECK(p.radii == std::vector<double>{1.0});
  CHECK(p.multiplicities == std::vector<std::size_t>{1});

  const std::vector<double> gap{1.0, 0.0, 1.0};
  p = tropical_roots(std::span<const double>(gap));
  CHECK(p.radii.size() == 1);
  CHECK(p.radii[0] == doctest::Approx(1.0));
  CHECK(p.multiplicities == std::vector<std::size_t>{2});

  const std::vector<double> constant{3.0};
  CHECK_THROWS_AS(tropical_roots(std::span<const double>(constant)), DegenerateInput);
  const std::vector<double> bad{1.0, -1.0, 1.0};
  CHECK_THROWS_AS(tropical_roots(std::span<const double>(bad)), BadInput);
}

TEST_CASE("tropical_roots survives 40 orders of magnitude") {
  const auto sigma = default_sigma();
  const auto poly = tropical_roots(std::span<const double>(sigma));
  CHECK(poly.vertices == std::vector<std::size_t>{0, 1, 2, 3, 9, 13});
  CHECK(poly.multiplicities == std::vector<std::size_t>{1, 1, 1, 6, 4});
  CHECK(poly.radii[0] == doctest::Approx(1.0 / 3e5).epsilon(1e-12));
  CHECK(poly.radii[3] == doctest::Approx(std::pow(1e-25, 1.0 / 6)).epsilon(1e-12));
  CHECK(poly.radii[4] == doctest::Approx(1e10).epsilon(1e-12));
}

TEST_CASE("polygon radii are recomputable from the vertices") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> w(2 + trial % 7);
    for (auto& v : w) v = rng.uniform() < 0.2 ? 0.0 : support::log_uniform(rng, 1e-8, 1e8);
    w.front() = support::log_uniform(rng, 1e-3, 1e3);
    w.back() = support::log_uniform(rng, 1e-3, 1e3);
    const auto poly = tropical_roots(std::span<const double>(w));
    std::size_t total = 0;
    for (std::size_t e = 0; e < poly.edges(); ++e) {
      const std::size_t a = poly.vertices[e], b = poly.vertices[e + 1];
      const double r = std::pow(w[a] / w[b], 1.0 / static_cast<double>(b - a));
      CHECK(poly.radii[e] == doctest::Approx(r).epsilon(1e-12));
      if (e > 0) CHECK(poly.radii[e] >= poly.radii[e - 1]);
      total += poly.multiplicities[e];
      // No coefficient lies above the edge.
      for (std::size_t i = a; i <= b; ++i)
        CHECK(w[i] * std::pow(r, static_cast<double>(i)) <= w[a] * std::pow(r, static_cast<double>(a)) * (1 + 1e-9));
    }
    CHECK(total == w.size() - 1);
  }
}

TEST_CASE("write_polygon_tsv") {
  const auto poly = tropical_roots(std::span<const double>(kQuintic));
  std::ostringstream out;
  write_polygon_tsv(out, kQuintic, poly);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "i\tlog_w\tvertex");
  std::vector<int> flags;
  while (std::getline(in, line)) flags.push_back(line.back() - '0');
  CHECK(flags == std::vector<int>{1, 1, 0, 0, 1, 1});

  const std::vector<double> gap{1.0, 0.0, 1.0};
  std::ostringstream g;
  write_polygon_tsv(g, gap, tropical_roots(std::span<const double>(gap)));
  CHECK(g.str().find("1\t-inf\t0") != std::string::npos);
}

TEST_CASE("uv_bounds examples") {
  const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
  const auto p = MatrixPolynomial::normalize({-2.0 * eye, eye});
  const auto b1 = uv_bounds(p, 1);
  CHECK(b1.defined);
  CHECK(b1.u == doctest::Approx(2.0));
  CHECK(std::isinf(b1.v));
  const auto b0 = uv_bounds(p, 0);
  CHECK(b0.u == 0.0);
  CHECK(b0.v == doctest::Approx(2.0));
  CHECK_THROWS_AS(uv_bounds(p, 2), BadInput);

  ComplexMatrix sing = ComplexMatrix::Zero(2, 2);
  sing(0, 0) = 1;
  CHECK_FALSE(uv_bounds(MatrixPolynomial::normalize({sing, eye}), 0).defined);
}

TEST_CASE("vertex_set examples") {
  const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
  const auto s = vertex_set(MatrixPolynomial::normalize({-2.0 * eye, eye}));
  REQUIRE(s.size() == 2);
  CHECK(s[0].kappa == 0);
  CHECK(s[1].kappa == 1);

  const auto scalar_set = vertex_set(scalar(kQuintic));
  std::vector<std::size_t> ks;
  for (const auto& b : scalar_set) ks.push_back(b.kappa);
  CHECK(ks == std::vector<std::size_t>{0, 1, 4, 5});

  const auto q = support::q_class(kQuintic, 3, 5);
  const auto qs = vertex_set(q);
  ks.clear();
  for (const auto& b : qs) ks.push_back(b.kappa);
  CHECK(ks == std::vector<std::size_t>{0, 1, 4, 5});
  const auto poly = tropical_roots(norm_majorant(q));
  for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
    CHECK(qs[i].v == doctest::Approx(qs[i + 1].u).epsilon(1e-10));
    CHECK(qs[i].v == doctest::Approx(poly.radii[i]).epsilon(1e-10));
  }
}

TEST_CASE("vertex_set with every coefficient singular") {
  ComplexMatrix sing = ComplexMatrix::Zero(2, 2);
  sing(0, 0) = 1;
  ComplexMatrix other = ComplexMatrix::Zero(2, 2);
  other(1, 0) = 1;
  CHECK_THROWS_AS(vertex_set(MatrixPolynomial::normalize({sing, other})), EmptyVertexSet);
}

TEST_CASE("uv_polygon") {
  const auto q = support::q_class(kQuintic, 2, 1);
  const auto s = vertex_set(q);
  const auto poly = uv_polygon(s, q.degree());
  REQUIRE(poly);
  const auto trop = tropical_roots(norm_majorant(q));
  CHECK(poly->vertices == trop.vertices);
  for (std::size_t e = 0; e < trop.edges(); ++e) CHECK(poly->radii[e] == doctest::Approx(trop.radii[e]).epsilon(1e-10));
  CHECK_FALSE(uv_polygon(std::span<const UVBounds>(s).subspan(1), q.degree()));
}
