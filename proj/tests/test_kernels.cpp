#include <doctest.h>

#include "support.hpp"

using namespace polyeig;

namespace {

ComplexMatrix seeded(Eigen::Index m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return gaussian_matrix(m, m, rng);
}

}  // namespace

TEST_CASE("lu_factor of the identity") {
  const auto f = lu_factor(ComplexMatrix::Identity(2, 2));
  CHECK_FALSE(f.singular);
  CHECK(f.log_abs_det == 0.0);
  CHECK(f.lower().isIdentity());
  CHECK(f.upper().isIdentity());
  CHECK(f.perm_sign == 1);
}

TEST_CASE("lu_factor of a permutation swaps once") {
  ComplexMatrix p(2, 2);
  p << 0, 1, 1, 0;
  const auto f = lu_factor(p);
  CHECK_FALSE(f.singular);
  CHECK(f.perm_sign == -1);
  CHECK(f.perm[0] == 1);
  CHECK(f.log_abs_det == doctest::Approx(0.0));
}

TEST_CASE("lu_factor reconstructs P A") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const ComplexMatrix a = seeded(5, seed);
    const auto f = lu_factor(a);
    const double err = (f.permute(a) - f.lower() * f.upper()).norm() / a.norm();
    CHECK(err <= 1e-12);
    CHECK(f.log_abs_det == doctest::Approx(std::log(std::abs(a.determinant()))).epsilon(1e-10));
  }
}

TEST_CASE("lu_factor flags singular matrices") {
  ComplexMatrix a(2, 2);
  a << 1, 2, 2, 4;
  const auto f = lu_factor(a);
  CHECK(f.singular);
  CHECK(std::isinf(f.log_abs_det));
  CHECK(f.log_abs_det < 0);
  CHECK_THROWS_AS(lu_solve(f, ComplexMatrix::Identity(2, 2)), SingularMatrix);
  CHECK(rcond_estimate(f, 1.0) == 0.0);
}

TEST_CASE("lu_factor accepts expressions and other scalar types") {
  const ComplexMatrix a = seeded(3, 7);
  const auto f = lu_factor(a * 2.0 - ComplexMatrix::Identity(3, 3));
  CHECK_FALSE(f.singular);
  Eigen::MatrixXf r(2, 2);
  r << 4, 1, 2, 3;
  const auto g = lu_factor(r);
  CHECK(std::exp(g.log_abs_det) == doctest::Approx(10.0f).epsilon(1e-5));
}

TEST_CASE("lu_solve") {
  const ComplexMatrix b = seeded(3, 11);
  CHECK((lu_solve(lu_factor(ComplexMatrix::Identity(3, 3)), b) - b).norm() == 0.0);
  const ComplexMatrix two = 2.0 * ComplexMatrix::Identity(3, 3);
  CHECK((lu_solve(lu_factor(two), ComplexMatrix::Identity(3, 3)) - 0.5 * ComplexMatrix::Identity(3, 3)).norm() == 0.0);

  const ComplexMatrix a = seeded(4, 12);
  const ComplexMatrix rhs = seeded(4, 13);
  const ComplexMatrix x = lu_solve(lu_factor(a), rhs);
  CHECK((a * x - rhs).norm() <= 1e-10 * a.norm() * x.norm());
}

TEST_CASE("spectral_norm examples") {
  CHECK(spectral_norm(3.5 * random_unitary(4, 9)) == doctest::Approx(3.5).epsilon(1e-12));
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 3;
  CHECK(spectral_norm(d) == doctest::Approx(3.0).epsilon(1e-12));
  ComplexMatrix j = ComplexMatrix::Zero(2, 2);
  j(0, 1) = 2;
  CHECK(spectral_norm(j) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(spectral_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
  CHECK_THROWS_AS(spectral_norm(ComplexMatrix(0, 0)), BadInput);
}

TEST_CASE("spectral_norm matches the SVD") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ComplexMatrix a = seeded(1 + static_cast<Eigen::Index>(seed % 6), seed);
    CHECK(spectral_norm(a) == doctest::Approx(support::svd_norm(a)).epsilon(1e-9));
  }
}

TEST_CASE("spectral_norm recovers from an all-ones start orthogonal to the top singular vector") {
  // Right singular vector (1, -1) / sqrt 2 for the largest singular value.
  ComplexMatrix a(2, 2);
  a << 2, -2, 0.5, 0.5;
  CHECK(spectral_norm(a) == doctest::Approx(support::svd_norm(a)).epsilon(1e-10));
}

TEST_CASE("norm2_or_frobenius reports no degradation on ordinary input") {
  const auto e = norm2_or_frobenius(seeded(4, 3));
  CHECK_FALSE(e.degraded);
  CHECK(e.value > 0);
}

TEST_CASE("rcond_estimate") {
  const ComplexMatrix i3 = ComplexMatrix::Identity(3, 3);
  CHECK(rcond_estimate(lu_factor(i3), 1.0) == doctest::Approx(1.0));
  for (double c : {1e-8, -3.0, 7e5}) {
    const ComplexMatrix a = c * i3;
    CHECK(rcond_estimate(lu_factor(a), spectral_norm(a)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  ComplexMatrix d = ComplexMatrix::Identity(2, 2);
  d(1, 1) = 1e-12;
  CHECK(rcond_estimate(lu_factor(d), spectral_norm(d)) == doctest::Approx(1e-12).epsilon(1e-6));

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ComplexMatrix a = seeded(5, 100 + seed);
    const double est = rcond_estimate(lu_factor(a), spectral_norm(a));
    const double exact = support::svd_rcond(a);
    CHECK(est <= 4 * exact);
    CHECK(est >= exact / 4);
  }
}

TEST_CASE("random_unitary") {
  const ComplexMatrix q1 = random_unitary(1, 5);
  CHECK(std::abs(q1(0, 0)) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(random_unitary(4, 77) == random_unitary(4, 77));
  CHECK(random_unitary(4, 77) != random_unitary(4, 78));

  const ComplexMatrix q = random_unitary(6, 42);
  CHECK((q.adjoint() * q - ComplexMatrix::Identity(6, 6)).norm() <= 1e-12);
  CHECK(std::abs(lu_factor(q).log_abs_det) <= 1e-10);
  CHECK_THROWS_AS(random_unitary(0, 1), BadInput);
}

TEST_CASE("SplitMix64 and split_seed are deterministic") {
  SplitMix64 a(123), b(123);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  CHECK(split_seed(1, 0) == split_seed(1, 0));
  CHECK(split_seed(1, 0) != split_seed(1, 1));
  CHECK(split_seed(1, 0) != split_seed(2, 0));
  SplitMix64 u(9);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x > 0.0);
    CHECK(x <= 1.0);
  }
}
