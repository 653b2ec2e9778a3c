#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ckron/ckron.hpp"
#include "test_support.hpp"

using namespace ckron;
using testing::Rng;

namespace {
const Tolerances tol;
const cdouble kI{0.0, 1.0};
}

TEST_CASE("scalar_cayley: fixed values and unit modulus") {
  CHECK(std::abs(scalar_cayley(0.0) - cdouble{-1.0, 0.0}) <= 1e-15);
  CHECK(std::abs(scalar_cayley(1.0) - cdouble{0.0, -1.0}) <= 1e-15);

  Rng rng(201);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const cdouble u = scalar_cayley(dist(rng));
    CHECK(std::abs(std::abs(u) - 1.0) <= 1e-12);
    CHECK(std::abs(u - 1.0) > 1e-8);
  }
}

TEST_CASE("scalar_inverse_cayley: fixed values, round trip, and rejections") {
  CHECK(scalar_inverse_cayley(cdouble{-1.0, 0.0}, tol) == doctest::Approx(0.0));
  CHECK(scalar_inverse_cayley(cdouble{0.0, -1.0}, tol) == doctest::Approx(1.0));

  Rng rng(202);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double lambda = dist(rng);
    CHECK(scalar_inverse_cayley(scalar_cayley(lambda), tol) ==
          doctest::Approx(lambda).epsilon(1e-9));
  }

  CHECK_THROWS_AS(scalar_inverse_cayley(cdouble{1.0, 0.0}, tol), UnitEigenvalue);
  CHECK_THROWS_AS(scalar_inverse_cayley(std::polar(1.0, 1e-10), tol), UnitEigenvalue);
  CHECK_THROWS_AS(scalar_inverse_cayley(cdouble{0.5, 0.0}, tol), NotUnitModulus);
}

TEST_CASE("cayley: fixed matrices") {
  CHECK(max_abs_diff(cayley(CMatrix::identity(3), tol), -kI * CMatrix::identity(3)) <= tol.eq);
  CHECK(max_abs_diff(cayley(CMatrix::zero(4, 4), tol), -CMatrix::identity(4)) <= tol.eq);

  const CMatrix sigma1{{0.0, 1.0}, {1.0, 0.0}};
  CHECK(max_abs_diff(cayley(sigma1, tol), -kI * sigma1) <= tol.eq);

  CHECK_THROWS_AS(cayley(CMatrix{{0.0, 1.0}, {0.0, 0.0}}, tol), NotHermitian);
}

TEST_CASE("cayley: output is unitary without eigenvalue 1") {
  Rng rng(203);
  for (int trial = 0; trial < 25; ++trial) {
    const auto pair = make_cayley_pair(testing::random_hermitian(2 + trial % 5, rng), tol);
    CHECK(is_unitary(pair.unitary, tol));
    CHECK_FALSE(has_unit_eigenvalue(pair.unitary, tol));
    CHECK(max_abs_diff(cayley(pair.hermitian, tol), pair.unitary) == 0.0);
  }
}

TEST_CASE("inverse_cayley: fixed cases and errors") {
  CHECK(max_abs_diff(inverse_cayley(-kI * CMatrix::identity(3), tol), CMatrix::identity(3)) <=
        tol.eq);
  CHECK_THROWS_AS(inverse_cayley(CMatrix::identity(3), tol), UnitEigenvalue);
  CHECK_THROWS_AS(inverse_cayley(2.0 * CMatrix::identity(2), tol), NotUnitary);
}

TEST_CASE("inverse_cayley: round trip on random Hermitian input") {
  Rng rng(204);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_hermitian(size(rng), rng);
    const auto round = inverse_cayley(cayley(a, tol), tol);
    CHECK(max_abs_diff(round, a) <= 1e2 * tol.eq);
    CHECK(max_abs_diff(round, round.adjoint()) <= tol.eq);
  }
}

TEST_CASE("cayley: similarity equivariance under unitary conjugation") {
  Rng rng(205);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto a = testing::random_hermitian(n, rng);
    const auto v = testing::random_unitary(n, rng);
    const auto conjugated = v * a * v.adjoint();
    CHECK(max_abs_diff(cayley(conjugated, tol), v * cayley(a, tol) * v.adjoint()) <= 1e2 * tol.eq);
  }
}

TEST_CASE("cayley: eigenvectors carry over with scalar-mapped eigenvalues") {
  Rng rng(206);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto a = testing::random_hermitian(n, rng);
    const auto s = hermitian_eig(a, tol);
    const auto u = cayley(a, tol);
    for (std::size_t j = 0; j < n; ++j) {
      const cdouble mapped = scalar_cayley(s.eigenvalues[j]);
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cdouble row = 0.0;
        for (std::size_t k = 0; k < n; ++k) row += u(i, k) * s.eigenvectors(k, j);
        worst = std::max(worst, std::abs(row - mapped * s.eigenvectors(i, j)));
      }
      CHECK(worst <= tol.eq);
    }
  }
}

TEST_CASE("cayley: commutation-matrix relation between the two product orders") {
  Rng rng(207);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t m = 2 + trial % 2, n = 2 + trial % 3;
    const auto a = testing::random_hermitian(m, rng);
    const auto b = testing::random_hermitian(n, rng);
    const CMatrix p = commutation_matrix(m, n);
    CHECK(max_abs_diff(cayley(kron(b, a), tol), p * cayley(kron(a, b), tol) * p.transpose()) <=
          1e2 * tol.eq);
  }
}

TEST_CASE("cayley: commuting inputs give commuting transforms") {
  Rng rng(208);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto v = testing::random_unitary(n, rng);
    std::vector<double> d1(n), d2(n);
    for (std::size_t i = 0; i < n; ++i) {
      d1[i] = dist(rng);
      d2[i] = dist(rng);
    }
    const CMatrix a = v * CMatrix::diagonal(d1) * v.adjoint();
    const CMatrix b = v * CMatrix::diagonal(d2) * v.adjoint();
    REQUIRE(max_abs_diff(a * b, b * a) <= tol.eq);

    const auto ua = cayley(a, tol);
    const auto ub = cayley(b, tol);
    CHECK(max_abs_diff(ua * ub, ub * ua) <= 10.0 * tol.eq);
  }
}

TEST_CASE("cayley: direct-sum and star-product homomorphisms") {
  Rng rng(209);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a2 = testing::random_hermitian(2, rng);
    const auto b = testing::random_hermitian(1 + trial % 4, rng);

    CHECK(max_abs_diff(cayley(direct_sum(a2, b), tol),
                       direct_sum(cayley(a2, tol), cayley(b, tol))) <= 1e2 * tol.eq);
    CHECK(max_abs_diff(cayley(star_product(a2, b), tol),
                       star_product(cayley(a2, tol), cayley(b, tol))) <= 1e2 * tol.eq);
  }
}

TEST_CASE("cayley: resolvent formula agrees with the spectral route") {
  Rng rng(210);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_hermitian(2 + trial % 5, rng);
    CHECK(max_abs_diff(cayley(a, tol), spectral_fn(a, scalar_cayley, tol)) <= 1e2 * tol.eq);
  }
}

TEST_CASE("phase_coincidence: the only matches have both eigenvalues in {-1, +1}") {
  const auto phi_identity = phase_coincidence(1.0, 0.0, 0.0, 0.0, tol);
  REQUIRE(phi_identity.has_value());
  CHECK(*phi_identity == doctest::Approx(-std::numbers::pi / 2.0));

  const auto phi_swap = phase_coincidence(0.0, 1.0, 0.0, 0.0, tol);
  REQUIRE(phi_swap.has_value());
  CHECK(*phi_swap == doctest::Approx(-std::numbers::pi / 2.0));

  CHECK_FALSE(phase_coincidence(2.0, 0.0, 0.0, 0.0, tol).has_value());
  CHECK_FALSE(phase_coincidence(0.3, 0.4, 0.1, 0.2, tol).has_value());

  // Mixed eigenvalues {+1, -1}: e.g. a=0, b=c=0, d=1 gives diag(1, -1).
  const auto phi_mixed = phase_coincidence(0.0, 0.0, 0.0, 1.0, tol);
  REQUIRE(phi_mixed.has_value());
  CHECK(*phi_mixed == doctest::Approx(-std::numbers::pi / 2.0));

  // Eigenvalues on the sphere b^2+c^2+d^2 = 1 with a = 0.
  const double r = 1.0 / std::sqrt(3.0);
  const auto phi_sphere = phase_coincidence(0.0, r, r, r, tol);
  REQUIRE(phi_sphere.has_value());
  CHECK(*phi_sphere == doctest::Approx(-std::numbers::pi / 2.0));
}
