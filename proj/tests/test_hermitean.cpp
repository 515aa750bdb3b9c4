#include <stdexcept>

#include "doctest.h"
#include "hermicl/harness.hpp"
#include "hermicl/hermitean.hpp"
#include "test_support.hpp"

using namespace hermicl;
using hermicl_test::coeff_deviation;
using hermicl_test::poly_rel_diff;

TEST_CASE("the complex structure squares to minus the identity") {
  const VectorR2n X{0.6, -1.1, 2.3, 0.9};
  const VectorR2n JX = apply_J_vector(X);
  const VectorR2n JJX = apply_J_vector(JX);
  for (int c = 0; c < 4; ++c) {
    CHECK(JJX[c] == doctest::Approx(-X[c]).epsilon(1e-15));
  }
  CHECK(dot(X, JX) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(euclidean_norm(JX) == doctest::Approx(euclidean_norm(X)).epsilon(1e-15));
}

TEST_CASE("witt basis satisfies the Grassmann and duality identities") {
  for (int n = 1; n <= 3; ++n) {
    const WittBasis basis = witt_basis(n);
    const int dim = 2 * n;
    const Multivector zero(dim);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // {f_j, f_k} = 0 and {f_j+, f_k+} = 0 (includes the square at j = k).
        CHECK(coeff_deviation(basis.f[j] * basis.f[k] + basis.f[k] * basis.f[j], zero) <
              1e-14);
        CHECK(coeff_deviation(
                  basis.f_dag[j] * basis.f_dag[k] + basis.f_dag[k] * basis.f_dag[j],
                  zero) < 1e-14);
        // {f_j, f_k+} = delta_jk.
        const Multivector anti = basis.f[j] * basis.f_dag[k] + basis.f_dag[k] * basis.f[j];
        const double expected = (j == k) ? 1.0 : 0.0;
        CHECK(coeff_deviation(anti, Multivector::scalar(dim, cplx(expected, 0.0))) < 1e-14);
      }
      // f_j+ really is the Hermitean dagger of f_j.
      CHECK(coeff_deviation(hermitean_dagger(basis.f[j]), basis.f_dag[j]) < 1e-15);
    }
  }
}

TEST_CASE("witt idempotents are self-adjoint and idempotent") {
  const WittBasis basis = witt_basis(2);
  for (int j = 0; j < 2; ++j) {
    const Multivector I = witt_idempotent(basis, j);
    CHECK(coeff_deviation(I * I, I) < 1e-15);
    CHECK(coeff_deviation(hermitean_dagger(I), I) < 1e-15);
  }
}

TEST_CASE("hermitean variables are isotropic and generate the squared length") {
  const VectorR2n X{1.3, -0.4, 0.8, 2.2};
  const HermiteanVars vars = hermitean_vars(X);
  const Multivector zero(4);
  CHECK(coeff_deviation(vars.Z * vars.Z, zero) < 1e-14);
  CHECK(coeff_deviation(vars.Zdag * vars.Zdag, zero) < 1e-14);
  const Multivector anti = vars.Z * vars.Zdag + vars.Zdag * vars.Z;
  CHECK(coeff_deviation(anti, Multivector::scalar(4, cplx(dot(X, X), 0.0))) < 1e-13);
  CHECK(coeff_deviation(hermitean_dagger(vars.Z), vars.Zdag) < 1e-15);
}

TEST_CASE("polynomial differentiation is exact on a frozen example") {
  // P = (x1^2 y1) e1 in n = 1.
  MultivectorPolynomial P(1);
  P.add_term({2, 1}, Multivector::basis_blade(2, 0b01));
  const MultivectorPolynomial dx = P.derivative(0);
  const MultivectorPolynomial dy = P.derivative(1);
  // d/dx1 -> 2 x1 y1 e1, d/dy1 -> x1^2 e1.
  REQUIRE(dx.terms().size() == 1);
  REQUIRE(dy.terms().size() == 1);
  CHECK(dx.terms().begin()->first == MultivectorPolynomial::Exponents{1, 1});
  CHECK(coeff_deviation(dx.terms().begin()->second,
                        cplx(2.0, 0.0) * Multivector::basis_blade(2, 0b01)) == 0.0);
  CHECK(dy.terms().begin()->first == MultivectorPolynomial::Exponents{2, 0});

  const VectorR2n X{1.5, -2.0};
  CHECK(coeff_deviation(P.evaluate(X),
                        cplx(1.5 * 1.5 * -2.0, 0.0) * Multivector::basis_blade(2, 0b01)) <
        1e-14);
}

TEST_CASE("dirac operators factor the laplacian on random polynomials") {
  for (int n = 1; n <= 2; ++n) {
    FieldRng rng(400 + std::uint64_t(n));
    for (int trial = 0; trial < 8; ++trial) {
      const MultivectorPolynomial P = random_polynomial(n, 4, rng);
      const MultivectorPolynomial lap = laplacian(P);
      const MultivectorPolynomial minus_lap = lap - lap - lap;  // -laplacian

      CHECK(poly_rel_diff(dirac(dirac(P)), minus_lap) < 1e-12);
      CHECK(poly_rel_diff(dirac_J(dirac_J(P)), minus_lap) < 1e-12);

      // The plain and twisted operators anticommute.
      const MultivectorPolynomial anti = dirac(dirac_J(P)) + dirac_J(dirac(P));
      CHECK(anti.coefficient_norm() <
            1e-12 * std::max(1.0, P.coefficient_norm()));
    }
  }
}

TEST_CASE("hermitean dirac operators are nilpotent and split the laplacian") {
  for (int n = 1; n <= 2; ++n) {
    FieldRng rng(500 + std::uint64_t(n));
    for (int trial = 0; trial < 8; ++trial) {
      const MultivectorPolynomial P = random_polynomial(n, 4, rng);
      const double scale = std::max(1.0, P.coefficient_norm());

      CHECK(dirac_Z(dirac_Z(P)).coefficient_norm() < 1e-12 * scale);
      CHECK(dirac_Zdag(dirac_Zdag(P)).coefficient_norm() < 1e-12 * scale);

      // {dZ, dZdag} = laplacian / 4.
      MultivectorPolynomial anti = dirac_Z(dirac_Zdag(P)) + dirac_Zdag(dirac_Z(P));
      anti *= cplx(4.0, 0.0);
      CHECK(poly_rel_diff(anti, laplacian(P)) < 1e-12);

      // 2 (dZdag - dZ) = dirac and -2i (dZdag + dZ) = twisted dirac.
      MultivectorPolynomial comb = dirac_Zdag(P) - dirac_Z(P);
      comb *= cplx(2.0, 0.0);
      CHECK(poly_rel_diff(comb, dirac(P)) < 1e-12);
      MultivectorPolynomial sum = dirac_Zdag(P) + dirac_Z(P);
      sum *= cplx(0.0, -2.0);
      CHECK(poly_rel_diff(sum, dirac_J(P)) < 1e-12);
    }
  }
}

TEST_CASE("polynomial API guards dimension mismatches") {
  MultivectorPolynomial P(1);
  CHECK_THROWS_AS(P.add_term({1, 0, 0, 0}, Multivector::scalar(2, cplx(1.0, 0.0))),
                  std::invalid_argument);
}
