#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hermicl/clifford.hpp"
#include "hermicl/hermitean.hpp"
#include "hermicl/kernels.hpp"
#include "test_support.hpp"

using namespace hermicl;
using hermicl_test::coeff_deviation;

namespace {

// Deterministic off-axis sample points, away from the singularity.
std::vector<VectorR2n> sample_points(int n) {
  if (n == 1) {
    return {VectorR2n{1.0, 0.0}, VectorR2n{0.3, -0.8}, VectorR2n{-1.7, 2.4},
            VectorR2n{0.05, 0.02}, VectorR2n{4.0, -3.0}};
  }
  return {VectorR2n{1.0, 0.0, 0.0, 0.0}, VectorR2n{0.3, -0.8, 0.5, 1.1},
          VectorR2n{-1.7, 2.4, -0.6, 0.9}, VectorR2n{0.07, -0.04, 0.05, 0.02},
          VectorR2n{2.0, 1.0, -3.0, 0.5}};
}

// Central finite difference of a kernel component along coordinate k.
Multivector fd_partial(KernelValue (*kernel)(const VectorR2n&), const VectorR2n& X, int k,
                       double h) {
  VectorR2n xp = X;
  VectorR2n xm = X;
  xp[k] += h;
  xm[k] -= h;
  Multivector diff = kernel(xp);
  diff -= kernel(xm);
  diff *= cplx(1.0 / (2.0 * h), 0.0);
  return diff;
}

// Finite-difference Dirac operator sum_k e_{k+1} d/dx_k applied to a kernel.
Multivector fd_dirac(KernelValue (*kernel)(const VectorR2n&), const VectorR2n& X, double h) {
  const int dim = X.dim2n();
  Multivector out(dim);
  for (int k = 0; k < dim; ++k) {
    out += Multivector::basis_blade(dim, BladeIndex(1) << k) * fd_partial(kernel, X, k, h);
  }
  return out;
}

// Finite-difference twisted Dirac sum_j (e_j d/dy_j - e_{n+j} d/dx_j).
Multivector fd_dirac_twisted(KernelValue (*kernel)(const VectorR2n&), const VectorR2n& X,
                             double h) {
  const int n = X.n();
  const int dim = 2 * n;
  Multivector out(dim);
  for (int j = 0; j < n; ++j) {
    out += Multivector::basis_blade(dim, BladeIndex(1) << j) * fd_partial(kernel, X, n + j, h);
    out -= Multivector::basis_blade(dim, BladeIndex(1) << (n + j)) * fd_partial(kernel, X, j, h);
  }
  return out;
}

}  // namespace

TEST_CASE("sphere_area matches the closed form 2 pi^n / (n-1)!") {
  CHECK(sphere_area(1) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
  CHECK(sphere_area(2) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-15));
  CHECK(sphere_area(3) == doctest::Approx(M_PI * M_PI * M_PI).epsilon(1e-15));
  CHECK_THROWS_AS(sphere_area(0), std::invalid_argument);
}

TEST_CASE("kernel_E at the unit point of R^2 is -e1 / (2 pi)") {
  const Multivector E = kernel_E(VectorR2n{1.0, 0.0});
  Multivector expect = Multivector::basis_blade(2, 1);
  expect *= cplx(-1.0 / (2.0 * M_PI), 0.0);
  CHECK(coeff_deviation(E, expect) <= 1e-16);
}

TEST_CASE("kernels are homogeneous of degree 1 - 2n") {
  const double lambdas[] = {0.5, 2.0, 3.7};
  for (int n = 1; n <= 2; ++n) {
    for (const VectorR2n& X : sample_points(n)) {
      for (double lam : lambdas) {
        const double scale = std::pow(lam, 1.0 - 2.0 * n);
        for (auto kernel : {&kernel_E, &kernel_EJ, &kernel_eps, &kernel_eps_dagger}) {
          Multivector ref = kernel(X);
          ref *= cplx(scale, 0.0);
          const Multivector scaled = kernel(lam * X);
          CHECK(coeff_deviation(scaled, ref) <= 1e-13 * norm(ref));
        }
      }
    }
  }
}

TEST_CASE("kernel_E is annihilated by the finite-difference Dirac operator") {
  const double h = 1e-5;
  for (int n = 1; n <= 2; ++n) {
    for (const VectorR2n& X : sample_points(n)) {
      const double scale = norm(kernel_E(X)) / euclidean_norm(X);
      const Multivector residual = fd_dirac(&kernel_E, X, h * euclidean_norm(X));
      CHECK(norm(residual) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("kernel_EJ is annihilated by the finite-difference twisted Dirac operator") {
  const double h = 1e-5;
  for (int n = 1; n <= 2; ++n) {
    for (const VectorR2n& X : sample_points(n)) {
      const double scale = norm(kernel_EJ(X)) / euclidean_norm(X);
      const Multivector residual = fd_dirac_twisted(&kernel_EJ, X, h * euclidean_norm(X));
      CHECK(norm(residual) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("kernel_eps equals (2 / w_2n) Z / |X|^2n and eps_dagger the conjugate form") {
  for (int n = 1; n <= 2; ++n) {
    for (const VectorR2n& X : sample_points(n)) {
      const double r = euclidean_norm(X);
      const double scale = 2.0 / (sphere_area(n) * std::pow(r, 2.0 * n));
      const HermiteanVars vars = hermitean_vars(X);

      Multivector z_form = vars.Z;
      z_form *= cplx(scale, 0.0);
      CHECK(coeff_deviation(kernel_eps(X), z_form) <= 1e-14 * norm(z_form));

      Multivector zdag_form = vars.Zdag;
      zdag_form *= cplx(scale, 0.0);
      CHECK(coeff_deviation(kernel_eps_dagger(X), zdag_form) <= 1e-14 * norm(zdag_form));
    }
  }
}

TEST_CASE("kernel_eps and kernel_eps_dagger recombine to E and EJ") {
  const cplx i(0.0, 1.0);
  for (int n = 1; n <= 2; ++n) {
    for (const VectorR2n& X : sample_points(n)) {
      // eps = -(E + i EJ) and eps_dagger = E - i EJ, so
      // E = (eps_dagger - eps) / 2 and i EJ = -(eps + eps_dagger) / 2.
      Multivector e_comb = kernel_eps_dagger(X) - kernel_eps(X);
      e_comb *= cplx(0.5, 0.0);
      CHECK(coeff_deviation(e_comb, kernel_E(X)) <= 1e-15 * norm(e_comb));

      Multivector ej_comb = kernel_eps(X) + kernel_eps_dagger(X);
      ej_comb *= cplx(-0.5, 0.0) / i;
      CHECK(coeff_deviation(ej_comb, kernel_EJ(X)) <= 1e-15 * norm(ej_comb));
    }
  }
}

TEST_CASE("matrix_kernel packages the circulant pair (eps, eps_dagger)") {
  for (int n = 1; n <= 2; ++n) {
    for (const VectorR2n& X : sample_points(n)) {
      const MatrixKernelValue mk = matrix_kernel(X);
      CHECK(coeff_deviation(mk.a, kernel_eps(X)) == 0.0);
      CHECK(coeff_deviation(mk.b, kernel_eps_dagger(X)) == 0.0);
    }
  }
}

TEST_CASE("kernels reject arguments inside the singularity guard") {
  CHECK_THROWS_AS(kernel_E(VectorR2n(1)), std::domain_error);
  CHECK_THROWS_AS(kernel_E(VectorR2n{1e-13, 0.0}), std::domain_error);
  CHECK_THROWS_AS(kernel_eps(VectorR2n{0.0, 0.0, 0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(matrix_kernel(VectorR2n{0.0, 1e-14}), std::domain_error);
  CHECK_NOTHROW(kernel_E(VectorR2n{1e-11, 0.0}));
}
