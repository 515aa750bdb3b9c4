#include "hermicl/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hermicl/hermitean.hpp"

namespace hermicl {

double sphere_area(int n) {
  if (n < 1) throw std::invalid_argument("sphere_area: n must be >= 1");
  double fact = 1.0;
  for (int k = 2; k <= n - 1; ++k) fact *= double(k);
  return 2.0 * std::pow(M_PI, double(n)) / fact;
}

namespace {

// Shared scale -1 / (w_{2n} |X|^{2n}); throws inside the singularity guard.
double kernel_scale(const VectorR2n& X) {
  const double r = euclidean_norm(X);
  if (r < kKernelSingularityGuard) {
    throw std::domain_error("kernel evaluated at |X| = " + std::to_string(r) +
                            ", inside the singularity guard");
  }
  const int n = X.n();
  double rpow = 1.0;
  for (int k = 0; k < 2 * n; ++k) rpow *= r;
  return -1.0 / (sphere_area(n) * rpow);
}

}  // namespace

KernelValue kernel_E(const VectorR2n& X) {
  const double s = kernel_scale(X);
  Multivector out = embed_vector(X);
  out *= cplx(s, 0.0);
  return out;
}

KernelValue kernel_EJ(const VectorR2n& X) {
  const double s = kernel_scale(X);
  Multivector out = embed_vector(apply_J_vector(X));
  out *= cplx(s, 0.0);
  return out;
}

KernelValue kernel_eps(const VectorR2n& X) {
  const cplx i(0.0, 1.0);
  return -(kernel_E(X) + i * kernel_EJ(X));
}

KernelValue kernel_eps_dagger(const VectorR2n& X) {
  const cplx i(0.0, 1.0);
  return kernel_E(X) - i * kernel_EJ(X);
}

MatrixKernelValue matrix_kernel(const VectorR2n& X) {
  return CirculantPair(kernel_eps(X), kernel_eps_dagger(X));
}

}  // namespace hermicl
