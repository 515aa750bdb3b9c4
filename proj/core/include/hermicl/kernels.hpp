#ifndef HERMICL_KERNELS_HPP
#define HERMICL_KERNELS_HPP

#include "hermicl/clifford.hpp"

/**
 * Cauchy-type kernels on R^{2n}: the monogenic kernel E and its twisted
 * companion E|, the Hermitean combinations eps and eps^dagger, and the
 * circulant matrix kernel built from them. All are homogeneous of degree
 * 1-2n and singular only at the origin.
 */
namespace hermicl {

/** KernelValue is a grade-1 (possibly complex) multivector of dimension 2n. */
using KernelValue = Multivector;

/** MatrixKernelValue is the circulant pair (eps, eps^dagger). */
using MatrixKernelValue = CirculantPair;

/** Surface area of the unit sphere S^{2n-1}: 2 pi^n / (n-1)!. */
double sphere_area(int n);

/** Arguments closer to the origin than this raise std::domain_error. */
inline constexpr double kKernelSingularityGuard = 1e-12;

/**
 * E(X) = conj(X) / (w_{2n} |X|^{2n}) = -X / (w_{2n} |X|^{2n}); left monogenic
 * away from the origin. Throws std::domain_error within the singularity guard.
 */
KernelValue kernel_E(const VectorR2n& X);

/** Twisted kernel E|(X) = -J[X] / (w_{2n} |X|^{2n}); annihilated by the twisted Dirac operator. */
KernelValue kernel_EJ(const VectorR2n& X);

/**
 * Hermitean kernel eps = -(E + i E|). Equals (2/w_{2n}) Z / |X|^{2n} where
 * Z is the Hermitean variable of X and |X|^2 = Z Zdag + Zdag Z.
 */
KernelValue kernel_eps(const VectorR2n& X);

/** Hermitean kernel eps^dagger = E - i E|. */
KernelValue kernel_eps_dagger(const VectorR2n& X);

/** Circulant matrix kernel (eps, eps^dagger); fundamental solution of the Hermitean Dirac matrix. */
MatrixKernelValue matrix_kernel(const VectorR2n& X);

}  // namespace hermicl

#endif
