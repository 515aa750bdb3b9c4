#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "hermicl/clifford.hpp"
#include "hermicl/surface.hpp"

namespace hermicl {

/// Matrix-valued boundary density sampled at mesh nodes.
///
/// All boundary operators below act on plain value arrays and take the mesh
/// explicitly, so densities can be shared between meshes of equal size in
/// tests. Values are circulant pairs; the diagonal/antidiagonal channel
/// decomposition (s, d) = (a + b, a - b) turns every circulant operator into
/// two independent one-component operators and is used internally throughout.
using BoundaryField = std::vector<CirculantPair>;

/// Channel extraction: s = a + b (returned first), d = a - b (second).
std::vector<Multivector> channel_sum(const BoundaryField& field);
std::vector<Multivector> channel_diff(const BoundaryField& field);

/// Recombines channels into pair values: a = (s+d)/2, b = (s-d)/2.
BoundaryField from_channels(const std::vector<Multivector>& s,
                            const std::vector<Multivector>& d);

/// Weighted sesquilinear inner product
///   <F, G> = sum_j w_j [ <F_j.a, G_j.a> + <F_j.b, G_j.b> ],
/// where <x, y> on multivectors is the Hermitian coefficient pairing, equal to
/// the scalar part of dagger(x) * y. Conjugate-linear in F.
cplx inner_product(const SurfaceMesh& mesh, const BoundaryField& F,
                   const BoundaryField& G);

/// sqrt(<F, F>); the norm used by every residual below.
double field_norm(const SurfaceMesh& mesh, const BoundaryField& F);

/// One-component principal-value transform, rotated variant using the twisted
/// kernel and twisted normal. On curve meshes (n = 1) this is the punctured
/// sum
///   (T L)(T_i) = sum_{j != i} 2 w_j E(Y_j - T_i) nu(Y_j) L(Y_j),
/// whose skipped diagonal realizes the discrete principal value. On n = 2
/// product grids the anisotropic local spacing breaks the odd-kernel
/// cancellation and the punctured sum alone diverges, so the constant-density
/// subtraction
///   (T L)_i = (P L)_i + L_i - (P 1)_i L_i
/// is used instead: constants are reproduced to within one rounding, at any
/// resolution, because the correction subtracts the very sum the punctured
/// rule adds; and the subtracted integrand is weakly singular, so the sum
/// converges on smooth densities.
std::vector<Multivector> hilbert_channel(const SurfaceMesh& mesh,
                                         const std::vector<Multivector>& density,
                                         bool rotated);

/// Matrix Hilbert transform H: s-channel gets the rotated one-component
/// transform, d-channel the plain one. Involution on smooth densities.
BoundaryField hilbert_transform(const SurfaceMesh& mesh, const BoundaryField& L);

/// Hardy projection C = (I + H) / 2 (boundary operator; the measure constant
/// of the interior integral is not included here).
BoundaryField hardy_projection(const SurfaceMesh& mesh, const BoundaryField& L);

/// Left multiplication by the normal field nu (channels: twisted normal on s,
/// plain normal on d). Satisfies nu(nu L) = -L exactly.
BoundaryField nu_multiply(const SurfaceMesh& mesh, const BoundaryField& L);

/// Projection fields alpha = (I + i nu)/2 and beta = (I - i nu)/2.
BoundaryField alpha_multiply(const SurfaceMesh& mesh, const BoundaryField& L);
BoundaryField beta_multiply(const SurfaceMesh& mesh, const BoundaryField& L);

/// How to realize the adjoint of H with respect to inner_product.
enum class AdjointPath {
  NuFormula,  ///< closed form nu H nu, plus the diagonal correction belonging
              ///< to the n = 2 subtraction; the exact discrete adjoint on any
              ///< mesh.
  Dense       ///< conjugate-transpose of the dense matrix in the weighted
              ///< metric; available for n = 1 meshes.
};

BoundaryField hilbert_adjoint(const SurfaceMesh& mesh, const BoundaryField& L,
                              AdjointPath path = AdjointPath::NuFormula);

/// Kerzman-Stein operator A L = (H L - H* L) / 2 = (C - C*) L, with H* the
/// closed-form adjoint. Skew-adjoint exactly; vanishes identically on
/// centered ball meshes.
BoundaryField kerzman_stein(const SurfaceMesh& mesh, const BoundaryField& L);

/// Interior Cauchy transform: value of the matrix kernel integral
///   (C L)(Y) = sum_j MatrixKernel(X_j - Y) * Measure_j * L_j
/// at interior points. Includes the dimensional measure constant, so for a
/// density in the Hardy class the non-tangential boundary value is
/// c_n * (Hardy projection of L). Throws std::domain_error if an evaluation
/// point is closer than kEvaluationGuard * mesh.spacing to a node.
std::vector<CirculantPair> cauchy_transform(const SurfaceMesh& mesh,
                                            const BoundaryField& L,
                                            const std::vector<VectorR2n>& points);

inline constexpr double kEvaluationGuard = 0.45;

/// Iterative solver controls for the Szego projection.
struct SolverConfig {
  double tol = 1e-10;   ///< relative residual target for GMRES
  int max_iter = 500;   ///< Krylov dimension cap
  bool force_dense = false;  ///< skip GMRES and use the dense factorization
};

struct SolverStats {
  int iterations = 0;        ///< total GMRES iterations over both channels
  double residual = 0.0;     ///< worst relative residual across channels
  bool used_dense_fallback = false;
};

/// Szego projection S = C (I + A)^{-1}. The resolvent is applied by GMRES on
/// each channel; if GMRES stalls (or force_dense is set) an LU factorization
/// of the dense channel operator is used for n = 1 meshes.
BoundaryField szego_projection(const SurfaceMesh& mesh, const BoundaryField& L,
                               const SolverConfig& config = {},
                               SolverStats* stats = nullptr);

/// Szego kernel values S(T_i, X_j) for a fixed row index i, recovered from the
/// dense realization of S by stripping quadrature weights. Requires n = 1.
BoundaryField szego_kernel_row(const SurfaceMesh& mesh, int row,
                               const SolverConfig& config = {});

/// Orthogonal boundary decomposition L = hardy + nu * conj with both parts in
/// the Hardy class; conj = -nu (L - hardy).
struct HardyDecomposition {
  BoundaryField hardy;
  BoundaryField conj;
};

HardyDecomposition hardy_decompose(const SurfaceMesh& mesh, const BoundaryField& L,
                                   const SolverConfig& config = {});

/// Quadrature calibration: the interior Cauchy transform of the constant
/// density at the origin reproduces the measure constant exactly on centered
/// ball meshes and to spectral accuracy on smooth star-shaped surfaces.
struct CalibrationResult {
  cplx c_hat;            ///< computed constant
  cplx c_analytic;       ///< closed-form constant for this n
  int orientation_sign;  ///< +1 when the mesh is positively oriented
  double deviation;      ///< |c_hat - orientation_sign * c_analytic|
};

CalibrationResult calibrate_cauchy_constant(const SurfaceMesh& mesh);

/// Harmonic extension of boundary data on the unit ball:
///   K(X) = G~(X) + Chi(X) * Hc~(X),
/// where L = G + nu Hc is the Hardy decomposition, G~ and Hc~ are interior
/// Cauchy transforms normalized by the calibrated constant, and Chi(X) is the
/// coordinate multiplier with channels (twisted position, position). Each term
/// is harmonic identically, and the boundary limit reconstructs L.
class DirichletSolution {
 public:
  DirichletSolution(SurfaceMesh mesh, BoundaryField hardy, BoundaryField conj,
                    cplx c_hat);

  /// Value of the extension at an interior point (|X| < 1, away from nodes).
  CirculantPair evaluate(const VectorR2n& X) const;

  const BoundaryField& hardy_part() const { return hardy_; }
  const BoundaryField& conjugate_part() const { return conj_; }
  cplx calibration() const { return c_hat_; }

 private:
  SurfaceMesh mesh_;
  BoundaryField hardy_;
  BoundaryField conj_;
  cplx c_hat_;
};

DirichletSolution dirichlet_solve_ball(const SurfaceMesh& mesh, const BoundaryField& L,
                                       const SolverConfig& config = {});

/// Boundary restriction of the matrix kernel with an exterior pole, optionally
/// right-multiplied by a constant pair: W(X) = MatrixKernel(X - pole) * R.
/// A Hardy-class witness on any surface enclosing the origin, provided
/// |pole| >= 1.5 * max_j |X_j| (enforced).
BoundaryField hardy_witness_field(const SurfaceMesh& mesh, const VectorR2n& pole,
                                  const CirculantPair* right_factor = nullptr);

/// max over node pairs of |<Y - T, nu(T) + nu(Y)>|: zero exactly on spheres,
/// order one otherwise.
double ball_geometry_residual(const SurfaceMesh& mesh);

/// Dense realization of the one-component transform on n = 1 meshes, acting on
/// node-major, blade-minor coefficient vectors (dimension 4 M).
Eigen::MatrixXcd dense_hilbert_channel(const SurfaceMesh& mesh, bool rotated);

/// Flattening between channel value arrays and coefficient vectors.
Eigen::VectorXcd flatten_channel(const std::vector<Multivector>& values);
std::vector<Multivector> unflatten_channel(const Eigen::VectorXcd& vec, int dim);

/// Restarted-free GMRES with modified Gram-Schmidt. Returns the iteration
/// count, final relative residual, and whether tol was met.
struct GmresResult {
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

GmresResult gmres(const std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>& matvec,
                  const Eigen::VectorXcd& rhs, Eigen::VectorXcd& x, double tol,
                  int max_iter);

}  // namespace hermicl
