#ifndef HERMICL_SURFACE_HPP
#define HERMICL_SURFACE_HPP

#include <array>
#include <string>
#include <vector>

#include "hermicl/clifford.hpp"

/**
 * Quadrature discretizations of smooth closed boundaries in R^{2n}: the
 * unit circle and ellipses (n=1), the unit 3-sphere and 4-axis ellipsoids
 * (n=2). Each mesh carries nodes, positive dS weights, outward unit normals
 * nu, and the rotated normals nu| = J[nu]. Node ordering is deterministic:
 * angle order on curves, lexicographic in (psi, theta, phi) on S^3 grids.
 */
namespace hermicl {

struct SurfaceMesh {
  int n = 1;                        // half-dimension; points live in R^{2n}
  std::string label;                // surface descriptor, e.g. "circle" or "ellipse a=2 b=1"
  std::vector<VectorR2n> nodes;
  std::vector<double> weights;      // dS quadrature weights, all positive
  std::vector<VectorR2n> normals;   // outward unit normals nu
  std::vector<VectorR2n> normals_J; // nu| = J[nu], stored for direct access
  double spacing = 0.0;             // max nearest-neighbour node distance

  std::size_t size() const { return nodes.size(); }
};

/** Uniform M-node quadrature on the unit circle; weights 2 pi / M, nu = node. */
SurfaceMesh mesh_circle(int M);

/**
 * Ellipse x^2/a^2 + y^2/b^2 = 1, M nodes uniform in parameter angle,
 * arc-length weights |X'(t)| 2 pi / M, exact implicit-gradient normals.
 */
SurfaceMesh mesh_ellipse(int M, double a, double b);

/**
 * Product-grid quadrature on the unit sphere S^3 in R^4 with resolution
 * (n_psi, n_theta, n_phi): midpoint in psi (exact for the sin^2 psi factor),
 * Gauss-Legendre in cos theta (weight sum exactly 2 pi^2), midpoint in phi.
 */
SurfaceMesh mesh_sphere_S3(int n_psi, int n_theta, int n_phi);

/**
 * Ellipsoid sum_i x_i^2 / a_i^2 = 1 in R^4, mapped from the S^3 grid;
 * dS scales by det(A) |A^{-1} u| and nu = A^{-1} u / |A^{-1} u|.
 */
SurfaceMesh mesh_ellipsoid_R4(int n_psi, int n_theta, int n_phi,
                              const std::array<double, 4>& axes);

/** Per-node Clifford surface measures derived from a mesh. */
struct SurfaceMeasure {
  std::vector<Multivector> sigma_X;     // embed(nu) * w
  std::vector<Multivector> sigma_XJ;    // embed(nu|) * w
  std::vector<Multivector> sigma_Z;     // -(1/4) c_n (sigma_X - i sigma_XJ)
  std::vector<Multivector> sigma_Zdag;  // -(1/4) c_n (sigma_X + i sigma_XJ)
  std::vector<CirculantPair> Sigma;     // circulant (sigma_Z, -sigma_Zdag)
};

/** The constant c_n = (-1)^{n(n+1)/2} (2i)^n entering the Hermitean measures. */
cplx hermitean_measure_constant(int n);

SurfaceMeasure surface_measures(const SurfaceMesh& mesh);

/**
 * Writes the mesh as CSV: a "# key=value" comment line with n and label,
 * one header row, then per node the 2n coordinates, the weight, and the 2n
 * normal components, each formatted with shortest round-trip precision so
 * a write/read/write cycle is byte-identical.
 */
void write_mesh_csv(const SurfaceMesh& mesh, const std::string& path);

/** Reads a mesh written by write_mesh_csv; nu| and spacing are recomputed. */
SurfaceMesh read_mesh_csv(const std::string& path);

/** Gauss-Legendre nodes and weights on [-1, 1]; deterministic Newton iteration. */
void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace hermicl

#endif
