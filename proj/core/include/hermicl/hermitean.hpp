#ifndef HERMICL_HERMITEAN_HPP
#define HERMICL_HERMITEAN_HPP

#include <map>
#include <vector>

#include "hermicl/clifford.hpp"

/**
 * Hermitean structure on R^{2n}: the complex structure J pairing e_j with
 * e_{n+j}, the Witt basis and its idempotents, the Hermitean vector
 * variables, and exact Dirac / Hermitean-Dirac differentiation on
 * multivector-coefficient polynomials.
 */
namespace hermicl {

/**
 * Complex structure on coordinates: (x, y) -> (y, -x) blockwise, matching
 * J[e_j] = -e_{n+j} and J[e_{n+j}] = e_j on the embedded basis. J^2 = -id
 * and J X is orthogonal to X.
 */
VectorR2n apply_J_vector(const VectorR2n& X);

struct HermiteanVars {
  Multivector Z;     // (1/2)(X + i X|), isotropic
  Multivector Zdag;  // -(1/2)(X - i X|), isotropic
};

/**
 * Hermitean Clifford variables of a point. Z Zdag + Zdag Z equals |X|^2
 * times the identity and both squares vanish.
 */
HermiteanVars hermitean_vars(const VectorR2n& X);

/**
 * Witt basis f_j = (1/2)(e_j - i e_{n+j}), f_j^dagger = -(1/2)(e_j + i e_{n+j})
 * in C_{2n}; satisfies the Grassmann identities (anticommutation within each
 * family) and the duality identities f_j f_k^dagger + f_k^dagger f_j = delta_jk.
 */
struct WittBasis {
  int n;
  std::vector<Multivector> f;
  std::vector<Multivector> f_dag;
};

WittBasis witt_basis(int n);

/** Idempotent I_j = f_j f_j^dagger = (1/2)(1 - i e_j e_{n+j}); self-adjoint primitive. */
Multivector witt_idempotent(const WittBasis& basis, int j);

/**
 * Multivariate polynomial in (x_1..x_n, y_1..y_n) with multivector
 * coefficients; the exact carrier for the differential operators. Zero
 * coefficients are not stored.
 */
class MultivectorPolynomial {
 public:
  using Exponents = std::vector<int>;  // length 2n, ordered (x_1..x_n, y_1..y_n)

  explicit MultivectorPolynomial(int n);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const std::map<Exponents, Multivector>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /** Adds coeff * x^e to the polynomial, dropping the term if it cancels. */
  void add_term(const Exponents& e, const Multivector& coeff);

  MultivectorPolynomial& operator+=(const MultivectorPolynomial& rhs);
  MultivectorPolynomial& operator-=(const MultivectorPolynomial& rhs);
  MultivectorPolynomial& operator*=(cplx s);

  friend MultivectorPolynomial operator+(MultivectorPolynomial a,
                                         const MultivectorPolynomial& b) {
    return a += b;
  }
  friend MultivectorPolynomial operator-(MultivectorPolynomial a,
                                         const MultivectorPolynomial& b) {
    return a -= b;
  }

  /** Partial derivative with respect to coordinate var in [0, 2n). */
  MultivectorPolynomial derivative(int var) const;

  /** Left multiplication of every coefficient by a fixed multivector. */
  MultivectorPolynomial left_multiplied(const Multivector& m) const;

  Multivector evaluate(const VectorR2n& X) const;

  /** Euclidean norm of all stored coefficients, used for relative residuals. */
  double coefficient_norm() const;

 private:
  int n_;
  std::map<Exponents, Multivector> terms_;
};

/** Dirac operator: sum_j e_j d/dx_j + e_{n+j} d/dy_j, acting by left multiplication. */
MultivectorPolynomial dirac(const MultivectorPolynomial& P);

/** Twisted Dirac operator J[dirac]: sum_j e_j d/dy_j - e_{n+j} d/dx_j. */
MultivectorPolynomial dirac_J(const MultivectorPolynomial& P);

/**
 * Hermitean Dirac operator sum_j f_j^dagger d/dz_j with
 * d/dz_j = (1/2)(d/dx_j - i d/dy_j); equals -(1/4)(dirac - i dirac_J).
 */
MultivectorPolynomial dirac_Z(const MultivectorPolynomial& P);

/**
 * Hermitean Dirac operator sum_j f_j d/dz_j^c with
 * d/dz_j^c = (1/2)(d/dx_j + i d/dy_j); equals (1/4)(dirac + i dirac_J).
 */
MultivectorPolynomial dirac_Zdag(const MultivectorPolynomial& P);

/** Componentwise Laplacian sum_j d^2/dx_j^2 + d^2/dy_j^2. */
MultivectorPolynomial laplacian(const MultivectorPolynomial& P);

}  // namespace hermicl

#endif
