#ifndef HERMICL_CLIFFORD_HPP
#define HERMICL_CLIFFORD_HPP

#include <complex>
#include <cstdint>
#include <vector>

/**
 * Dense arithmetic for the real Clifford algebra R_{0,m} and its
 * complexification C_{2n}: geometric product with the standard sign rule
 * for anticommuting generators of square -1, the main conjugation, the
 * Hermitean dagger, grading, and the coefficient norm.
 *
 * Basis blades are indexed by bitmasks over the generators: bit j-1 of a
 * BladeIndex marks the presence of e_j, so the empty mask is the identity
 * blade and a full mask is the pseudoscalar. Coefficients are complex
 * throughout; the real algebra is the zero-imaginary-part subset.
 */
namespace hermicl {

using cplx = std::complex<double>;

/** Subset of {1..m} encoded as an m-bit set; bit j-1 marks generator e_j. */
using BladeIndex = std::uint32_t;

/** Largest supported number of generators (dense storage is 2^m). */
inline constexpr int kMaxDim = 8;

/** Number of generators in a blade. */
int blade_grade(BladeIndex mask);

struct BladeProduct {
  int sign;          // +1 or -1
  BladeIndex blade;  // symmetric difference of the factors
};

/**
 * Product of two basis blades: e_a e_b = sign * e_{a XOR b}.
 *
 * The sign combines the metric factor (-1)^{|a AND b|} from e_i^2 = -1 with
 * the reordering factor (-1)^{P(a,b)}, P(a,b) = sum over j in b of the
 * number of i in a with i > j.
 *
 * Throws std::invalid_argument if a blade does not fit in dim generators.
 */
BladeProduct blade_product_sign(BladeIndex a, BladeIndex b, int dim);

/** Element of R_{0,m} / C_m with dense complex coefficients over 2^m blades. */
class Multivector {
 public:
  /** Zero element of the algebra with m = dim generators (0 <= dim <= 8). */
  explicit Multivector(int dim);

  static Multivector scalar(int dim, cplx value);
  static Multivector basis_blade(int dim, BladeIndex blade);

  int dim() const { return dim_; }
  std::size_t ncoeffs() const { return coeffs_.size(); }

  cplx operator[](BladeIndex blade) const { return coeffs_[blade]; }
  cplx& operator[](BladeIndex blade) { return coeffs_[blade]; }

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  std::vector<cplx>& coeffs() { return coeffs_; }

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(cplx s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, cplx s) { return a *= s; }
  friend Multivector operator*(cplx s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) { return a *= cplx(-1.0, 0.0); }

 private:
  int dim_;
  std::vector<cplx> coeffs_;
};

/** Sign table for one algebra dimension: sign of e_i e_j for all blade pairs. */
class SignTable {
 public:
  explicit SignTable(int dim);
  int dim() const { return dim_; }
  /** Sign of e_a e_b; the product blade is a XOR b. */
  int at(BladeIndex a, BladeIndex b) const { return signs_[(std::size_t(a) << dim_) | b]; }

 private:
  int dim_;
  std::vector<std::int8_t> signs_;
};

/** Shared sign table for dim generators; built once, safe to use from any thread. */
const SignTable& sign_table(int dim);

/**
 * Geometric product, the bilinear extension of blade_product_sign.
 * Throws std::invalid_argument on dimension mismatch.
 */
Multivector geometric_product(const Multivector& a, const Multivector& b);

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

/**
 * Product into a preallocated destination; dst is overwritten. All three
 * must share one dim and dst must not alias a or b. Allocation free; this is
 * the hot path used by the boundary operators.
 */
void geometric_product_into(Multivector& dst, const Multivector& a, const Multivector& b,
                            const SignTable& table);

/** As geometric_product_into but accumulating: dst += a * b. */
void geometric_product_add(Multivector& dst, const Multivector& a, const Multivector& b,
                           const SignTable& table);

/** Main conjugation: grade-k part scaled by (-1)^{k(k+1)/2}; conj(ab) = conj(b) conj(a). */
Multivector clifford_conjugate(const Multivector& a);

/**
 * Hermitean conjugation: for lambda = a + ib with a, b real this is
 * conj(a) - i conj(b), equivalently complex conjugation of each coefficient
 * combined with the main conjugation sign. Involution, and [dagger(l) l]_0
 * equals the squared coefficient norm.
 */
Multivector hermitean_dagger(const Multivector& a);

/** Grade-k part. Throws std::invalid_argument unless 0 <= k <= dim. */
Multivector grade_part(const Multivector& a, int k);

/** Coefficient of the identity blade. */
cplx scalar_part(const Multivector& a);

/** |lambda| = sqrt([dagger(lambda) lambda]_0), the Euclidean coefficient norm. */
double norm(const Multivector& a);

/** Point of R^{2n} stored as (x_1..x_n, y_1..y_n). */
struct VectorR2n {
  std::vector<double> comp;

  VectorR2n() = default;
  explicit VectorR2n(int n) : comp(2 * std::size_t(n), 0.0) {}
  VectorR2n(std::initializer_list<double> values);

  int n() const { return int(comp.size() / 2); }
  int dim2n() const { return int(comp.size()); }
  double operator[](int i) const { return comp[i]; }
  double& operator[](int i) { return comp[i]; }
};

VectorR2n operator+(const VectorR2n& a, const VectorR2n& b);
VectorR2n operator-(const VectorR2n& a, const VectorR2n& b);
VectorR2n operator*(double s, const VectorR2n& a);
double dot(const VectorR2n& a, const VectorR2n& b);
double euclidean_norm(const VectorR2n& a);

/**
 * Grade-1 embedding X = sum_j e_j x_j + e_{n+j} y_j, so that the geometric
 * square is -|X|^2 times the identity.
 */
Multivector embed_vector(const VectorR2n& X);

/**
 * Ordered pair (a, b) standing for the circulant 2x2 matrix [[a, b], [b, a]]
 * over the algebra. The matrix product of two such matrices is again
 * circulant; it is computed componentwise here, preserving factor order.
 */
struct CirculantPair {
  Multivector a, b;

  explicit CirculantPair(int dim) : a(dim), b(dim) {}
  CirculantPair(Multivector a_, Multivector b_);

  int dim() const { return a.dim(); }

  CirculantPair& operator+=(const CirculantPair& rhs);
  CirculantPair& operator-=(const CirculantPair& rhs);
  CirculantPair& operator*=(cplx s);

  friend CirculantPair operator+(CirculantPair x, const CirculantPair& y) { return x += y; }
  friend CirculantPair operator-(CirculantPair x, const CirculantPair& y) { return x -= y; }
  friend CirculantPair operator*(CirculantPair x, cplx s) { return x *= s; }
  friend CirculantPair operator*(cplx s, CirculantPair x) { return x *= s; }
  friend CirculantPair operator-(CirculantPair x) { return x *= cplx(-1.0, 0.0); }
};

/** Circulant matrix product: (xy).a = x.a y.a + x.b y.b, (xy).b = x.a y.b + x.b y.a. */
CirculantPair circulant_product(const CirculantPair& x, const CirculantPair& y);

/** Componentwise Hermitean dagger; for circulant matrices this is the matrix dagger. */
CirculantPair circulant_dagger(const CirculantPair& x);

/** Frobenius-style norm sqrt(|a|^2 + |b|^2). */
double circulant_norm(const CirculantPair& x);

}  // namespace hermicl

#endif
