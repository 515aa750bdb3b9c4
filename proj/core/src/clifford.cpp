#include "hermicl/clifford.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace hermicl {

namespace {

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim) {
    throw std::invalid_argument("algebra dimension must be in [0, " +
                                std::to_string(kMaxDim) + "], got " + std::to_string(dim));
  }
}

void check_blade(BladeIndex blade, int dim, const char* what) {
  if (blade >= (BladeIndex(1) << dim)) {
    throw std::invalid_argument(std::string(what) + " blade index " + std::to_string(blade) +
                                " does not fit in " + std::to_string(dim) + " generators");
  }
}

// Number of transpositions needed to merge the generator lists of a and b:
// pairs (i in a, j in b) with i > j.
int reorder_parity(BladeIndex a, BladeIndex b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return swaps;
}

}  // namespace

int blade_grade(BladeIndex mask) { return std::popcount(mask); }

BladeProduct blade_product_sign(BladeIndex a, BladeIndex b, int dim) {
  check_dim(dim);
  check_blade(a, dim, "left");
  check_blade(b, dim, "right");
  const int parity = reorder_parity(a, b) + std::popcount(a & b);  // metric: e_i^2 = -1
  return BladeProduct{(parity & 1) ? -1 : +1, a ^ b};
}

Multivector::Multivector(int dim) : dim_(dim) {
  check_dim(dim);
  coeffs_.assign(std::size_t(1) << dim, cplx(0.0, 0.0));
}

Multivector Multivector::scalar(int dim, cplx value) {
  Multivector m(dim);
  m.coeffs_[0] = value;
  return m;
}

Multivector Multivector::basis_blade(int dim, BladeIndex blade) {
  Multivector m(dim);
  check_blade(blade, dim, "basis");
  m.coeffs_[blade] = cplx(1.0, 0.0);
  return m;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("multivector dimension mismatch in +");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("multivector dimension mismatch in -");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

SignTable::SignTable(int dim) : dim_(dim) {
  check_dim(dim);
  const std::size_t count = std::size_t(1) << dim;
  signs_.resize(count * count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      const int parity =
          reorder_parity(BladeIndex(a), BladeIndex(b)) + std::popcount(BladeIndex(a & b));
      signs_[(a << dim) | b] = (parity & 1) ? std::int8_t(-1) : std::int8_t(+1);
    }
  }
}

const SignTable& sign_table(int dim) {
  check_dim(dim);
  static std::array<std::unique_ptr<const SignTable>, kMaxDim + 1> tables;
  static std::array<std::once_flag, kMaxDim + 1> flags;
  std::call_once(flags[dim], [dim] { tables[dim] = std::make_unique<const SignTable>(dim); });
  return *tables[dim];
}

void geometric_product_into(Multivector& dst, const Multivector& a, const Multivector& b,
                            const SignTable& table) {
  const std::size_t count = dst.ncoeffs();
  cplx* out = dst.coeffs().data();
  for (std::size_t i = 0; i < count; ++i) out[i] = cplx(0.0, 0.0);
  geometric_product_add(dst, a, b, table);
}

void geometric_product_add(Multivector& dst, const Multivector& a, const Multivector& b,
                           const SignTable& table) {
  const int dim = dst.dim();
  const std::size_t count = dst.ncoeffs();
  const cplx* ac = a.coeffs().data();
  const cplx* bc = b.coeffs().data();
  cplx* out = dst.coeffs().data();
  for (std::size_t i = 0; i < count; ++i) {
    const cplx ai = ac[i];
    if (ai == cplx(0.0, 0.0)) continue;
    for (std::size_t j = 0; j < count; ++j) {
      const cplx bj = bc[j];
      if (bj == cplx(0.0, 0.0)) continue;
      const double s = double(table.at(BladeIndex(i), BladeIndex(j)));
      out[i ^ j] += s * (ai * bj);
    }
  }
  (void)dim;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("multivector dimension mismatch in geometric product");
  }
  Multivector dst(a.dim());
  geometric_product_into(dst, a, b, sign_table(a.dim()));
  return dst;
}

namespace {

// (-1)^{k(k+1)/2} for grade k: the sign pattern +,-,-,+ repeating with period 4.
double conjugation_sign(int k) {
  const int r = ((k * (k + 1)) / 2) & 1;
  return r ? -1.0 : 1.0;
}

}  // namespace

Multivector clifford_conjugate(const Multivector& a) {
  Multivector out(a.dim());
  for (std::size_t i = 0; i < a.ncoeffs(); ++i) {
    out[BladeIndex(i)] = conjugation_sign(blade_grade(BladeIndex(i))) * a[BladeIndex(i)];
  }
  return out;
}

Multivector hermitean_dagger(const Multivector& a) {
  Multivector out(a.dim());
  for (std::size_t i = 0; i < a.ncoeffs(); ++i) {
    out[BladeIndex(i)] =
        conjugation_sign(blade_grade(BladeIndex(i))) * std::conj(a[BladeIndex(i)]);
  }
  return out;
}

Multivector grade_part(const Multivector& a, int k) {
  if (k < 0 || k > a.dim()) {
    throw std::invalid_argument("grade " + std::to_string(k) + " out of range for dim " +
                                std::to_string(a.dim()));
  }
  Multivector out(a.dim());
  for (std::size_t i = 0; i < a.ncoeffs(); ++i) {
    if (blade_grade(BladeIndex(i)) == k) out[BladeIndex(i)] = a[BladeIndex(i)];
  }
  return out;
}

cplx scalar_part(const Multivector& a) { return a[0]; }

double norm(const Multivector& a) {
  double s = 0.0;
  for (const auto& c : a.coeffs()) s += std::norm(c);
  return std::sqrt(s);
}

VectorR2n::VectorR2n(std::initializer_list<double> values) : comp(values) {
  if (comp.size() % 2 != 0) {
    throw std::invalid_argument("VectorR2n needs an even number of components");
  }
}

VectorR2n operator+(const VectorR2n& a, const VectorR2n& b) {
  VectorR2n out = a;
  for (std::size_t i = 0; i < out.comp.size(); ++i) out.comp[i] += b.comp[i];
  return out;
}

VectorR2n operator-(const VectorR2n& a, const VectorR2n& b) {
  VectorR2n out = a;
  for (std::size_t i = 0; i < out.comp.size(); ++i) out.comp[i] -= b.comp[i];
  return out;
}

VectorR2n operator*(double s, const VectorR2n& a) {
  VectorR2n out = a;
  for (auto& c : out.comp) c *= s;
  return out;
}

double dot(const VectorR2n& a, const VectorR2n& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.comp.size(); ++i) s += a.comp[i] * b.comp[i];
  return s;
}

double euclidean_norm(const VectorR2n& a) { return std::sqrt(dot(a, a)); }

Multivector embed_vector(const VectorR2n& X) {
  Multivector out(X.dim2n());
  for (int i = 0; i < X.dim2n(); ++i) {
    out[BladeIndex(1) << i] = cplx(X.comp[std::size_t(i)], 0.0);
  }
  return out;
}

CirculantPair::CirculantPair(Multivector a_, Multivector b_)
    : a(std::move(a_)), b(std::move(b_)) {
  if (a.dim() != b.dim()) throw std::invalid_argument("circulant pair dimension mismatch");
}

CirculantPair& CirculantPair::operator+=(const CirculantPair& rhs) {
  a += rhs.a;
  b += rhs.b;
  return *this;
}

CirculantPair& CirculantPair::operator-=(const CirculantPair& rhs) {
  a -= rhs.a;
  b -= rhs.b;
  return *this;
}

CirculantPair& CirculantPair::operator*=(cplx s) {
  a *= s;
  b *= s;
  return *this;
}

CirculantPair circulant_product(const CirculantPair& x, const CirculantPair& y) {
  return CirculantPair(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a);
}

CirculantPair circulant_dagger(const CirculantPair& x) {
  return CirculantPair(hermitean_dagger(x.a), hermitean_dagger(x.b));
}

double circulant_norm(const CirculantPair& x) {
  const double na = norm(x.a);
  const double nb = norm(x.b);
  return std::sqrt(na * na + nb * nb);
}

}  // namespace hermicl
