#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "hermicl/clifford.hpp"
#include "hermicl/harness.hpp"
#include "test_support.hpp"

using namespace hermicl;
using hermicl_test::coeff_deviation;

namespace {

// Independent sign oracle: concatenate the generator lists of both blades,
// bubble-sort into ascending order counting swaps, then cancel adjacent equal
// generators with a factor -1 each (e_i^2 = -1).
int brute_force_sign(BladeIndex a, BladeIndex b, int dim) {
  std::vector<int> gens;
  for (int i = 0; i < dim; ++i) {
    if (a & (BladeIndex(1) << i)) gens.push_back(i);
  }
  for (int i = 0; i < dim; ++i) {
    if (b & (BladeIndex(1) << i)) gens.push_back(i);
  }
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1 < gens.size(); ++k) {
      if (gens[k] > gens[k + 1]) {
        std::swap(gens[k], gens[k + 1]);
        sign = -sign;
        moved = true;
      }
    }
  }
  for (std::size_t k = 0; k + 1 < gens.size();) {
    if (gens[k] == gens[k + 1]) {
      sign = -sign;
      gens.erase(gens.begin() + long(k), gens.begin() + long(k) + 2);
      k = k > 0 ? k - 1 : 0;
    } else {
      ++k;
    }
  }
  return sign;
}

}  // namespace

TEST_CASE("blade product sign matches the brute-force oracle exhaustively") {
  for (int dim = 1; dim <= 4; ++dim) {
    const BladeIndex count = BladeIndex(1) << dim;
    for (BladeIndex a = 0; a < count; ++a) {
      for (BladeIndex b = 0; b < count; ++b) {
        const BladeProduct p = blade_product_sign(a, b, dim);
        REQUIRE(p.blade == (a ^ b));
        REQUIRE(p.sign == brute_force_sign(a, b, dim));
      }
    }
  }
}

TEST_CASE("blade product sign matches the oracle on random m = 6 pairs") {
  FieldRng rng(31);
  for (int k = 0; k < 500; ++k) {
    const auto a = BladeIndex(rng.index(64));
    const auto b = BladeIndex(rng.index(64));
    const BladeProduct p = blade_product_sign(a, b, 6);
    CHECK(p.sign == brute_force_sign(a, b, 6));
    CHECK(p.blade == (a ^ b));
  }
}

TEST_CASE("frozen products in the quaternion-like m = 2 algebra") {
  const Multivector e1 = Multivector::basis_blade(2, 0b01);
  const Multivector e2 = Multivector::basis_blade(2, 0b10);
  const Multivector e12 = Multivector::basis_blade(2, 0b11);

  // e2 e1 = -e12 and e1 e2 = +e12.
  CHECK(coeff_deviation(e2 * e1, cplx(-1.0, 0.0) * e12) == 0.0);
  CHECK(coeff_deviation(e1 * e2, e12) == 0.0);
  // e1^2 = e2^2 = -1.
  CHECK(coeff_deviation(e1 * e1, Multivector::scalar(2, cplx(-1.0, 0.0))) == 0.0);
  // (e1 + e2)(e1 - e2) = -2 e12.
  CHECK(coeff_deviation((e1 + e2) * (e1 - e2), cplx(-2.0, 0.0) * e12) == 0.0);
  // norm(e1 + i e2) = sqrt(2).
  CHECK(norm(e1 + cplx(0.0, 1.0) * e2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("geometric product is associative and distributive") {
  for (int dim = 1; dim <= 6; ++dim) {
    FieldRng rng(100 + std::uint64_t(dim));
    for (int k = 0; k < 50; ++k) {
      const Multivector a = random_multivector(dim, rng);
      const Multivector b = random_multivector(dim, rng);
      const Multivector c = random_multivector(dim, rng);
      const double scale = std::max({norm(a) * norm(b) * norm(c), 1.0});
      CHECK(coeff_deviation((a * b) * c, a * (b * c)) / scale < 1e-13);
      CHECK(coeff_deviation(a * (b + c), a * b + a * c) / scale < 1e-13);
    }
  }
}

TEST_CASE("conjugation and dagger are anti-homomorphisms") {
  FieldRng rng(7);
  for (int k = 0; k < 100; ++k) {
    const Multivector a = random_multivector(4, rng);
    const Multivector b = random_multivector(4, rng);
    const double scale = std::max(norm(a) * norm(b), 1.0);
    CHECK(coeff_deviation(clifford_conjugate(a * b),
                          clifford_conjugate(b) * clifford_conjugate(a)) /
              scale <
          1e-13);
    CHECK(coeff_deviation(hermitean_dagger(a * b),
                          hermitean_dagger(b) * hermitean_dagger(a)) /
              scale <
          1e-13);
  }
}

TEST_CASE("dagger negates real grade-1 vectors") {
  const VectorR2n X{0.3, -1.7, 2.1, 0.4};
  const Multivector v = embed_vector(X);
  CHECK(coeff_deviation(hermitean_dagger(v), cplx(-1.0, 0.0) * v) == 0.0);
}

TEST_CASE("embedded vectors square to minus the squared length") {
  const VectorR2n X{1.25, -0.5, 0.75, 2.0};
  const double x2 = dot(X, X);
  const Multivector sq = embed_vector(X) * embed_vector(X);
  CHECK(coeff_deviation(sq, Multivector::scalar(4, cplx(-x2, 0.0))) < 1e-14);
}

TEST_CASE("sign table agrees with blade_product_sign") {
  const SignTable& table = sign_table(4);
  for (BladeIndex a = 0; a < 16; ++a) {
    for (BladeIndex b = 0; b < 16; ++b) {
      CHECK(int(table.at(a, b)) == blade_product_sign(a, b, 4).sign);
    }
  }
}

TEST_CASE("circulant pairs multiply through the channel decomposition") {
  FieldRng rng(13);
  const CirculantPair x(random_multivector(2, rng), random_multivector(2, rng));
  const CirculantPair y(random_multivector(2, rng), random_multivector(2, rng));
  const CirculantPair p = circulant_product(x, y);
  // circ(a, b) circ(c, d) = circ(a c + b d, a d + b c).
  CHECK(coeff_deviation(p.a, x.a * y.a + x.b * y.b) < 1e-13);
  CHECK(coeff_deviation(p.b, x.a * y.b + x.b * y.a) < 1e-13);
  // Channels multiply independently: s(xy) = s(x) s(y), d(xy) = d(x) d(y).
  CHECK(coeff_deviation(p.a + p.b, (x.a + x.b) * (y.a + y.b)) < 1e-13);
  CHECK(coeff_deviation(p.a - p.b, (x.a - x.b) * (y.a - y.b)) < 1e-13);
}

TEST_CASE("grade projection and scalar part") {
  const Multivector e1 = Multivector::basis_blade(2, 0b01);
  const Multivector m = Multivector::scalar(2, cplx(2.0, 1.0)) + cplx(3.0, 0.0) * e1;
  CHECK(scalar_part(m) == cplx(2.0, 1.0));
  CHECK(coeff_deviation(grade_part(m, 1), cplx(3.0, 0.0) * e1) == 0.0);
  CHECK_THROWS_AS((void)grade_part(m, 5), std::invalid_argument);
}
