#include "hermicl/hermitean.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hermicl {

VectorR2n apply_J_vector(const VectorR2n& X) {
  const int n = X.n();
  VectorR2n out(n);
  for (int j = 0; j < n; ++j) {
    out[j] = X[n + j];      // J[e_{n+j}] = e_j
    out[n + j] = -X[j];     // J[e_j] = -e_{n+j}
  }
  return out;
}

HermiteanVars hermitean_vars(const VectorR2n& X) {
  const Multivector mX = embed_vector(X);
  const Multivector mXJ = embed_vector(apply_J_vector(X));
  const cplx i(0.0, 1.0);
  HermiteanVars v{0.5 * (mX + i * mXJ), cplx(-0.5, 0.0) * (mX - i * mXJ)};
  return v;
}

WittBasis witt_basis(int n) {
  if (n < 1 || 2 * n > kMaxDim) {
    throw std::invalid_argument("witt_basis: n must satisfy 1 <= n <= " +
                                std::to_string(kMaxDim / 2));
  }
  WittBasis basis;
  basis.n = n;
  const int dim = 2 * n;
  const cplx half(0.5, 0.0);
  const cplx ihalf(0.0, 0.5);
  for (int j = 0; j < n; ++j) {
    const Multivector ej = Multivector::basis_blade(dim, BladeIndex(1) << j);
    const Multivector enj = Multivector::basis_blade(dim, BladeIndex(1) << (n + j));
    basis.f.push_back(half * ej - ihalf * enj);
    basis.f_dag.push_back(-(half * ej + ihalf * enj));
  }
  return basis;
}

Multivector witt_idempotent(const WittBasis& basis, int j) {
  if (j < 0 || j >= basis.n) throw std::invalid_argument("witt_idempotent: index out of range");
  return basis.f[std::size_t(j)] * basis.f_dag[std::size_t(j)];
}

MultivectorPolynomial::MultivectorPolynomial(int n) : n_(n) {
  if (n < 1 || 2 * n > kMaxDim) {
    throw std::invalid_argument("MultivectorPolynomial: n out of range");
  }
}

void MultivectorPolynomial::add_term(const Exponents& e, const Multivector& coeff) {
  if (int(e.size()) != 2 * n_) {
    throw std::invalid_argument("exponent tuple length must be 2n");
  }
  if (coeff.dim() != 2 * n_) {
    throw std::invalid_argument("coefficient dimension must be 2n");
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (norm(coeff) != 0.0) terms_.emplace(e, coeff);
    return;
  }
  it->second += coeff;
  if (norm(it->second) == 0.0) terms_.erase(it);
}

MultivectorPolynomial& MultivectorPolynomial::operator+=(const MultivectorPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultivectorPolynomial& MultivectorPolynomial::operator-=(const MultivectorPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultivectorPolynomial& MultivectorPolynomial::operator*=(cplx s) {
  if (s == cplx(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultivectorPolynomial MultivectorPolynomial::derivative(int var) const {
  if (var < 0 || var >= 2 * n_) throw std::invalid_argument("derivative: variable out of range");
  MultivectorPolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    const int k = e[std::size_t(var)];
    if (k == 0) continue;
    Exponents de = e;
    de[std::size_t(var)] = k - 1;
    out.add_term(de, cplx(double(k), 0.0) * c);
  }
  return out;
}

MultivectorPolynomial MultivectorPolynomial::left_multiplied(const Multivector& m) const {
  MultivectorPolynomial out(n_);
  for (const auto& [e, c] : terms_) out.add_term(e, m * c);
  return out;
}

Multivector MultivectorPolynomial::evaluate(const VectorR2n& X) const {
  Multivector out(2 * n_);
  for (const auto& [e, c] : terms_) {
    double factor = 1.0;
    for (int v = 0; v < 2 * n_; ++v) {
      for (int k = 0; k < e[std::size_t(v)]; ++k) factor *= X[v];
    }
    out += cplx(factor, 0.0) * c;
  }
  return out;
}

double MultivectorPolynomial::coefficient_norm() const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    const double nc = norm(c);
    s += nc * nc;
  }
  return std::sqrt(s);
}

namespace {

// sum_v basis(v) * d/dcoord(v) with a caller-chosen complex weight per slot.
MultivectorPolynomial basis_weighted_derivative(const MultivectorPolynomial& P,
                                                const std::vector<Multivector>& blades,
                                                const std::vector<int>& vars,
                                                const std::vector<cplx>& weights) {
  MultivectorPolynomial out(P.n());
  for (std::size_t k = 0; k < blades.size(); ++k) {
    MultivectorPolynomial d = P.derivative(vars[k]);
    if (d.empty()) continue;
    MultivectorPolynomial term = d.left_multiplied(blades[k]);
    term *= weights[k];
    out += term;
  }
  return out;
}

}  // namespace

MultivectorPolynomial dirac(const MultivectorPolynomial& P) {
  const int n = P.n();
  const int dim = 2 * n;
  std::vector<Multivector> blades;
  std::vector<int> vars;
  std::vector<cplx> weights;
  for (int v = 0; v < dim; ++v) {
    blades.push_back(Multivector::basis_blade(dim, BladeIndex(1) << v));
    vars.push_back(v);
    weights.push_back(cplx(1.0, 0.0));
  }
  return basis_weighted_derivative(P, blades, vars, weights);
}

MultivectorPolynomial dirac_J(const MultivectorPolynomial& P) {
  const int n = P.n();
  const int dim = 2 * n;
  std::vector<Multivector> blades;
  std::vector<int> vars;
  std::vector<cplx> weights;
  for (int j = 0; j < n; ++j) {
    blades.push_back(Multivector::basis_blade(dim, BladeIndex(1) << j));
    vars.push_back(n + j);  // e_j d/dy_j
    weights.push_back(cplx(1.0, 0.0));
    blades.push_back(Multivector::basis_blade(dim, BladeIndex(1) << (n + j)));
    vars.push_back(j);      // -e_{n+j} d/dx_j
    weights.push_back(cplx(-1.0, 0.0));
  }
  return basis_weighted_derivative(P, blades, vars, weights);
}

MultivectorPolynomial dirac_Z(const MultivectorPolynomial& P) {
  const WittBasis basis = witt_basis(P.n());
  std::vector<Multivector> blades;
  std::vector<int> vars;
  std::vector<cplx> weights;
  for (int j = 0; j < P.n(); ++j) {
    // f_j^dagger (1/2)(d/dx_j - i d/dy_j)
    blades.push_back(basis.f_dag[std::size_t(j)]);
    vars.push_back(j);
    weights.push_back(cplx(0.5, 0.0));
    blades.push_back(basis.f_dag[std::size_t(j)]);
    vars.push_back(P.n() + j);
    weights.push_back(cplx(0.0, -0.5));
  }
  return basis_weighted_derivative(P, blades, vars, weights);
}

MultivectorPolynomial dirac_Zdag(const MultivectorPolynomial& P) {
  const WittBasis basis = witt_basis(P.n());
  std::vector<Multivector> blades;
  std::vector<int> vars;
  std::vector<cplx> weights;
  for (int j = 0; j < P.n(); ++j) {
    // f_j (1/2)(d/dx_j + i d/dy_j)
    blades.push_back(basis.f[std::size_t(j)]);
    vars.push_back(j);
    weights.push_back(cplx(0.5, 0.0));
    blades.push_back(basis.f[std::size_t(j)]);
    vars.push_back(P.n() + j);
    weights.push_back(cplx(0.0, 0.5));
  }
  return basis_weighted_derivative(P, blades, vars, weights);
}

MultivectorPolynomial laplacian(const MultivectorPolynomial& P) {
  MultivectorPolynomial out(P.n());
  for (int v = 0; v < 2 * P.n(); ++v) out += P.derivative(v).derivative(v);
  return out;
}

}  // namespace hermicl
