#include "hermicl/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hermicl/hermitean.hpp"
#include "hermicl/kernels.hpp"

namespace hermicl {

namespace {

void check_field(const SurfaceMesh& mesh, const BoundaryField& L, const char* where) {
  if (L.size() != mesh.size()) {
    throw std::invalid_argument(std::string(where) + ": field size does not match mesh");
  }
  const int two_n = 2 * mesh.n;
  for (const auto& v : L) {
    if (v.dim() != two_n) {
      throw std::invalid_argument(std::string(where) + ": field dimension does not match mesh");
    }
  }
}

cplx coefficient_dot(const Multivector& x, const Multivector& y) {
  cplx acc(0.0, 0.0);
  const auto& xc = x.coeffs();
  const auto& yc = y.coeffs();
  for (std::size_t b = 0; b < xc.size(); ++b) acc += std::conj(xc[b]) * yc[b];
  return acc;
}

double powi(double base, int exp) {
  double r = 1.0;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

// Writes the grade-1 element with components comp[c] scaled by s into dst.
void fill_vector_multivector(Multivector& dst, const double* comp, int two_n, double s) {
  auto& coeffs = dst.coeffs();
  std::fill(coeffs.begin(), coeffs.end(), cplx(0.0, 0.0));
  for (int c = 0; c < two_n; ++c) coeffs[std::size_t(1) << c] = cplx(s * comp[c], 0.0);
}

}  // namespace

std::vector<Multivector> channel_sum(const BoundaryField& field) {
  std::vector<Multivector> out;
  out.reserve(field.size());
  for (const auto& v : field) out.push_back(v.a + v.b);
  return out;
}

std::vector<Multivector> channel_diff(const BoundaryField& field) {
  std::vector<Multivector> out;
  out.reserve(field.size());
  for (const auto& v : field) out.push_back(v.a - v.b);
  return out;
}

BoundaryField from_channels(const std::vector<Multivector>& s,
                            const std::vector<Multivector>& d) {
  if (s.size() != d.size()) throw std::invalid_argument("from_channels: size mismatch");
  BoundaryField out;
  out.reserve(s.size());
  const cplx half(0.5, 0.0);
  for (std::size_t j = 0; j < s.size(); ++j) {
    out.emplace_back(half * (s[j] + d[j]), half * (s[j] - d[j]));
  }
  return out;
}

cplx inner_product(const SurfaceMesh& mesh, const BoundaryField& F, const BoundaryField& G) {
  check_field(mesh, F, "inner_product");
  check_field(mesh, G, "inner_product");
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < mesh.size(); ++j) {
    acc += mesh.weights[j] * (coefficient_dot(F[j].a, G[j].a) + coefficient_dot(F[j].b, G[j].b));
  }
  return acc;
}

double field_norm(const SurfaceMesh& mesh, const BoundaryField& F) {
  return std::sqrt(std::max(0.0, inner_product(mesh, F, F).real()));
}

namespace {

// Left multiplication of a one-component channel by the (possibly twisted)
// normal field.
std::vector<Multivector> nu_channel(const SurfaceMesh& mesh,
                                    const std::vector<Multivector>& values, bool rotated) {
  const SignTable& table = sign_table(2 * mesh.n);
  const auto& nus = rotated ? mesh.normals_J : mesh.normals;
  std::vector<Multivector> out(values.size(), Multivector(2 * mesh.n));
  for (std::size_t j = 0; j < values.size(); ++j) {
    geometric_product_into(out[j], embed_vector(nus[j]), values[j], table);
  }
  return out;
}

// Punctured (diagonal-skip) sum
//   (P L)(T_i) = sum_{j != i} 2 w_j E(Y_j - T_i) nu(Y_j) L(Y_j).
// On uniformly spaced curve meshes the skipped diagonal realizes the discrete
// principal value on its own. On n = 2 product grids the local spacing is
// anisotropic, the odd-kernel cancellation fails, and P alone diverges even on
// constants; the public entry point then adds the constant-density subtraction
// on top of this sum.
std::vector<Multivector> punctured_channel_apply(const SurfaceMesh& mesh,
                                                 const std::vector<Multivector>& density,
                                                 bool rotated) {
  const std::size_t M = mesh.size();
  if (density.size() != M) {
    throw std::invalid_argument("hilbert_channel: density size does not match mesh");
  }
  const int n = mesh.n;
  const int two_n = 2 * n;
  const std::size_t dim = std::size_t(1) << two_n;
  const SignTable& table = sign_table(two_n);
  const auto& nus = rotated ? mesh.normals_J : mesh.normals;

  // Per source j precompute P_j = 2 w_j nu_j L_j and its basis-vector
  // products e_c P_j, so the kernel sum reduces to scaled accumulations.
  std::vector<cplx> ep(M * std::size_t(two_n) * dim, cplx(0.0, 0.0));
  Multivector P(two_n);
  for (std::size_t j = 0; j < M; ++j) {
    if (density[j].dim() != two_n) {
      throw std::invalid_argument("hilbert_channel: density dimension does not match mesh");
    }
    geometric_product_into(P, embed_vector(nus[j]), density[j], table);
    P *= cplx(2.0 * mesh.weights[j], 0.0);
    for (int c = 0; c < two_n; ++c) {
      const BladeIndex ec = BladeIndex(1) << c;
      cplx* dst = &ep[(j * std::size_t(two_n) + std::size_t(c)) * dim];
      for (BladeIndex b = 0; b < dim; ++b) {
        const cplx v = P[b];
        if (v == cplx(0.0, 0.0)) continue;
        dst[ec ^ b] += double(table.at(ec, b)) * v;
      }
    }
  }

  const double w2n = sphere_area(n);
  std::vector<Multivector> out(M, Multivector(two_n));
  double diff[2 * kMaxDim];
  double jdiff[2 * kMaxDim];
  for (std::size_t i = 0; i < M; ++i) {
    cplx* acc = out[i].coeffs().data();
    const VectorR2n& T = mesh.nodes[i];
    for (std::size_t j = 0; j < M; ++j) {
      if (j == i) continue;
      double r2 = 0.0;
      for (int c = 0; c < two_n; ++c) {
        diff[c] = mesh.nodes[j][c] - T[c];
        r2 += diff[c] * diff[c];
      }
      if (r2 == 0.0) {
        throw std::invalid_argument("hilbert_channel: coincident nodes in mesh");
      }
      const double scale = -1.0 / (w2n * powi(r2, n));
      const double* comp = diff;
      if (rotated) {
        for (int c = 0; c < n; ++c) {
          jdiff[c] = diff[n + c];
          jdiff[n + c] = -diff[c];
        }
        comp = jdiff;
      }
      const cplx* base = &ep[j * std::size_t(two_n) * dim];
      for (int c = 0; c < two_n; ++c) {
        const double coeff = scale * comp[c];
        if (coeff == 0.0) continue;
        const cplx* src = base + std::size_t(c) * dim;
        for (std::size_t b = 0; b < dim; ++b) acc[b] += coeff * src[b];
      }
    }
  }
  return out;
}

// Row sums R_i = (P 1)(T_i) of the punctured matrix: the punctured sum applied
// to the constant scalar density. These feed the constant-density subtraction
// on n = 2 meshes.
std::vector<Multivector> channel_correction(const SurfaceMesh& mesh, bool rotated) {
  const std::vector<Multivector> ones(mesh.size(),
                                      Multivector::scalar(2 * mesh.n, cplx(1.0, 0.0)));
  return punctured_channel_apply(mesh, ones, rotated);
}

// Closed-form discrete adjoint of the one-component transform in the weighted
// coefficient inner product. The punctured matrix satisfies P* = nu P nu
// entrywise (weights included); left multiplication by m adjoints to left
// multiplication by dagger(m), and the diagonal weight factors cancel, so the
// n = 2 subtracted form H = P + I - diag(R_i .) has
//   H* = nu P nu + I - diag(dagger(R_i) .).
std::vector<Multivector> adjoint_channel_apply(const SurfaceMesh& mesh,
                                               const std::vector<Multivector>& channel,
                                               bool rotated) {
  std::vector<Multivector> out = nu_channel(
      mesh, punctured_channel_apply(mesh, nu_channel(mesh, channel, rotated), rotated),
      rotated);
  if (mesh.n == 1) return out;
  const std::vector<Multivector> R = channel_correction(mesh, rotated);
  const int two_n = 2 * mesh.n;
  const SignTable& table = sign_table(two_n);
  Multivector corr(two_n);
  for (std::size_t i = 0; i < out.size(); ++i) {
    geometric_product_into(corr, hermitean_dagger(R[i]), channel[i], table);
    out[i] += channel[i];
    out[i] -= corr;
  }
  return out;
}

}  // namespace

std::vector<Multivector> hilbert_channel(const SurfaceMesh& mesh,
                                         const std::vector<Multivector>& density,
                                         bool rotated) {
  if (mesh.n == 1) return punctured_channel_apply(mesh, density, rotated);
  // Constant-density subtraction: with R_i = (P 1)(T_i),
  //   (H L)_i = (P L)_i + L_i - R_i L_i.
  // The continuum transform fixes constants, so subtracting the constant value
  // L(T_i) from the density leaves a weakly singular integrand whose punctured
  // sum converges, while constants are reproduced exactly by construction.
  std::vector<Multivector> out = punctured_channel_apply(mesh, density, rotated);
  const std::vector<Multivector> R = channel_correction(mesh, rotated);
  const int two_n = 2 * mesh.n;
  const SignTable& table = sign_table(two_n);
  Multivector corr(two_n);
  for (std::size_t i = 0; i < out.size(); ++i) {
    geometric_product_into(corr, R[i], density[i], table);
    out[i] += density[i];
    out[i] -= corr;
  }
  return out;
}

BoundaryField hilbert_transform(const SurfaceMesh& mesh, const BoundaryField& L) {
  check_field(mesh, L, "hilbert_transform");
  return from_channels(hilbert_channel(mesh, channel_sum(L), true),
                       hilbert_channel(mesh, channel_diff(L), false));
}

BoundaryField hardy_projection(const SurfaceMesh& mesh, const BoundaryField& L) {
  BoundaryField out = hilbert_transform(mesh, L);
  const cplx half(0.5, 0.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] += L[j];
    out[j] *= half;
  }
  return out;
}

BoundaryField nu_multiply(const SurfaceMesh& mesh, const BoundaryField& L) {
  check_field(mesh, L, "nu_multiply");
  return from_channels(nu_channel(mesh, channel_sum(L), true),
                       nu_channel(mesh, channel_diff(L), false));
}

BoundaryField alpha_multiply(const SurfaceMesh& mesh, const BoundaryField& L) {
  check_field(mesh, L, "alpha_multiply");
  BoundaryField out = nu_multiply(mesh, L);
  const cplx ihalf(0.0, 0.5);
  const cplx half(0.5, 0.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] *= ihalf;
    out[j] += half * L[j];
  }
  return out;
}

BoundaryField beta_multiply(const SurfaceMesh& mesh, const BoundaryField& L) {
  check_field(mesh, L, "beta_multiply");
  BoundaryField out = nu_multiply(mesh, L);
  const cplx ihalf(0.0, -0.5);
  const cplx half(0.5, 0.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] *= ihalf;
    out[j] += half * L[j];
  }
  return out;
}

namespace {

Eigen::MatrixXcd weighted_conjugate_transpose(const SurfaceMesh& mesh,
                                              const Eigen::MatrixXcd& A) {
  const Eigen::Index dim = Eigen::Index(1) << (2 * mesh.n);
  Eigen::MatrixXcd out(A.cols(), A.rows());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double wi = mesh.weights[std::size_t(i / dim)];
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      const double wj = mesh.weights[std::size_t(j / dim)];
      out(i, j) = std::conj(A(j, i)) * (wj / wi);
    }
  }
  return out;
}

}  // namespace

BoundaryField hilbert_adjoint(const SurfaceMesh& mesh, const BoundaryField& L,
                              AdjointPath path) {
  check_field(mesh, L, "hilbert_adjoint");
  if (path == AdjointPath::NuFormula) {
    return from_channels(adjoint_channel_apply(mesh, channel_sum(L), true),
                         adjoint_channel_apply(mesh, channel_diff(L), false));
  }
  if (mesh.n != 1) {
    throw std::invalid_argument("hilbert_adjoint: dense path requires n = 1 meshes");
  }
  const int two_n = 2;
  std::vector<Multivector> channels[2] = {channel_sum(L), channel_diff(L)};
  std::vector<Multivector> results[2];
  for (int c = 0; c < 2; ++c) {
    const bool rotated = (c == 0);
    const Eigen::MatrixXcd H = dense_hilbert_channel(mesh, rotated);
    const Eigen::MatrixXcd Hstar = weighted_conjugate_transpose(mesh, H);
    results[c] = unflatten_channel(Hstar * flatten_channel(channels[c]), two_n);
  }
  return from_channels(results[0], results[1]);
}

BoundaryField kerzman_stein(const SurfaceMesh& mesh, const BoundaryField& L) {
  check_field(mesh, L, "kerzman_stein");
  BoundaryField HL = hilbert_transform(mesh, L);
  BoundaryField HstarL = hilbert_adjoint(mesh, L, AdjointPath::NuFormula);
  const cplx half(0.5, 0.0);
  for (std::size_t j = 0; j < HL.size(); ++j) {
    HL[j] -= HstarL[j];
    HL[j] *= half;
  }
  return HL;
}

std::vector<CirculantPair> cauchy_transform(const SurfaceMesh& mesh, const BoundaryField& L,
                                            const std::vector<VectorR2n>& points) {
  check_field(mesh, L, "cauchy_transform");
  const int n = mesh.n;
  const int two_n = 2 * n;
  const SignTable& table = sign_table(two_n);
  const cplx cn = hermitean_measure_constant(n);
  const double w2n = sphere_area(n);

  // Q_j = w_j nu_j s_j (twisted) and w_j nu_j d_j (plain).
  const std::vector<Multivector> s = channel_sum(L);
  const std::vector<Multivector> d = channel_diff(L);
  std::vector<Multivector> Qs = nu_channel(mesh, s, true);
  std::vector<Multivector> Qd = nu_channel(mesh, d, false);
  for (std::size_t j = 0; j < mesh.size(); ++j) {
    const cplx w(mesh.weights[j], 0.0);
    Qs[j] *= w;
    Qd[j] *= w;
  }

  std::vector<CirculantPair> out;
  out.reserve(points.size());
  Multivector Emv(two_n), acc_s(two_n), acc_d(two_n);
  double diff[2 * kMaxDim];
  double jdiff[2 * kMaxDim];
  for (const auto& Y : points) {
    if (Y.dim2n() != two_n) {
      throw std::invalid_argument("cauchy_transform: point dimension does not match mesh");
    }
    acc_s = Multivector(two_n);
    acc_d = Multivector(two_n);
    for (std::size_t j = 0; j < mesh.size(); ++j) {
      double r2 = 0.0;
      for (int c = 0; c < two_n; ++c) {
        diff[c] = mesh.nodes[j][c] - Y[c];
        r2 += diff[c] * diff[c];
      }
      const double dist = std::sqrt(r2);
      if (dist < kEvaluationGuard * mesh.spacing) {
        throw std::domain_error("cauchy_transform: evaluation point within " +
                                std::to_string(kEvaluationGuard) +
                                " mesh spacings of a node");
      }
      const double scale = -1.0 / (w2n * powi(r2, n));
      fill_vector_multivector(Emv, diff, two_n, scale);
      geometric_product_add(acc_d, Emv, Qd[j], table);
      for (int c = 0; c < n; ++c) {
        jdiff[c] = diff[n + c];
        jdiff[n + c] = -diff[c];
      }
      fill_vector_multivector(Emv, jdiff, two_n, scale);
      geometric_product_add(acc_s, Emv, Qs[j], table);
    }
    acc_s *= cn;
    acc_d *= cn;
    const cplx half(0.5, 0.0);
    out.emplace_back(half * (acc_s + acc_d), half * (acc_s - acc_d));
  }
  return out;
}

GmresResult gmres(const std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>& matvec,
                  const Eigen::VectorXcd& rhs, Eigen::VectorXcd& x, double tol,
                  int max_iter) {
  GmresResult result;
  const Eigen::Index N = rhs.size();
  if (x.size() != N) x = Eigen::VectorXcd::Zero(N);
  const double bnorm = rhs.norm();
  if (bnorm == 0.0) {
    x.setZero();
    result.converged = true;
    return result;
  }
  Eigen::VectorXcd r = rhs - matvec(x);
  double beta = r.norm();
  if (beta / bnorm <= tol) {
    result.residual = beta / bnorm;
    result.converged = true;
    return result;
  }

  const int m = std::min<int>(max_iter, int(N));
  std::vector<Eigen::VectorXcd> V;
  V.reserve(std::size_t(m) + 1);
  V.push_back(r / beta);
  Eigen::MatrixXcd Hmat = Eigen::MatrixXcd::Zero(m + 1, m);
  std::vector<cplx> cs(std::size_t(m), cplx(0.0, 0.0));
  std::vector<cplx> sn(std::size_t(m), cplx(0.0, 0.0));
  Eigen::VectorXcd g = Eigen::VectorXcd::Zero(m + 1);
  g(0) = beta;

  int k = 0;
  for (; k < m; ++k) {
    Eigen::VectorXcd w = matvec(V[std::size_t(k)]);
    for (int i = 0; i <= k; ++i) {
      const cplx h = V[std::size_t(i)].dot(w);  // conjugate-linear in V[i]
      Hmat(i, k) = h;
      w -= h * V[std::size_t(i)];
    }
    const double hnext = w.norm();
    Hmat(k + 1, k) = hnext;

    // Apply the accumulated Givens rotations to the new column.
    for (int i = 0; i < k; ++i) {
      const cplx t = std::conj(cs[std::size_t(i)]) * Hmat(i, k) +
                     std::conj(sn[std::size_t(i)]) * Hmat(i + 1, k);
      Hmat(i + 1, k) = -sn[std::size_t(i)] * Hmat(i, k) + cs[std::size_t(i)] * Hmat(i + 1, k);
      Hmat(i, k) = t;
    }
    const double denom = std::sqrt(std::norm(Hmat(k, k)) + hnext * hnext);
    if (denom == 0.0) {
      cs[std::size_t(k)] = cplx(1.0, 0.0);
      sn[std::size_t(k)] = cplx(0.0, 0.0);
    } else {
      cs[std::size_t(k)] = Hmat(k, k) / denom;
      sn[std::size_t(k)] = cplx(hnext, 0.0) / denom;
    }
    const cplx t = std::conj(cs[std::size_t(k)]) * Hmat(k, k) +
                   std::conj(sn[std::size_t(k)]) * Hmat(k + 1, k);
    Hmat(k, k) = t;
    Hmat(k + 1, k) = cplx(0.0, 0.0);
    g(k + 1) = -sn[std::size_t(k)] * g(k);
    g(k) = std::conj(cs[std::size_t(k)]) * g(k);

    const double rel = std::abs(g(k + 1)) / bnorm;
    result.iterations = k + 1;
    result.residual = rel;
    if (rel <= tol) {
      ++k;
      result.converged = true;
      break;
    }
    if (hnext == 0.0) {  // breakdown: Krylov space exhausted, solution exact
      ++k;
      result.converged = true;
      break;
    }
    V.push_back(w / hnext);
  }

  const int kk = std::min(k, m);
  if (kk > 0) {
    Eigen::VectorXcd y = Hmat.topLeftCorner(kk, kk)
                             .triangularView<Eigen::Upper>()
                             .solve(g.head(kk));
    for (int i = 0; i < kk; ++i) x += y(i) * V[std::size_t(i)];
  }
  return result;
}

Eigen::VectorXcd flatten_channel(const std::vector<Multivector>& values) {
  if (values.empty()) return Eigen::VectorXcd();
  const std::size_t dim = values[0].ncoeffs();
  Eigen::VectorXcd out(Eigen::Index(values.size() * dim));
  Eigen::Index at = 0;
  for (const auto& v : values) {
    for (std::size_t b = 0; b < dim; ++b) out(at++) = v.coeffs()[b];
  }
  return out;
}

std::vector<Multivector> unflatten_channel(const Eigen::VectorXcd& vec, int dim) {
  const std::size_t ncoeff = std::size_t(1) << dim;
  if (vec.size() % Eigen::Index(ncoeff) != 0) {
    throw std::invalid_argument("unflatten_channel: vector length not a multiple of 2^dim");
  }
  const std::size_t M = std::size_t(vec.size()) / ncoeff;
  std::vector<Multivector> out(M, Multivector(dim));
  Eigen::Index at = 0;
  for (std::size_t j = 0; j < M; ++j) {
    for (std::size_t b = 0; b < ncoeff; ++b) out[j].coeffs()[b] = vec(at++);
  }
  return out;
}

namespace {

// Left-multiplication matrix of m in the blade-coefficient basis.
void left_multiplication_block(Eigen::MatrixXcd& dst, Eigen::Index row0, Eigen::Index col0,
                               const Multivector& m, const SignTable& table) {
  const std::size_t dim = m.ncoeffs();
  for (BladeIndex b = 0; b < dim; ++b) {
    for (BladeIndex a = 0; a < dim; ++a) {
      const cplx v = m[a];
      if (v == cplx(0.0, 0.0)) continue;
      dst(row0 + Eigen::Index(a ^ b), col0 + Eigen::Index(b)) += double(table.at(a, b)) * v;
    }
  }
}

std::vector<Multivector> apply_resolvent_channel(const SurfaceMesh& mesh,
                                                 const std::vector<Multivector>& channel,
                                                 bool rotated, const SolverConfig& config,
                                                 SolverStats* stats) {
  const int two_n = 2 * mesh.n;
  const Eigen::VectorXcd rhs = flatten_channel(channel);
  // On n = 2 meshes the subtraction contributes the skew diagonal
  //   -(R_i - dagger(R_i)) / 2 .
  // to A, while the identity parts of H and H* cancel; the off-diagonal part
  // of A is (P - nu P nu) / 2 in every dimension. Precomputing the diagonal
  // keeps each iteration at two punctured applications.
  std::vector<Multivector> Rskew;
  if (mesh.n != 1) {
    Rskew = channel_correction(mesh, rotated);
    for (auto& r : Rskew) {
      const Multivector d = hermitean_dagger(r);
      r -= d;
      r *= cplx(0.5, 0.0);
    }
  }
  const SignTable& skew_table = sign_table(two_n);
  auto matvec = [&](const Eigen::VectorXcd& u) {
    std::vector<Multivector> uc = unflatten_channel(u, two_n);
    // (I + A) u with A = (H - H*) / 2 on this channel.
    std::vector<Multivector> Hu = punctured_channel_apply(mesh, uc, rotated);
    std::vector<Multivector> nHnu = nu_channel(
        mesh, punctured_channel_apply(mesh, nu_channel(mesh, uc, rotated), rotated), rotated);
    const cplx half(0.5, 0.0);
    Multivector corr(two_n);
    for (std::size_t j = 0; j < uc.size(); ++j) {
      Hu[j] -= nHnu[j];
      Hu[j] *= half;
      if (!Rskew.empty()) {
        geometric_product_into(corr, Rskew[j], uc[j], skew_table);
        Hu[j] -= corr;
      }
      Hu[j] += uc[j];
    }
    return flatten_channel(Hu);
  };

  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(rhs.size());
  GmresResult res;
  if (!config.force_dense) {
    res = gmres(matvec, rhs, x, config.tol, config.max_iter);
  }
  if (config.force_dense || !res.converged) {
    if (mesh.n != 1) {
      throw std::runtime_error(
          "szego_projection: iteration did not converge (residual " +
          std::to_string(res.residual) + ") and the dense fallback requires n = 1");
    }
    const SignTable& table = sign_table(two_n);
    const Eigen::Index dim = Eigen::Index(1) << two_n;
    const Eigen::Index N = Eigen::Index(mesh.size()) * dim;
    const Eigen::MatrixXcd H = dense_hilbert_channel(mesh, rotated);
    Eigen::MatrixXcd Nu = Eigen::MatrixXcd::Zero(N, N);
    const auto& nus = rotated ? mesh.normals_J : mesh.normals;
    for (std::size_t j = 0; j < mesh.size(); ++j) {
      left_multiplication_block(Nu, Eigen::Index(j) * dim, Eigen::Index(j) * dim,
                                embed_vector(nus[j]), table);
    }
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(N, N) + 0.5 * (H - Nu * H * Nu);
    x = op.partialPivLu().solve(rhs);
    if (stats) {
      stats->used_dense_fallback = true;
      stats->iterations += res.iterations;
      stats->residual = std::max(stats->residual, (matvec(x) - rhs).norm() /
                                                      std::max(rhs.norm(), 1e-300));
    }
  } else if (stats) {
    stats->iterations += res.iterations;
    stats->residual = std::max(stats->residual, res.residual);
  }
  return unflatten_channel(x, two_n);
}

}  // namespace

BoundaryField szego_projection(const SurfaceMesh& mesh, const BoundaryField& L,
                               const SolverConfig& config, SolverStats* stats) {
  check_field(mesh, L, "szego_projection");
  if (stats) *stats = SolverStats{};
  std::vector<Multivector> us =
      apply_resolvent_channel(mesh, channel_sum(L), true, config, stats);
  std::vector<Multivector> ud =
      apply_resolvent_channel(mesh, channel_diff(L), false, config, stats);
  return hardy_projection(mesh, from_channels(us, ud));
}

Eigen::MatrixXcd dense_hilbert_channel(const SurfaceMesh& mesh, bool rotated) {
  if (mesh.n != 1) {
    throw std::invalid_argument("dense_hilbert_channel: requires n = 1 meshes");
  }
  const int two_n = 2;
  const SignTable& table = sign_table(two_n);
  const Eigen::Index dim = 4;
  const Eigen::Index N = Eigen::Index(mesh.size()) * dim;
  const double w2n = sphere_area(1);
  const auto& nus = rotated ? mesh.normals_J : mesh.normals;
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(N, N);
  Multivector B(two_n), Emv(two_n);
  double diff[2], jdiff[2];
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    for (std::size_t j = 0; j < mesh.size(); ++j) {
      if (i == j) continue;
      double r2 = 0.0;
      for (int c = 0; c < two_n; ++c) {
        diff[c] = mesh.nodes[j][c] - mesh.nodes[i][c];
        r2 += diff[c] * diff[c];
      }
      const double scale = -2.0 * mesh.weights[j] / (w2n * r2);
      const double* comp = diff;
      if (rotated) {
        jdiff[0] = diff[1];
        jdiff[1] = -diff[0];
        comp = jdiff;
      }
      fill_vector_multivector(Emv, comp, two_n, scale);
      geometric_product_into(B, Emv, embed_vector(nus[j]), table);
      left_multiplication_block(H, Eigen::Index(i) * dim, Eigen::Index(j) * dim, B, table);
    }
  }
  return H;
}

BoundaryField szego_kernel_row(const SurfaceMesh& mesh, int row, const SolverConfig& config) {
  if (mesh.n != 1) {
    throw std::invalid_argument(
        "szego_kernel_row: dense kernel recovery requires n = 1 meshes");
  }
  if (row < 0 || std::size_t(row) >= mesh.size()) {
    throw std::invalid_argument("szego_kernel_row: row index out of range");
  }
  const int two_n = 2;
  const SignTable& table = sign_table(two_n);
  const Eigen::Index dim = 4;
  const Eigen::Index N = Eigen::Index(mesh.size()) * dim;
  (void)config;

  std::vector<Multivector> kernel_s, kernel_d;
  for (int c = 0; c < 2; ++c) {
    const bool rotated = (c == 0);
    const Eigen::MatrixXcd H = dense_hilbert_channel(mesh, rotated);
    Eigen::MatrixXcd Nu = Eigen::MatrixXcd::Zero(N, N);
    const auto& nus = rotated ? mesh.normals_J : mesh.normals;
    for (std::size_t j = 0; j < mesh.size(); ++j) {
      left_multiplication_block(Nu, Eigen::Index(j) * dim, Eigen::Index(j) * dim,
                                embed_vector(nus[j]), table);
    }
    const Eigen::MatrixXcd C =
        0.5 * (Eigen::MatrixXcd::Identity(N, N) + H);
    const Eigen::MatrixXcd IA =
        Eigen::MatrixXcd::Identity(N, N) + 0.5 * (H - Nu * H * Nu);
    // S = C (I + A)^{-1}, realized row-block by solving the transposed system.
    const Eigen::MatrixXcd S =
        C * IA.partialPivLu().solve(Eigen::MatrixXcd::Identity(N, N));
    std::vector<Multivector>& kernel = rotated ? kernel_s : kernel_d;
    kernel.assign(mesh.size(), Multivector(two_n));
    for (std::size_t j = 0; j < mesh.size(); ++j) {
      // The (row, j) block is left multiplication by a multivector whose
      // coefficients sit in the scalar-basis column; divide out the weight.
      Multivector m(two_n);
      for (Eigen::Index b = 0; b < dim; ++b) {
        m[BladeIndex(b)] = S(Eigen::Index(row) * dim + b, Eigen::Index(j) * dim);
      }
      m *= cplx(1.0 / mesh.weights[j], 0.0);
      kernel[j] = m;
    }
  }
  return from_channels(kernel_s, kernel_d);
}

HardyDecomposition hardy_decompose(const SurfaceMesh& mesh, const BoundaryField& L,
                                   const SolverConfig& config) {
  check_field(mesh, L, "hardy_decompose");
  HardyDecomposition dec{szego_projection(mesh, L, config), {}};
  BoundaryField rest = L;
  for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= dec.hardy[j];
  dec.conj = nu_multiply(mesh, rest);
  for (auto& v : dec.conj) v *= cplx(-1.0, 0.0);
  return dec;
}

CalibrationResult calibrate_cauchy_constant(const SurfaceMesh& mesh) {
  const int two_n = 2 * mesh.n;
  BoundaryField ones(mesh.size(),
                     CirculantPair(Multivector::scalar(two_n, cplx(1.0, 0.0)),
                                   Multivector(two_n)));
  const CirculantPair value = cauchy_transform(mesh, ones, {VectorR2n(mesh.n)})[0];
  CalibrationResult result;
  result.c_hat = scalar_part(value.a);
  result.c_analytic = hermitean_measure_constant(mesh.n);
  result.orientation_sign =
      (result.c_hat / result.c_analytic).real() >= 0.0 ? 1 : -1;
  CirculantPair expected(
      Multivector::scalar(two_n, double(result.orientation_sign) * result.c_analytic),
      Multivector(two_n));
  result.deviation = circulant_norm(value - expected);
  return result;
}

DirichletSolution::DirichletSolution(SurfaceMesh mesh, BoundaryField hardy, BoundaryField conj,
                                     cplx c_hat)
    : mesh_(std::move(mesh)), hardy_(std::move(hardy)), conj_(std::move(conj)), c_hat_(c_hat) {}

CirculantPair DirichletSolution::evaluate(const VectorR2n& X) const {
  if (euclidean_norm(X) >= 1.0) {
    throw std::domain_error("DirichletSolution: evaluation point must be interior");
  }
  const std::vector<VectorR2n> pts{X};
  const cplx inv_c = cplx(1.0, 0.0) / c_hat_;
  CirculantPair G = cauchy_transform(mesh_, hardy_, pts)[0];
  CirculantPair Hc = cauchy_transform(mesh_, conj_, pts)[0];
  G *= inv_c;
  Hc *= inv_c;

  // Coordinate multiplier with channels (twisted position, position).
  const int two_n = 2 * mesh_.n;
  const SignTable& table = sign_table(two_n);
  const Multivector Xs = embed_vector(apply_J_vector(X));
  const Multivector Xd = embed_vector(X);
  Multivector chi_s(two_n), chi_d(two_n);
  geometric_product_into(chi_s, Xs, Hc.a + Hc.b, table);
  geometric_product_into(chi_d, Xd, Hc.a - Hc.b, table);
  const cplx half(0.5, 0.0);
  CirculantPair chi_term(half * (chi_s + chi_d), half * (chi_s - chi_d));
  return G + chi_term;
}

DirichletSolution dirichlet_solve_ball(const SurfaceMesh& mesh, const BoundaryField& L,
                                       const SolverConfig& config) {
  check_field(mesh, L, "dirichlet_solve_ball");
  for (std::size_t j = 0; j < mesh.size(); ++j) {
    if (std::abs(euclidean_norm(mesh.nodes[j]) - 1.0) > 1e-9 ||
        euclidean_norm(mesh.nodes[j] - mesh.normals[j]) > 1e-9) {
      throw std::invalid_argument("dirichlet_solve_ball: requires a unit-ball mesh");
    }
  }
  HardyDecomposition dec = hardy_decompose(mesh, L, config);
  const CalibrationResult cal = calibrate_cauchy_constant(mesh);
  return DirichletSolution(mesh, std::move(dec.hardy), std::move(dec.conj), cal.c_hat);
}

BoundaryField hardy_witness_field(const SurfaceMesh& mesh, const VectorR2n& pole,
                                  const CirculantPair* right_factor) {
  if (pole.dim2n() != 2 * mesh.n) {
    throw std::invalid_argument("hardy_witness_field: pole dimension does not match mesh");
  }
  double circumradius = 0.0;
  for (const auto& node : mesh.nodes) {
    circumradius = std::max(circumradius, euclidean_norm(node));
  }
  if (euclidean_norm(pole) < 1.5 * circumradius - 1e-12) {
    throw std::invalid_argument(
        "hardy_witness_field: pole must lie at least 1.5 circumradii from the origin");
  }
  BoundaryField out;
  out.reserve(mesh.size());
  for (const auto& node : mesh.nodes) {
    CirculantPair value = matrix_kernel(node - pole);
    if (right_factor) value = circulant_product(value, *right_factor);
    out.push_back(std::move(value));
  }
  return out;
}

double ball_geometry_residual(const SurfaceMesh& mesh) {
  double worst = 0.0;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    for (std::size_t j = i + 1; j < mesh.size(); ++j) {
      const VectorR2n diff = mesh.nodes[j] - mesh.nodes[i];
      const VectorR2n nsum = mesh.normals[i] + mesh.normals[j];
      worst = std::max(worst, std::abs(dot(diff, nsum)));
    }
  }
  return worst;
}

}  // namespace hermicl
