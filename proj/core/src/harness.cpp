#include "hermicl/harness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "hermicl/kernels.hpp"

namespace hermicl {

namespace {

constexpr double kNoiseFloor = 1e-12;

double suite_tol(const RunConfig& config, double fallback) {
  return config.tol > 0.0 ? config.tol : fallback;
}

void add_check(Report& rep, const std::string& id, const std::string& description,
               double residual, double threshold, const std::string& comparison = "<=") {
  CheckResult c;
  c.id = id;
  c.description = description;
  c.residual = residual;
  c.threshold = threshold;
  c.comparison = comparison;
  c.pass = comparison == ">=" ? residual >= threshold : residual <= threshold;
  rep.checks.push_back(std::move(c));
}

using LadderRows = std::vector<std::pair<int, double>>;

void add_ladder(Report& rep, const std::string& id, const LadderRows& rows) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    ConvergenceRow row;
    row.id = id;
    row.M = rows[k].first;
    row.residual = rows[k].second;
    if (k > 0 && rows[k - 1].second > kNoiseFloor && rows[k].second > kNoiseFloor) {
      row.order = std::log(rows[k - 1].second / rows[k].second) /
                  std::log(double(rows[k].first) / double(rows[k - 1].first));
      row.has_order = true;
    }
    rep.convergence.push_back(std::move(row));
  }
}

// Largest increase between consecutive rungs, ignoring rungs at the noise
// floor; zero for a non-increasing ladder.
double ladder_increase(const LadderRows& rows) {
  double worst = 0.0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k].second <= kNoiseFloor) continue;
    worst = std::max(worst, rows[k].second - rows[k - 1].second);
  }
  return worst;
}

// Smallest computable convergence order of a ladder; returns fallback when
// every rung pair sits below the noise floor.
double ladder_min_order(const LadderRows& rows, double fallback) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k - 1].second <= kNoiseFloor || rows[k].second <= kNoiseFloor) continue;
    const double order = std::log(rows[k - 1].second / rows[k].second) /
                         std::log(double(rows[k].first) / double(rows[k - 1].first));
    best = std::min(best, order);
  }
  return std::isfinite(best) ? best : fallback;
}

double max_pair_norm(const BoundaryField& F) {
  double m = 0.0;
  for (const auto& v : F) m = std::max(m, circulant_norm(v));
  return m;
}

double safe_div(double a, double b) { return a / std::max(b, 1e-300); }

std::string canonical_suite(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"clifford-product-axioms", "clifford-product-axioms"},
      {"verify-algebra", "clifford-product-axioms"},
      {"cauchy-kernel-monogenicity", "cauchy-kernel-monogenicity"},
      {"verify-kernels", "cauchy-kernel-monogenicity"},
      {"plemelj-jump", "plemelj-jump"},
      {"jump-test", "plemelj-jump"},
      {"hilbert-involution-adjoint", "hilbert-involution-adjoint"},
      {"operator-identities", "hilbert-involution-adjoint"},
      {"kerzman-stein-skewness", "kerzman-stein-skewness"},
      {"kerzman-stein", "kerzman-stein-skewness"},
      {"szego-projection", "szego-projection"},
      {"szego", "szego-projection"},
      {"ball-characterization", "ball-characterization"},
      {"theorem41", "ball-characterization"},
      {"hardy-dirichlet", "hardy-dirichlet"},
      {"dirichlet", "hardy-dirichlet"},
  };
  const auto it = aliases.find(name);
  if (it == aliases.end()) {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return it->second;
}

int surface_half_dimension(const std::string& surface) {
  if (surface == "circle" || surface == "ellipse") return 1;
  if (surface == "s3" || surface == "ellipsoid4") return 2;
  throw std::invalid_argument("unknown surface '" + surface + "'");
}

std::vector<int> default_ladder(const std::string& suite, int n) {
  if (n == 2) {
    if (suite == "hilbert-involution-adjoint") return {8, 12};
    return {8};
  }
  if (suite == "plemelj-jump" || suite == "kerzman-stein-skewness" ||
      suite == "szego-projection") {
    return {128, 256, 512};
  }
  if (suite == "hilbert-involution-adjoint") return {256, 512, 1024};
  return {512};
}

VectorR2n witness_pole(const SurfaceMesh& mesh) {
  double circumradius = 0.0;
  for (const auto& node : mesh.nodes) {
    circumradius = std::max(circumradius, euclidean_norm(node));
  }
  VectorR2n dir = mesh.n == 1 ? VectorR2n{2.2, 0.9} : VectorR2n{2.2, 0.9, -1.3, 0.7};
  return (3.0 * circumradius / euclidean_norm(dir)) * dir;
}

BoundaryField make_witness(const SurfaceMesh& mesh, std::uint64_t seed) {
  FieldRng rng(seed);
  const int two_n = 2 * mesh.n;
  const CirculantPair R(random_multivector(two_n, rng), random_multivector(two_n, rng));
  return hardy_witness_field(mesh, witness_pole(mesh), &R);
}

double relative_difference(const SurfaceMesh& mesh, const BoundaryField& got,
                           const BoundaryField& want, double denom) {
  BoundaryField diff = got;
  for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= want[j];
  return safe_div(field_norm(mesh, diff), denom);
}

// ---------------------------------------------------------------------------
// Suite: clifford-product-axioms
// ---------------------------------------------------------------------------

// Independent sign oracle: concatenate generator lists, bubble-sort with a
// sign flip per swap, then cancel equal adjacent generators at -1 each.
BladeProduct brute_force_blade_product(BladeIndex a, BladeIndex b, int m) {
  std::vector<int> gens;
  for (int i = 0; i < m; ++i) {
    if ((a >> i) & 1u) gens.push_back(i);
  }
  for (int i = 0; i < m; ++i) {
    if ((b >> i) & 1u) gens.push_back(i);
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
  BladeIndex blade = 0;
  for (std::size_t k = 0; k < gens.size();) {
    if (k + 1 < gens.size() && gens[k] == gens[k + 1]) {
      sign = -sign;
      k += 2;
    } else {
      blade |= BladeIndex(1) << gens[k];
      ++k;
    }
  }
  return BladeProduct{sign, blade};
}

Report run_algebra(const RunConfig& config) {
  Report rep;
  rep.suite = "clifford-product-axioms";
  rep.op = "geometric-product";
  rep.surface = "";
  rep.n = 0;
  rep.M = 1000;
  rep.seed = config.seed;
  FieldRng rng(config.seed);

  long mismatches = 0;
  for (int m = 1; m <= 5; ++m) {
    const BladeIndex dim = BladeIndex(1) << m;
    for (BladeIndex a = 0; a < dim; ++a) {
      for (BladeIndex b = 0; b < dim; ++b) {
        const BladeProduct got = blade_product_sign(a, b, m);
        const BladeProduct want = brute_force_blade_product(a, b, m);
        if (got.sign != want.sign || got.blade != want.blade) ++mismatches;
      }
    }
  }
  {
    const int m = 6;
    const BladeIndex dim = BladeIndex(1) << m;
    for (int k = 0; k < 1000; ++k) {
      const BladeIndex a = BladeIndex(rng.index(dim));
      const BladeIndex b = BladeIndex(rng.index(dim));
      const BladeProduct got = blade_product_sign(a, b, m);
      const BladeProduct want = brute_force_blade_product(a, b, m);
      if (got.sign != want.sign || got.blade != want.blade) ++mismatches;
    }
  }
  add_check(rep, "sign-oracle",
            "blade products match the reordering sign oracle exactly",
            double(mismatches), 0.0);

  double assoc = 0.0, distrib = 0.0, conj_hom = 0.0, dagger_hom = 0.0;
  for (int m = 1; m <= 6; ++m) {
    for (int k = 0; k < 1000; ++k) {
      const Multivector a = random_multivector(m, rng);
      const Multivector b = random_multivector(m, rng);
      const Multivector c = random_multivector(m, rng);
      const double scale = norm(a) * norm(b) * std::max(norm(c), 1.0);
      assoc = std::max(assoc, safe_div(norm((a * b) * c - a * (b * c)), scale));
      distrib = std::max(
          distrib, safe_div(norm(a * (b + c) - (a * b + a * c)),
                            norm(a) * (norm(b) + norm(c))));
      conj_hom = std::max(
          conj_hom,
          safe_div(norm(clifford_conjugate(a * b) -
                        clifford_conjugate(b) * clifford_conjugate(a)),
                   norm(a) * norm(b)));
      dagger_hom = std::max(
          dagger_hom, safe_div(norm(hermitean_dagger(a * b) -
                                    hermitean_dagger(b) * hermitean_dagger(a)),
                               norm(a) * norm(b)));
    }
  }
  add_check(rep, "associativity", "(ab)c = a(bc) over random multivectors, m <= 6",
            assoc, 1e-12);
  add_check(rep, "distributivity", "a(b+c) = ab + ac over random multivectors",
            distrib, 1e-12);
  add_check(rep, "conjugation-antihomomorphism", "conj(ab) = conj(b) conj(a)",
            conj_hom, 1e-12);
  add_check(rep, "dagger-antihomomorphism", "dagger(ab) = dagger(b) dagger(a)",
            dagger_hom, 1e-12);

  double witt = 0.0;
  for (int nn = 1; nn <= 3; ++nn) {
    const WittBasis wb = witt_basis(nn);
    const int two_n = 2 * nn;
    for (int j = 0; j < nn; ++j) {
      for (int k = 0; k < nn; ++k) {
        witt = std::max(witt, norm(wb.f[j] * wb.f[k] + wb.f[k] * wb.f[j]));
        witt = std::max(witt, norm(wb.f_dag[j] * wb.f_dag[k] + wb.f_dag[k] * wb.f_dag[j]));
        Multivector anti = wb.f[j] * wb.f_dag[k] + wb.f_dag[k] * wb.f[j];
        if (j == k) anti -= Multivector::scalar(two_n, cplx(1.0, 0.0));
        witt = std::max(witt, norm(anti));
      }
    }
  }
  add_check(rep, "witt-relations",
            "Grassmann and duality identities of the isotropic frame, n <= 3",
            witt, 1e-14);

  double embed_sq = 0.0;
  for (int nn = 1; nn <= 3; ++nn) {
    for (int k = 0; k < 200; ++k) {
      VectorR2n X(nn);
      for (int c = 0; c < 2 * nn; ++c) X[c] = rng.uniform();
      const double r2 = dot(X, X);
      if (r2 < 1e-8) continue;
      const Multivector mv = embed_vector(X);
      embed_sq = std::max(
          embed_sq,
          safe_div(norm(mv * mv + Multivector::scalar(2 * nn, cplx(r2, 0.0))), r2));
    }
  }
  add_check(rep, "embedding-square", "embedded vectors square to -|X|^2", embed_sq,
            1e-13);
  return rep;
}

// ---------------------------------------------------------------------------
// Suite: cauchy-kernel-monogenicity
// ---------------------------------------------------------------------------

Multivector fd_dirac(const VectorR2n& X, int n, bool twisted, double h,
                     const std::function<Multivector(const VectorR2n&)>& f) {
  const int two_n = 2 * n;
  Multivector acc(two_n);
  for (int c = 0; c < two_n; ++c) {
    VectorR2n Xp = X, Xm = X;
    Xp[c] += h;
    Xm[c] -= h;
    Multivector diff = f(Xp) - f(Xm);
    diff *= cplx(1.0 / (2.0 * h), 0.0);
    // Plain Dirac pairs e_c with d/dx_c; the twisted one pairs e_j with
    // d/dy_j and -e_{n+j} with d/dx_j.
    int blade_axis = c;
    double sign = 1.0;
    if (twisted) {
      if (c < n) {
        blade_axis = n + c;
        sign = -1.0;
      } else {
        blade_axis = c - n;
      }
    }
    Multivector term = Multivector::basis_blade(two_n, BladeIndex(1) << blade_axis) * diff;
    term *= cplx(sign, 0.0);
    acc += term;
  }
  return acc;
}

Report run_kernels(const RunConfig& config) {
  Report rep;
  rep.suite = "cauchy-kernel-monogenicity";
  rep.op = "cauchy-kernel";
  rep.surface = config.surface;
  rep.n = surface_half_dimension(config.surface);
  rep.M = 100;
  rep.seed = config.seed;
  const int n = rep.n;
  const int two_n = 2 * n;
  FieldRng rng(config.seed);
  const double w2n = sphere_area(n);

  double homo_E = 0.0, homo_matrix = 0.0, fd_plain = 0.0, fd_twist = 0.0, herm = 0.0;
  const double h = 1e-5;
  for (int k = 0; k < 100; ++k) {
    VectorR2n X(n);
    double r2 = 0.0;
    do {
      r2 = 0.0;
      for (int c = 0; c < two_n; ++c) {
        X[c] = rng.uniform();
        r2 += X[c] * X[c];
      }
    } while (r2 < 0.04);
    const double radius = 0.1 * std::pow(100.0, (rng.uniform() + 1.0) / 2.0);
    X = (radius / std::sqrt(r2)) * X;

    const double lambda = 1.25 + 0.75 * rng.uniform();
    const Multivector E = kernel_E(X);
    const double escale = std::max(norm(E), 1e-300);
    const double power = std::pow(lambda, 1.0 - 2.0 * n);
    homo_E = std::max(homo_E, norm(kernel_E(lambda * X) - cplx(power, 0.0) * E) /
                                  (power * escale));
    const CirculantPair matK = matrix_kernel(X);
    homo_matrix = std::max(
        homo_matrix,
        circulant_norm(matrix_kernel(lambda * X) - cplx(power, 0.0) * matK) /
            (power * std::max(circulant_norm(matK), 1e-300)));

    // Residuals are scaled by |E|/|X|, the local derivative magnitude.
    const double deriv_scale = escale / radius;
    fd_plain = std::max(
        fd_plain,
        norm(fd_dirac(X, n, false, h, [](const VectorR2n& P) { return kernel_E(P); })) /
            deriv_scale);
    fd_twist = std::max(
        fd_twist,
        norm(fd_dirac(X, n, true, h, [](const VectorR2n& P) { return kernel_EJ(P); })) /
            deriv_scale);

    const Multivector Z = hermitean_vars(X).Z;
    const double rpow = std::pow(radius, 2.0 * n);
    herm = std::max(herm,
                    norm(kernel_eps(X) - cplx(2.0 / (w2n * rpow), 0.0) * Z) / escale);
  }
  add_check(rep, "homogeneity-plain", "E(t X) = t^{1-2n} E(X), 100 samples", homo_E,
            1e-13);
  add_check(rep, "homogeneity-matrix",
            "matrix kernel is homogeneous of degree 1-2n", homo_matrix, 1e-13);
  add_check(rep, "fd-monogenicity-plain",
            "central differences of the Dirac action on E, h = 1e-5", fd_plain, 1e-6);
  add_check(rep, "fd-monogenicity-twisted",
            "central differences of the twisted Dirac action on E|", fd_twist, 1e-6);
  add_check(rep, "hermitean-kernel-identity",
            "eps equals 2 Z / (w_{2n} |X|^{2n}) identically", herm, 1e-14);
  return rep;
}

// ---------------------------------------------------------------------------
// Suite: plemelj-jump
// ---------------------------------------------------------------------------

Report run_jump(const RunConfig& config) {
  Report rep;
  rep.suite = "plemelj-jump";
  rep.op = "cauchy-integral";
  rep.n = surface_half_dimension(config.surface);
  rep.seed = config.seed;
  if (rep.n != 1) {
    throw std::invalid_argument("plemelj-jump: supported on circle and ellipse meshes");
  }
  std::vector<int> ladder = config.nodes.empty() ? default_ladder(rep.suite, rep.n)
                                                 : config.nodes;
  const cplx cn = hermitean_measure_constant(1);
  LadderRows rows_in, rows_out;
  for (int M : ladder) {
    const SurfaceMesh mesh = build_surface(config, M);
    rep.surface = mesh.label;
    rep.M = int(mesh.size());
    // A certified Hardy-class density: the trace of a kernel with exterior
    // pole. Pole and factor are rung-independent, so every rung samples the
    // same smooth field.
    const BoundaryField L = make_witness(mesh, config.seed);
    const BoundaryField CL = hardy_projection(mesh, L);
    const double scale = std::max(max_pair_norm(L), 1e-300);
    const double t = 1.5 * mesh.spacing;

    std::vector<VectorR2n> pts;
    std::vector<std::size_t> targets;
    const std::size_t stride = std::max<std::size_t>(1, mesh.size() / 16);
    for (std::size_t i = 0; i < mesh.size(); i += stride) {
      targets.push_back(i);
      pts.push_back(mesh.nodes[i] - t * mesh.normals[i]);
      pts.push_back(mesh.nodes[i] + t * mesh.normals[i]);
    }
    const std::vector<CirculantPair> vals = cauchy_transform(mesh, L, pts);
    double res_in = 0.0, res_out = 0.0;
    for (std::size_t k = 0; k < targets.size(); ++k) {
      const std::size_t i = targets[k];
      const CirculantPair want_in = cn * CL[i];
      const CirculantPair want_out = cn * (CL[i] - L[i]);
      res_in = std::max(res_in, circulant_norm(vals[2 * k] - want_in) / scale);
      res_out = std::max(res_out, circulant_norm(vals[2 * k + 1] - want_out) / scale);
    }
    rows_in.emplace_back(int(mesh.size()), res_in);
    rows_out.emplace_back(int(mesh.size()), res_out);
  }
  add_ladder(rep, "interior-jump", rows_in);
  add_ladder(rep, "exterior-jump", rows_out);
  const double tol = suite_tol(config, 5e-2);
  add_check(rep, "interior-jump-final",
            "interior trace along the normal matches the projected density",
            rows_in.back().second, tol);
  add_check(rep, "exterior-jump-final",
            "exterior trace matches the complementary projection",
            rows_out.back().second, tol);
  add_check(rep, "interior-jump-order", "approach-path convergence rate",
            ladder_min_order(rows_in, 0.8), 0.8, ">=");
  add_check(rep, "exterior-jump-order", "approach-path convergence rate",
            ladder_min_order(rows_out, 0.8), 0.8, ">=");
  return rep;
}

// ---------------------------------------------------------------------------
// Suite: hilbert-involution-adjoint
// ---------------------------------------------------------------------------

Report run_operator_identities(const RunConfig& config) {
  Report rep;
  rep.suite = "hilbert-involution-adjoint";
  rep.op = "H";
  rep.n = surface_half_dimension(config.surface);
  rep.seed = config.seed;
  std::vector<int> ladder = config.nodes.empty() ? default_ladder(rep.suite, rep.n)
                                                 : config.nodes;
  LadderRows rows_inv, rows_adj, rows_dual, rows_skew;
  double weight_sum_err = -1.0;
  for (int M : ladder) {
    const SurfaceMesh mesh = build_surface(config, M);
    rep.surface = mesh.label;
    rep.M = int(mesh.size());
    const BoundaryField L = rep.n == 1 ? random_smooth_field(mesh, 3, config.seed)
                                       : make_witness(mesh, config.seed);
    const BoundaryField K = random_smooth_field(mesh, 2, config.seed + 1);
    const double nL = field_norm(mesh, L);
    const double nK = field_norm(mesh, K);

    const BoundaryField HL = hilbert_transform(mesh, L);
    const BoundaryField HHL = hilbert_transform(mesh, HL);
    rows_inv.emplace_back(int(mesh.size()), relative_difference(mesh, HHL, L, nL));

    const BoundaryField HstarK = hilbert_adjoint(mesh, K, AdjointPath::NuFormula);
    const cplx lhs = inner_product(mesh, HL, K);
    const cplx rhs = inner_product(mesh, L, HstarK);
    rows_adj.emplace_back(int(mesh.size()), safe_div(std::abs(lhs - rhs), nL * nK));

    if (rep.n == 1) {
      // Dual route to the adjoint: dense conjugate-transpose in the weighted
      // metric against the closed nu-formula.
      const BoundaryField dense = hilbert_adjoint(mesh, L, AdjointPath::Dense);
      const BoundaryField formula = hilbert_adjoint(mesh, L, AdjointPath::NuFormula);
      rows_dual.emplace_back(int(mesh.size()),
                             relative_difference(mesh, dense, formula, nL));
    }

    const BoundaryField AL = kerzman_stein(mesh, L);
    const BoundaryField AK = kerzman_stein(mesh, K);
    const cplx skew = inner_product(mesh, AL, K) + inner_product(mesh, L, AK);
    rows_skew.emplace_back(int(mesh.size()), safe_div(std::abs(skew), nL * nK));

    if (config.surface == "s3") {
      double wsum = 0.0;
      for (double w : mesh.weights) wsum += w;
      weight_sum_err = std::abs(wsum - 2.0 * std::numbers::pi * std::numbers::pi);
    }
  }
  add_ladder(rep, "involution", rows_inv);
  add_ladder(rep, "adjoint-pairing", rows_adj);
  if (!rows_dual.empty()) add_ladder(rep, "adjoint-dual-route", rows_dual);
  add_ladder(rep, "skewness", rows_skew);
  const double tol = suite_tol(config, 5e-2);
  // Discretization-class residual: the punctured curve quadrature converges
  // quickly, while the subtracted n = 2 quadrature is first order in local
  // spacing; the default envelopes reflect the default rungs.
  add_check(rep, "involution", "H(H L) = L on a smooth density",
            rows_inv.back().second, rep.n == 1 ? tol : suite_tol(config, 2.5e-1));
  add_check(rep, "adjoint-pairing", "<H L, K> = <L, H* K> in the weighted pairing",
            rows_adj.back().second, tol);
  if (!rows_dual.empty()) {
    add_check(rep, "adjoint-dual-route",
              "dense-transpose adjoint matches the nu-formula adjoint",
              rows_dual.back().second, tol);
  }
  add_check(rep, "skewness", "<A L, K> + <L, A K> = 0", rows_skew.back().second, tol);
  add_check(rep, "involution-monotone",
            "involution residual does not increase under refinement",
            ladder_increase(rows_inv), 0.0);
  if (weight_sum_err >= 0.0) {
    add_check(rep, "weight-sum", "quadrature weights sum to the S^3 area 2 pi^2",
              weight_sum_err, 1e-3);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Suite: kerzman-stein-skewness
// ---------------------------------------------------------------------------

Report run_kerzman_stein(const RunConfig& config) {
  Report rep;
  rep.suite = "kerzman-stein-skewness";
  rep.op = "A";
  rep.n = surface_half_dimension(config.surface);
  rep.seed = config.seed;
  std::vector<int> ladder = config.nodes.empty() ? default_ladder(rep.suite, rep.n)
                                                 : config.nodes;
  LadderRows rows_norm, rows_skew;
  double resolvent_residual = 0.0;
  bool is_circle = config.surface == "circle";
  for (int M : ladder) {
    const SurfaceMesh mesh = build_surface(config, M);
    rep.surface = mesh.label;
    rep.M = int(mesh.size());
    const BoundaryField L = random_smooth_field(mesh, 3, config.seed);
    const BoundaryField K = random_smooth_field(mesh, 2, config.seed + 1);
    const double nL = field_norm(mesh, L);
    const double nK = field_norm(mesh, K);

    const BoundaryField AL = kerzman_stein(mesh, L);
    rows_norm.emplace_back(int(mesh.size()), safe_div(field_norm(mesh, AL), nL));
    const BoundaryField AK = kerzman_stein(mesh, K);
    const cplx skew = inner_product(mesh, AL, K) + inner_product(mesh, L, AK);
    rows_skew.emplace_back(int(mesh.size()), safe_div(std::abs(skew), nL * nK));

    SolverStats stats;
    szego_projection(mesh, L, SolverConfig{}, &stats);
    resolvent_residual = std::max(resolvent_residual, stats.residual);
  }
  add_ladder(rep, "skew-defect-norm", rows_norm);
  add_ladder(rep, "skew-pairing", rows_skew);
  add_check(rep, "skew-pairing", "A is exactly skew-adjoint in the weighted pairing",
            rows_skew.back().second, 1e-10);
  add_check(rep, "resolvent-solve", "(I + A) u = L solvable to the solver tolerance",
            resolvent_residual, 1e-10);
  if (is_circle) {
    add_check(rep, "ball-vanishing", "A vanishes identically on the centered circle",
              rows_norm.back().second, 1e-12);
  } else if (config.surface == "s3") {
    // On the curved-grid sphere A carries the skew diagonal of the quadrature
    // subtraction, which vanishes only under refinement; coarse-grid envelope.
    add_check(rep, "ball-vanishing", "A vanishes on the centered sphere under refinement",
              rows_norm.back().second, suite_tol(config, 5e-1));
  } else {
    add_check(rep, "defect-bounded", "relative size of A on this surface (contrast value)",
              rows_norm.back().second, 10.0);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Suite: szego-projection
// ---------------------------------------------------------------------------

Report run_szego(const RunConfig& config) {
  Report rep;
  rep.suite = "szego-projection";
  rep.op = "S";
  rep.n = surface_half_dimension(config.surface);
  rep.seed = config.seed;
  std::vector<int> ladder = config.nodes.empty() ? default_ladder(rep.suite, rep.n)
                                                 : config.nodes;
  LadderRows rows_idem, rows_selfadj, rows_ks;
  double solver_residual = 0.0;
  double hardy_match = -1.0;
  const SolverConfig solver{};
  for (int M : ladder) {
    const SurfaceMesh mesh = build_surface(config, M);
    rep.surface = mesh.label;
    rep.M = int(mesh.size());
    const BoundaryField L = random_smooth_field(mesh, 3, config.seed);
    const BoundaryField K = random_smooth_field(mesh, 2, config.seed + 1);
    const double nL = field_norm(mesh, L);
    const double nK = field_norm(mesh, K);

    SolverStats stats;
    const BoundaryField SL = szego_projection(mesh, L, solver, &stats);
    solver_residual = std::max(solver_residual, stats.residual);
    const BoundaryField SSL = szego_projection(mesh, SL, solver, &stats);
    solver_residual = std::max(solver_residual, stats.residual);
    rows_idem.emplace_back(int(mesh.size()),
                           relative_difference(mesh, SSL, SL, field_norm(mesh, SL)));

    const BoundaryField SK = szego_projection(mesh, K, solver, &stats);
    solver_residual = std::max(solver_residual, stats.residual);
    const cplx asym = inner_product(mesh, SL, K) - inner_product(mesh, L, SK);
    rows_selfadj.emplace_back(int(mesh.size()), safe_div(std::abs(asym), nL * nK));

    // S (I + A) L = C L up to the solver tolerance, by construction of S.
    BoundaryField u = kerzman_stein(mesh, L);
    for (std::size_t j = 0; j < u.size(); ++j) u[j] += L[j];
    const BoundaryField Su = szego_projection(mesh, u, solver, &stats);
    solver_residual = std::max(solver_residual, stats.residual);
    const BoundaryField CL = hardy_projection(mesh, L);
    rows_ks.emplace_back(int(mesh.size()), relative_difference(mesh, Su, CL, nL));

    if (config.surface == "circle" || config.surface == "s3") {
      hardy_match = relative_difference(mesh, SL, CL, nL);
    }
  }
  add_ladder(rep, "idempotency", rows_idem);
  add_ladder(rep, "self-adjointness", rows_selfadj);
  add_ladder(rep, "resolvent-identity", rows_ks);
  add_check(rep, "solver-residual", "GMRES relative residual across all solves",
            solver_residual, 1e-10);
  add_check(rep, "idempotency", "S(S L) = S L", rows_idem.back().second,
            suite_tol(config, rep.n == 1 ? 1e-1 : 3e-1));
  add_check(rep, "self-adjointness", "<S L, K> = <L, S K>",
            rows_selfadj.back().second, suite_tol(config, 1e-1));
  add_check(rep, "resolvent-identity", "S (I + A) = C on a smooth density",
            rows_ks.back().second, 1e-8);
  add_check(rep, "idempotency-monotone",
            "idempotency residual does not increase under refinement",
            ladder_increase(rows_idem), 0.0);
  add_check(rep, "self-adjointness-monotone",
            "self-adjointness residual does not increase under refinement",
            ladder_increase(rows_selfadj), 0.0);
  if (hardy_match >= 0.0) {
    // On the circle A = 0 exactly, so the match is sharp; on the sphere the
    // discrete A carries the quadrature subtraction and the coincidence holds
    // under refinement only (coarse-grid envelope at the default rung).
    add_check(rep, "ball-coincidence", "S = C on the centered ball mesh", hardy_match,
              suite_tol(config, rep.n == 1 ? 5e-2 : 5e-1));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Suite: ball-characterization
// ---------------------------------------------------------------------------

Report run_ball(const RunConfig& config) {
  Report rep;
  rep.suite = "ball-characterization";
  rep.op = "H";
  rep.n = surface_half_dimension(config.surface);
  rep.seed = config.seed;
  std::vector<int> ladder = config.nodes.empty() ? default_ladder(rep.suite, rep.n)
                                                 : config.nodes;
  const SurfaceMesh mesh = build_surface(config, ladder.back());
  rep.surface = mesh.label;
  rep.M = int(mesh.size());

  const double geo = ball_geometry_residual(mesh);
  const bool is_ball = geo <= 1e-10;

  const BoundaryField L = random_smooth_field(mesh, 3, config.seed);
  const BoundaryField W = make_witness(mesh, config.seed + 7);
  const double nL = field_norm(mesh, L);
  const double nW = field_norm(mesh, W);

  std::vector<std::pair<std::string, double>> residuals;

  residuals.emplace_back(
      "annihilation-alpha",
      safe_div(field_norm(mesh, alpha_multiply(mesh, hilbert_transform(
                                                         mesh, alpha_multiply(mesh, L)))),
               nL));
  residuals.emplace_back(
      "annihilation-beta",
      safe_div(field_norm(mesh, beta_multiply(mesh, hilbert_transform(
                                                        mesh, beta_multiply(mesh, L)))),
               nL));
  residuals.emplace_back(
      "hardy-swap-alpha",
      relative_difference(mesh, hilbert_transform(mesh, alpha_multiply(mesh, W)),
                          beta_multiply(mesh, W), nW));
  residuals.emplace_back(
      "hardy-swap-beta",
      relative_difference(mesh, hilbert_transform(mesh, beta_multiply(mesh, W)),
                          alpha_multiply(mesh, W), nW));
  {
    BoundaryField nuW = nu_multiply(mesh, W);
    BoundaryField HnuW = hilbert_transform(mesh, nuW);
    for (std::size_t j = 0; j < HnuW.size(); ++j) HnuW[j] += nuW[j];
    residuals.emplace_back("nu-anticommutation",
                           safe_div(field_norm(mesh, HnuW), nW));
  }
  {
    // Unitarity in the pairing sense <H L, H K> = <L, K>: both arguments stay
    // smooth, so the statement is insensitive to isolated quadrature defects
    // that a composed field residual would amplify.
    const BoundaryField HL = hilbert_transform(mesh, L);
    const BoundaryField HW = hilbert_transform(mesh, W);
    const cplx defect = inner_product(mesh, HL, HW) - inner_product(mesh, L, W);
    residuals.emplace_back("unitarity", safe_div(std::abs(defect), nL * nW));
  }
  residuals.emplace_back("skew-defect-vanishing",
                         safe_div(field_norm(mesh, kerzman_stein(mesh, L)), nL));
  {
    SolverStats stats;
    const BoundaryField SL = szego_projection(mesh, L, SolverConfig{}, &stats);
    const BoundaryField CL = hardy_projection(mesh, L);
    residuals.emplace_back("kernel-coincidence",
                           relative_difference(mesh, SL, CL, nL));
  }

  // The n = 2 default is a coarse-grid envelope: every ball-side residual is
  // quadrature dominated at the default rung and shrinks under refinement,
  // but the sharp discrimination there is the geometric witness below.
  const double tol = suite_tol(config, rep.n == 1 ? 5e-2 : 7e-1);
  for (const auto& [id, value] : residuals) {
    if (is_ball) {
      add_check(rep, id, "equivalent vanishing condition on the ball", value, tol);
    } else {
      add_check(rep, id, "obstruction magnitude on a non-ball surface (contrast value)",
                value, 10.0);
    }
  }
  if (is_ball) {
    add_check(rep, "geometric-sphere-witness",
              "max |<Y - T, nu(T) + nu(Y)>| over node pairs", geo, 1e-14);
  } else {
    add_check(rep, "geometric-sphere-witness",
              "max |<Y - T, nu(T) + nu(Y)>| over node pairs", geo, 0.1, ">=");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Suite: hardy-dirichlet
// ---------------------------------------------------------------------------

MultivectorPolynomial random_harmonic_polynomial(int n, FieldRng& rng) {
  MultivectorPolynomial poly(n);
  const int two_n = 2 * n;
  auto add_basis = [&](const std::vector<std::pair<std::vector<int>, double>>& monos) {
    const Multivector coeff = random_multivector(two_n, rng);
    for (const auto& [e, s] : monos) poly.add_term(e, coeff * cplx(s, 0.0));
  };
  if (n == 1) {
    add_basis({{{0, 0}, 1.0}});
    add_basis({{{1, 0}, 1.0}});
    add_basis({{{0, 1}, 1.0}});
    add_basis({{{2, 0}, 1.0}, {{0, 2}, -1.0}});
    add_basis({{{1, 1}, 1.0}});
    add_basis({{{3, 0}, 1.0}, {{1, 2}, -3.0}});
    add_basis({{{2, 1}, 3.0}, {{0, 3}, -1.0}});
    return poly;
  }
  // Degree <= 2 harmonic basis in four variables.
  std::vector<int> zero(std::size_t(two_n), 0);
  add_basis({{zero, 1.0}});
  for (int c = 0; c < two_n; ++c) {
    std::vector<int> e = zero;
    e[std::size_t(c)] = 1;
    add_basis({{e, 1.0}});
  }
  for (int c = 0; c < two_n; ++c) {
    for (int d = c + 1; d < two_n; ++d) {
      std::vector<int> e = zero;
      e[std::size_t(c)] = 1;
      e[std::size_t(d)] = 1;
      add_basis({{e, 1.0}});
    }
  }
  for (int c = 0; c + 1 < two_n; ++c) {
    std::vector<int> e1 = zero, e2 = zero;
    e1[std::size_t(c)] = 2;
    e2[std::size_t(two_n - 1)] = 2;
    add_basis({{e1, 1.0}, {e2, -1.0}});
  }
  return poly;
}

Report run_dirichlet(const RunConfig& config) {
  Report rep;
  rep.suite = "hardy-dirichlet";
  rep.op = "dirichlet-extension";
  rep.n = surface_half_dimension(config.surface);
  rep.seed = config.seed;
  if (config.surface != "circle" && config.surface != "s3") {
    throw std::invalid_argument("hardy-dirichlet: requires the unit circle or S^3 mesh");
  }
  std::vector<int> ladder = config.nodes.empty() ? default_ladder(rep.suite, rep.n)
                                                 : config.nodes;
  const SurfaceMesh mesh = build_surface(config, ladder.back());
  rep.surface = mesh.label;
  rep.M = int(mesh.size());
  const int two_n = 2 * rep.n;

  FieldRng rng(config.seed);
  const MultivectorPolynomial s_true = random_harmonic_polynomial(rep.n, rng);
  const MultivectorPolynomial d_true = random_harmonic_polynomial(rep.n, rng);
  auto truth = [&](const VectorR2n& X) {
    const Multivector s = s_true.evaluate(X);
    const Multivector d = d_true.evaluate(X);
    const cplx half(0.5, 0.0);
    return CirculantPair(half * (s + d), half * (s - d));
  };

  BoundaryField L;
  L.reserve(mesh.size());
  for (const auto& node : mesh.nodes) L.push_back(truth(node));

  const SolverConfig solver{};
  const DirichletSolution sol = dirichlet_solve_ball(mesh, L, solver);

  std::vector<VectorR2n> pts;
  for (int k = 0; k < 10; ++k) {
    VectorR2n dir(rep.n);
    double r2 = 0.0;
    do {
      r2 = 0.0;
      for (int c = 0; c < two_n; ++c) {
        dir[c] = rng.uniform();
        r2 += dir[c] * dir[c];
      }
    } while (r2 < 0.04);
    const double radius = 0.15 + 0.55 * (rng.uniform() + 1.0) / 2.0;
    pts.push_back((radius / std::sqrt(r2)) * dir);
  }

  double truth_scale = 0.0;
  for (const auto& P : pts) truth_scale = std::max(truth_scale, circulant_norm(truth(P)));
  truth_scale = std::max(truth_scale, 1.0);

  double agreement = 0.0;
  for (const auto& P : pts) {
    agreement =
        std::max(agreement, circulant_norm(sol.evaluate(P) - truth(P)) / truth_scale);
  }
  // The curve default is sharp; the sphere default is a coarse-grid envelope
  // dominated by the Hardy-split quadrature error, which shrinks with the
  // mesh (0.19 at 8^3 to 0.08 at 12^3 on the default data).
  add_check(rep, "interior-agreement",
            "extension of harmonic boundary data matches the harmonic truth at "
            "interior points",
            agreement, suite_tol(config, rep.n == 1 ? 1e-2 : 4e-1));

  const double h = 1e-3;
  double harmonicity = 0.0;
  for (int k = 0; k < 3; ++k) {
    const VectorR2n& P = pts[std::size_t(k)];
    CirculantPair lap = sol.evaluate(P);
    lap *= cplx(-2.0 * two_n, 0.0);
    for (int c = 0; c < two_n; ++c) {
      VectorR2n Pp = P, Pm = P;
      Pp[c] += h;
      Pm[c] -= h;
      lap += sol.evaluate(Pp);
      lap += sol.evaluate(Pm);
    }
    lap *= cplx(1.0 / (h * h), 0.0);
    harmonicity = std::max(harmonicity, circulant_norm(lap) / truth_scale);
  }
  add_check(rep, "fd-harmonicity",
            "five-point Laplacian of the extension vanishes to truncation order",
            harmonicity, rep.n == 1 ? 1e-4 : 1e-3);

  const CalibrationResult cal = calibrate_cauchy_constant(mesh);
  rep.calibrated = true;
  rep.c_hat = cal.c_hat;
  rep.c_analytic = cal.c_analytic;
  rep.orientation_sign = cal.orientation_sign;
  rep.calibration_deviation = cal.deviation;
  add_check(rep, "calibration-constant",
            "interior transform of the constant density reproduces the measure "
            "constant",
            cal.deviation, 1e-10);

  BoundaryField recon = nu_multiply(mesh, sol.conjugate_part());
  for (std::size_t j = 0; j < recon.size(); ++j) recon[j] += sol.hardy_part()[j];
  add_check(rep, "boundary-reconstruction",
            "hardy part plus nu times conjugate part reassembles the data",
            relative_difference(mesh, recon, L, field_norm(mesh, L)), 1e-12);

  SolverStats stats;
  const BoundaryField SG = szego_projection(mesh, sol.hardy_part(), solver, &stats);
  add_check(rep, "hardy-stability", "the extracted hardy part is fixed by S",
            relative_difference(mesh, SG, sol.hardy_part(),
                                field_norm(mesh, sol.hardy_part())),
            suite_tol(config, rep.n == 1 ? 5e-2 : 3e-1));
  return rep;
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<std::string> suite_names() {
  return {"clifford-product-axioms", "cauchy-kernel-monogenicity",
          "plemelj-jump",            "hilbert-involution-adjoint",
          "kerzman-stein-skewness",  "szego-projection",
          "ball-characterization",   "hardy-dirichlet"};
}

Multivector random_multivector(int dim, FieldRng& rng) {
  Multivector m(dim);
  for (std::size_t b = 0; b < m.ncoeffs(); ++b) m[BladeIndex(b)] = rng.complex_uniform();
  return m;
}

MultivectorPolynomial random_polynomial(int n, int max_degree, FieldRng& rng) {
  MultivectorPolynomial poly(n);
  const int two_n = 2 * n;
  std::vector<int> e(std::size_t(two_n), 0);
  // Depth-first enumeration of exponent tuples with total degree <= max_degree,
  // in a fixed order so the rng stream is reproducible.
  std::function<void(int, int)> visit = [&](int pos, int remaining) {
    if (pos == two_n) {
      poly.add_term(e, random_multivector(two_n, rng));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[std::size_t(pos)] = k;
      visit(pos + 1, remaining - k);
    }
    e[std::size_t(pos)] = 0;
  };
  visit(0, max_degree);
  return poly;
}

BoundaryField random_smooth_field(const SurfaceMesh& mesh, int max_degree,
                                  std::uint64_t seed) {
  FieldRng rng(seed);
  const MultivectorPolynomial s = random_polynomial(mesh.n, max_degree, rng);
  const MultivectorPolynomial d = random_polynomial(mesh.n, max_degree, rng);
  BoundaryField out;
  out.reserve(mesh.size());
  const cplx half(0.5, 0.0);
  for (const auto& node : mesh.nodes) {
    const Multivector sv = s.evaluate(node);
    const Multivector dv = d.evaluate(node);
    out.emplace_back(half * (sv + dv), half * (sv - dv));
  }
  return out;
}

SurfaceMesh build_surface(const RunConfig& config, int rung_nodes) {
  if (config.surface == "circle") return mesh_circle(rung_nodes);
  if (config.surface == "ellipse") {
    if (config.axes.empty()) return mesh_ellipse(rung_nodes, 2.0, 1.0);
    if (config.axes.size() != 2) {
      throw std::invalid_argument("ellipse surfaces take exactly two axes");
    }
    return mesh_ellipse(rung_nodes, config.axes[0], config.axes[1]);
  }
  if (config.surface == "s3") return mesh_sphere_S3(rung_nodes, rung_nodes, rung_nodes);
  if (config.surface == "ellipsoid4") {
    std::array<double, 4> axes{1.2, 1.0, 0.9, 0.8};
    if (!config.axes.empty()) {
      if (config.axes.size() != 4) {
        throw std::invalid_argument("ellipsoid4 surfaces take exactly four axes");
      }
      std::copy(config.axes.begin(), config.axes.end(), axes.begin());
    }
    return mesh_ellipsoid_R4(rung_nodes, rung_nodes, rung_nodes, axes);
  }
  throw std::invalid_argument("unknown surface '" + config.surface + "'");
}

Report run_suite(const RunConfig& config) {
  const std::string suite = canonical_suite(config.suite);
  if (config.format != "json" && config.format != "csv") {
    throw std::invalid_argument("unknown report format '" + config.format + "'");
  }
  if (suite == "clifford-product-axioms") return run_algebra(config);
  if (suite == "cauchy-kernel-monogenicity") return run_kernels(config);
  if (suite == "plemelj-jump") return run_jump(config);
  if (suite == "hilbert-involution-adjoint") return run_operator_identities(config);
  if (suite == "kerzman-stein-skewness") return run_kerzman_stein(config);
  if (suite == "szego-projection") return run_szego(config);
  if (suite == "ball-characterization") return run_ball(config);
  return run_dirichlet(config);
}

std::string report_to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["operator"] = report.op;
  j["surface"] = report.surface;
  j["n"] = report.n;
  j["M"] = report.M;
  j["seed"] = report.seed;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["description"] = c.description;
    jc["residual"] = c.residual;
    jc["threshold"] = c.threshold;
    jc["comparison"] = c.comparison;
    jc["pass"] = c.pass;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  nlohmann::ordered_json conv = nlohmann::ordered_json::array();
  for (const auto& row : report.convergence) {
    nlohmann::ordered_json jr;
    jr["id"] = row.id;
    jr["M"] = row.M;
    jr["residual"] = row.residual;
    if (row.has_order) {
      jr["order"] = row.order;
    } else {
      jr["order"] = nullptr;
    }
    conv.push_back(std::move(jr));
  }
  j["convergence"] = std::move(conv);
  if (report.calibrated) {
    nlohmann::ordered_json jc;
    jc["c_hat"] = {report.c_hat.real(), report.c_hat.imag()};
    jc["c_analytic"] = {report.c_analytic.real(), report.c_analytic.imag()};
    jc["orientation_sign"] = report.orientation_sign;
    jc["deviation"] = report.calibration_deviation;
    j["calibration"] = std::move(jc);
  } else {
    j["calibration"] = nullptr;
  }
  j["pass"] = report.all_pass();
  return j.dump(2) + "\n";
}

namespace {

std::string csv_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "kind,id,M,value,threshold,comparison,order,pass\n";
  for (const auto& c : report.checks) {
    out << "check," << c.id << "," << report.M << "," << csv_double(c.residual) << ","
        << csv_double(c.threshold) << "," << c.comparison << ",," << (c.pass ? 1 : 0)
        << "\n";
  }
  for (const auto& row : report.convergence) {
    out << "convergence," << row.id << "," << row.M << "," << csv_double(row.residual)
        << ",,,";
    if (row.has_order) out << csv_double(row.order);
    out << ",\n";
  }
  if (report.calibrated) {
    out << "calibration,c-hat-re," << report.M << "," << csv_double(report.c_hat.real())
        << ",,,,\n";
    out << "calibration,c-hat-im," << report.M << "," << csv_double(report.c_hat.imag())
        << ",,,,\n";
    out << "calibration,deviation," << report.M << ","
        << csv_double(report.calibration_deviation) << ",,,,\n";
  }
  return out.str();
}

void emit_report(const Report& report, const RunConfig& config) {
  if (config.out.empty()) return;
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open report path: " + config.out);
  file << (config.format == "csv" ? report_to_csv(report) : report_to_json(report));
  if (!file) throw std::runtime_error("failed writing report: " + config.out);
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t pos = value.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(trim(value.substr(start)));
      break;
    }
    out.push_back(trim(value.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

}  // namespace

void apply_config_entry(RunConfig& config, const std::string& key,
                        const std::string& value) {
  try {
    if (key == "suite") {
      config.suite = value;
    } else if (key == "surface") {
      config.surface = value;
    } else if (key == "nodes") {
      config.nodes.clear();
      for (const auto& item : split_list(value)) config.nodes.push_back(std::stoi(item));
    } else if (key == "axes") {
      config.axes.clear();
      for (const auto& item : split_list(value)) config.axes.push_back(std::stod(item));
    } else if (key == "seed") {
      config.seed = std::stoull(value);
    } else if (key == "tol") {
      config.tol = std::stod(value);
    } else if (key == "out") {
      config.out = value;
    } else if (key == "format") {
      config.format = value;
    } else {
      throw std::invalid_argument("unknown configuration key '" + key + "'");
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed value for configuration key '" + key + "'");
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open configuration file: " + path);
  RunConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("configuration line " + std::to_string(lineno) +
                                  " is not key=value");
    }
    apply_config_entry(config, trim(stripped.substr(0, eq)),
                       trim(stripped.substr(eq + 1)));
  }
  return config;
}

}  // namespace hermicl
