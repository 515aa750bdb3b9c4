#include "hermicl/surface.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "hermicl/hermitean.hpp"

namespace hermicl {

namespace {

// Fills nu| and the max nearest-neighbour spacing; every mesh builder ends here.
void finalize_mesh(SurfaceMesh& mesh) {
  mesh.normals_J.clear();
  mesh.normals_J.reserve(mesh.normals.size());
  for (const auto& nu : mesh.normals) mesh.normals_J.push_back(apply_J_vector(nu));

  double max_min = 0.0;
  const std::size_t count = mesh.nodes.size();
  for (std::size_t i = 0; i < count; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      const double d = euclidean_norm(mesh.nodes[i] - mesh.nodes[j]);
      if (d < best) best = d;
    }
    if (count > 1 && best > max_min) max_min = best;
  }
  mesh.spacing = max_min;
}

void check_node_count(int M) {
  if (M < 4) throw std::invalid_argument("node count must be at least 4, got " + std::to_string(M));
}

void check_grid(int n_psi, int n_theta, int n_phi) {
  if (n_psi < 4 || n_theta < 4 || n_phi < 4) {
    throw std::invalid_argument("S3 grid resolution must be at least 4 per angle");
  }
}

}  // namespace

SurfaceMesh mesh_circle(int M) {
  check_node_count(M);
  SurfaceMesh mesh;
  mesh.n = 1;
  mesh.label = "circle";
  const double w = 2.0 * M_PI / double(M);
  for (int k = 0; k < M; ++k) {
    const double t = 2.0 * M_PI * double(k) / double(M);
    VectorR2n p{std::cos(t), std::sin(t)};
    mesh.nodes.push_back(p);
    mesh.weights.push_back(w);
    mesh.normals.push_back(p);
  }
  finalize_mesh(mesh);
  return mesh;
}

SurfaceMesh mesh_ellipse(int M, double a, double b) {
  check_node_count(M);
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("ellipse axes must be positive");
  }
  SurfaceMesh mesh;
  mesh.n = 1;
  std::ostringstream label;
  label << "ellipse a=" << a << " b=" << b;
  mesh.label = label.str();
  const double dt = 2.0 * M_PI / double(M);
  for (int k = 0; k < M; ++k) {
    const double t = dt * double(k);
    const double c = std::cos(t);
    const double s = std::sin(t);
    mesh.nodes.push_back(VectorR2n{a * c, b * s});
    mesh.weights.push_back(dt * std::sqrt(a * a * s * s + b * b * c * c));
    // Outward normal from the implicit gradient (x/a^2, y/b^2).
    const double gx = c / a;
    const double gy = s / b;
    const double g = std::sqrt(gx * gx + gy * gy);
    mesh.normals.push_back(VectorR2n{gx / g, gy / g});
  }
  finalize_mesh(mesh);
  return mesh;
}

SurfaceMesh mesh_sphere_S3(int n_psi, int n_theta, int n_phi) {
  check_grid(n_psi, n_theta, n_phi);
  SurfaceMesh mesh;
  mesh.n = 2;
  std::ostringstream label;
  label << "s3 " << n_psi << "x" << n_theta << "x" << n_phi;
  mesh.label = label.str();

  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(n_theta, gl_nodes, gl_weights);

  const double dpsi = M_PI / double(n_psi);
  const double dphi = 2.0 * M_PI / double(n_phi);
  for (int i = 0; i < n_psi; ++i) {
    const double psi = (double(i) + 0.5) * dpsi;
    const double spsi = std::sin(psi);
    const double cpsi = std::cos(psi);
    const double wpsi = dpsi * spsi * spsi;
    for (int j = 0; j < n_theta; ++j) {
      const double ct = gl_nodes[std::size_t(j)];
      const double st = std::sqrt(1.0 - ct * ct);
      const double wtheta = gl_weights[std::size_t(j)];
      for (int k = 0; k < n_phi; ++k) {
        const double phi = (double(k) + 0.5) * dphi;
        // Coordinates ordered (x1, x2, y1, y2).
        VectorR2n u{cpsi, spsi * ct, spsi * st * std::cos(phi), spsi * st * std::sin(phi)};
        mesh.nodes.push_back(u);
        mesh.weights.push_back(wpsi * wtheta * dphi);
        mesh.normals.push_back(u);
      }
    }
  }
  finalize_mesh(mesh);
  return mesh;
}

SurfaceMesh mesh_ellipsoid_R4(int n_psi, int n_theta, int n_phi,
                              const std::array<double, 4>& axes) {
  for (double a : axes) {
    if (!(a > 0.0)) throw std::invalid_argument("ellipsoid axes must be positive");
  }
  SurfaceMesh mesh = mesh_sphere_S3(n_psi, n_theta, n_phi);
  std::ostringstream label;
  label << "ellipsoid4 a=" << axes[0] << " b=" << axes[1] << " c=" << axes[2]
        << " d=" << axes[3];
  mesh.label = label.str();
  const double det = axes[0] * axes[1] * axes[2] * axes[3];
  for (std::size_t idx = 0; idx < mesh.size(); ++idx) {
    const VectorR2n u = mesh.nodes[idx];
    VectorR2n x(2);
    VectorR2n ainv_u(2);
    for (int c = 0; c < 4; ++c) {
      x[c] = axes[std::size_t(c)] * u[c];
      ainv_u[c] = u[c] / axes[std::size_t(c)];
    }
    const double g = euclidean_norm(ainv_u);
    mesh.nodes[idx] = x;
    mesh.weights[idx] *= det * g;
    mesh.normals[idx] = (1.0 / g) * ainv_u;
  }
  finalize_mesh(mesh);
  return mesh;
}

cplx hermitean_measure_constant(int n) {
  if (n < 1) throw std::invalid_argument("hermitean_measure_constant: n must be >= 1");
  cplx value(1.0, 0.0);
  for (int k = 0; k < n; ++k) value *= cplx(0.0, 2.0);
  const int par = ((n * (n + 1)) / 2) & 1;
  return par ? -value : value;
}

SurfaceMeasure surface_measures(const SurfaceMesh& mesh) {
  SurfaceMeasure meas;
  const cplx cn = hermitean_measure_constant(mesh.n);
  const cplx i(0.0, 1.0);
  const cplx quarter(-0.25, 0.0);
  meas.sigma_X.reserve(mesh.size());
  meas.sigma_XJ.reserve(mesh.size());
  meas.sigma_Z.reserve(mesh.size());
  meas.sigma_Zdag.reserve(mesh.size());
  meas.Sigma.reserve(mesh.size());
  for (std::size_t k = 0; k < mesh.size(); ++k) {
    const cplx w(mesh.weights[k], 0.0);
    Multivector sx = embed_vector(mesh.normals[k]);
    sx *= w;
    Multivector sxj = embed_vector(mesh.normals_J[k]);
    sxj *= w;
    Multivector sz = quarter * cn * (sx - i * sxj);
    Multivector szd = quarter * cn * (sx + i * sxj);
    meas.Sigma.push_back(CirculantPair(sz, -szd));
    meas.sigma_X.push_back(std::move(sx));
    meas.sigma_XJ.push_back(std::move(sxj));
    meas.sigma_Z.push_back(std::move(sz));
    meas.sigma_Zdag.push_back(std::move(szd));
  }
  return meas;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& field, const char* what) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw std::invalid_argument(std::string("mesh CSV: bad ") + what + " field '" + field + "'");
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

void write_mesh_csv(const SurfaceMesh& mesh, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open mesh CSV for writing: " + path);
  out << "# n=" << mesh.n << " label=" << mesh.label << "\n";
  const int n = mesh.n;
  for (int j = 1; j <= n; ++j) out << "x" << j << ",";
  for (int j = 1; j <= n; ++j) out << "y" << j << ",";
  out << "weight";
  for (int j = 1; j <= n; ++j) out << ",nu_x" << j;
  for (int j = 1; j <= n; ++j) out << ",nu_y" << j;
  out << "\n";
  for (std::size_t k = 0; k < mesh.size(); ++k) {
    for (int c = 0; c < 2 * n; ++c) out << format_double(mesh.nodes[k][c]) << ",";
    out << format_double(mesh.weights[k]);
    for (int c = 0; c < 2 * n; ++c) out << "," << format_double(mesh.normals[k][c]);
    out << "\n";
  }
  if (!out) throw std::runtime_error("failed writing mesh CSV: " + path);
}

SurfaceMesh read_mesh_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open mesh CSV for reading: " + path);
  SurfaceMesh mesh;
  std::string line;
  bool have_header = false;
  int n = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto npos = line.find("n=");
      if (npos != std::string::npos) {
        mesh.n = std::stoi(line.substr(npos + 2));
      }
      const auto lpos = line.find("label=");
      if (lpos != std::string::npos) mesh.label = line.substr(lpos + 6);
      continue;
    }
    if (!have_header) {
      const auto cols = split_csv(line).size();
      if (cols < 5 || (cols - 1) % 4 != 0) {
        throw std::invalid_argument("mesh CSV: header must have 4n+1 columns");
      }
      n = int((cols - 1) / 4);
      if (mesh.n != 0 && mesh.n != n && !mesh.nodes.empty()) {
        throw std::invalid_argument("mesh CSV: column count disagrees with n comment");
      }
      mesh.n = n;
      have_header = true;
      continue;
    }
    const auto fields = split_csv(line);
    if (int(fields.size()) != 4 * n + 1) {
      throw std::invalid_argument("mesh CSV: row with wrong field count");
    }
    VectorR2n node(n);
    for (int c = 0; c < 2 * n; ++c) node[c] = parse_double(fields[std::size_t(c)], "coordinate");
    const double w = parse_double(fields[std::size_t(2 * n)], "weight");
    if (!(w > 0.0)) throw std::invalid_argument("mesh CSV: weights must be positive");
    VectorR2n nu(n);
    for (int c = 0; c < 2 * n; ++c) {
      nu[c] = parse_double(fields[std::size_t(2 * n + 1 + c)], "normal");
    }
    const double len = euclidean_norm(nu);
    if (std::abs(len - 1.0) > 1e-9) {
      throw std::invalid_argument("mesh CSV: normals must have unit length");
    }
    mesh.nodes.push_back(std::move(node));
    mesh.weights.push_back(w);
    mesh.normals.push_back(std::move(nu));
  }
  if (!have_header || mesh.nodes.empty()) {
    throw std::invalid_argument("mesh CSV: missing header or data rows");
  }
  finalize_mesh(mesh);
  return mesh;
}

void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: count must be >= 1");
  nodes.assign(std::size_t(count), 0.0);
  weights.assign(std::size_t(count), 0.0);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th root (descending), then Newton.
    double x = std::cos(M_PI * (double(i) + 0.75) / (double(count) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
        p0 = p1;
        p1 = p2;
      }
      dp = double(count) * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[std::size_t(count - 1 - i)] = x;       // ascending order
    weights[std::size_t(count - 1 - i)] = w;
    nodes[std::size_t(i)] = -x;
    weights[std::size_t(i)] = w;
  }
  if (count % 2 == 1) {
    // Middle node is exactly zero for odd counts.
    nodes[std::size_t(count / 2)] = 0.0;
  }
}

}  // namespace hermicl
