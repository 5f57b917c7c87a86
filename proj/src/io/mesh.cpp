#include "bicons/io/mesh.hpp"

#include <cmath>
#include <sstream>

#include "bicons/numerics/error.hpp"

namespace bicons::io {

using diffgeo::Vec4;

Mesh sample_mesh(const std::function<Vec4(double, double)>& position,
                 diffgeo::Ambient ambient, const GridSpec& g) {
  if (g.n_u < 2 || g.n_v < 2) {
    throw Error(ErrorCode::InvalidArgument, "mesh grid needs n_u, n_v >= 2");
  }
  if (!(g.u_lo < g.u_hi) || !(g.v_lo < g.v_hi)) {
    throw Error(ErrorCode::InvalidArgument, "mesh ranges must be increasing");
  }
  Mesh m{g, ambient, {}, {}, {}};
  const int dv = g.wrap_v ? g.n_v : g.n_v - 1;
  m.points.reserve(static_cast<std::size_t>(g.n_u) * g.n_v);
  for (int i = 0; i < g.n_u; ++i) {
    const double u = g.u_lo + (g.u_hi - g.u_lo) * i / (g.n_u - 1);
    for (int j = 0; j < g.n_v; ++j) {
      const double v = g.v_lo + (g.v_hi - g.v_lo) * j / dv;
      m.u.push_back(u);
      m.v.push_back(v);
      m.points.push_back(position(u, v));
    }
  }
  return m;
}

Eigen::Matrix<double, 4, 3> complement_basis(const Vec4& pole) {
  const double n = pole.norm();
  if (!(std::abs(n - 1.0) < 1e-12)) {
    throw Error(ErrorCode::InvalidArgument, "projection pole must be a unit vector");
  }
  Eigen::Matrix<double, 4, 3> B;
  if (pole == Vec4(0.0, 0.0, 0.0, -1.0)) {
    B << 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0;
    return B;
  }
  Eigen::Matrix4d M = Eigen::Matrix4d::Identity();
  M.col(0) = pole;
  Eigen::HouseholderQR<Eigen::Matrix4d> qr(M);
  const Eigen::Matrix4d Q = qr.householderQ();
  return Q.rightCols<3>();
}

Eigen::Vector3d stereographic(const Vec4& p, const Vec4& pole) {
  const double denom = 1.0 - p.dot(pole);
  if (!(denom > 1e-12)) {
    std::ostringstream os;
    os << "point (" << p.transpose() << ") hits the projection pole";
    throw Error(ErrorCode::PoleHit, os.str());
  }
  return complement_basis(pole).transpose() * p / denom;
}

std::size_t face_count(const GridSpec& g) {
  const std::size_t cols = g.wrap_v ? g.n_v : g.n_v - 1;
  return 2 * static_cast<std::size_t>(g.n_u - 1) * cols;
}

std::string to_obj(const Mesh& m, const Vec4& pole) {
  std::ostringstream os;
  os << "# " << m.grid.n_u << " x " << m.grid.n_v << " grid\n";
  char buf[96];
  for (const Vec4& p : m.points) {
    const Eigen::Vector3d x = m.ambient == diffgeo::Ambient::Sphere3
                                  ? stereographic(p, pole)
                                  : Eigen::Vector3d(p.head<3>());
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", x[0], x[1], x[2]);
    os << buf;
  }
  const int nu = m.grid.n_u, nv = m.grid.n_v;
  const int cols = m.grid.wrap_v ? nv : nv - 1;
  for (int i = 0; i + 1 < nu; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int jn = (j + 1) % nv;
      const int a = i * nv + j + 1, b = i * nv + jn + 1;
      const int c = (i + 1) * nv + jn + 1, d = (i + 1) * nv + j + 1;
      os << "f " << a << ' ' << b << ' ' << c << '\n';
      os << "f " << a << ' ' << c << ' ' << d << '\n';
    }
  }
  return os.str();
}

Table raw_table(const Mesh& m) {
  Table t{{"i", "j", "u", "v", "x1", "x2", "x3", "x4"}, {}};
  const int nv = m.grid.n_v;
  for (std::size_t k = 0; k < m.points.size(); ++k) {
    const Vec4& p = m.points[k];
    t.rows.push_back({static_cast<double>(k / nv), static_cast<double>(k % nv),
                      m.u[k], m.v[k], p[0], p[1], p[2], p[3]});
  }
  return t;
}

}  // namespace bicons::io
