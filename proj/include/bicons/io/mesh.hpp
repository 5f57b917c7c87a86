#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "bicons/diffgeo/surface.hpp"
#include "bicons/io/table.hpp"

namespace bicons::io {

/// Parameter grid. With wrap_v the v samples stop one step short of v_hi and
/// the faces close the strip across v_hi = v_lo.
struct GridSpec {
  double u_lo, u_hi;
  int n_u;
  double v_lo, v_hi;
  int n_v;
  bool wrap_v = false;
};

struct Mesh {
  GridSpec grid;
  diffgeo::Ambient ambient;
  std::vector<double> u, v;               // per vertex, row-major in u
  std::vector<diffgeo::Vec4> points;
};

Mesh sample_mesh(const std::function<diffgeo::Vec4(double, double)>& position,
                 diffgeo::Ambient ambient, const GridSpec& grid);

/// Stereographic projection of a point of the unit sphere from `pole` onto
/// the orthogonal complement of the pole, in an orthonormal basis of it.
/// PoleHit when the point is within 1e-12 of the pole.
Eigen::Vector3d stereographic(const diffgeo::Vec4& p, const diffgeo::Vec4& pole);

/// Orthonormal basis of the complement of a unit pole; for -e4 it is e1, e2, e3.
Eigen::Matrix<double, 4, 3> complement_basis(const diffgeo::Vec4& pole);

/// ASCII OBJ: "v x y z" per vertex (projected for Sphere3), triangles split
/// from the grid quads.
std::string to_obj(const Mesh& mesh, const diffgeo::Vec4& pole);

/// Number of triangles to_obj emits.
std::size_t face_count(const GridSpec& grid);

/// Raw vertices: columns i, j, u, v, x1, x2, x3, x4.
Table raw_table(const Mesh& mesh);

}  // namespace bicons::io
