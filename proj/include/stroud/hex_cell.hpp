#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "stroud/rule.hpp"

namespace stroud {

using Mat3 = std::array<Vec3, 3>;  // row-major, J[i][j] = d x_i / d r_j

double determinant(const Mat3& m);

/// 8-node hexahedron, trilinear image of [-1,1]^3.
///
/// Vertex k is the image of reference corner k in the order
/// (-,-,-), (+,-,-), (+,+,-), (-,+,-), (-,-,+), (+,-,+), (+,+,+), (-,+,+).
/// Degree-5 exactness carries over to the mapped cell only when the map is
/// affine (parallelepiped cells); for general trilinear cells the Jacobian is
/// still evaluated per point but the integrand times |det J| is no longer a
/// degree-5 polynomial.
class HexCell {
 public:
  explicit HexCell(const std::array<Vec3, 8>& vertices) : vertices_(vertices) {}

  static const std::array<Vec3, 8>& reference_corners();

  /// Axis-aligned box [lo, hi].
  static HexCell box(const Vec3& lo, const Vec3& hi);
  /// Image of the reference cube under x -> A r + b.
  static HexCell affine(const Mat3& a, const Vec3& b);
  /// 8 lines of `x y z` in corner order; '#' comments allowed.
  static HexCell parse(std::istream& in);

  const std::array<Vec3, 8>& vertices() const { return vertices_; }

  Vec3 map(const Vec3& r) const;
  Mat3 jacobian(const Vec3& r) const;
  double jacobian_determinant(const Vec3& r) const { return determinant(jacobian(r)); }

 private:
  std::array<Vec3, 8> vertices_;
};

/// A quadrature point pushed forward to a cell: physical location and
/// w * det J.
struct MappedPoint {
  Vec3 x{};
  double scaled_weight = 0.0;
};

/// Throws InvertedCellError if det J <= 0 at any rule point.
std::vector<MappedPoint> map_rule(const QuadratureRule& rule, const HexCell& cell);

/// Sum of w_i f(T(nu_i)) det J(nu_i).
template <class F>
double integrate_over_hex(const QuadratureRule& rule, const HexCell& cell, F&& f) {
  double sum = 0.0;
  for (const auto& p : map_rule(rule, cell)) sum += p.scaled_weight * f(p.x[0], p.x[1], p.x[2]);
  return sum;
}

}  // namespace stroud
