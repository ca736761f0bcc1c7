#include "stroud/hex_cell.hpp"

#include <istream>
#include <sstream>
#include <string>

#include "stroud/errors.hpp"

namespace stroud {

double determinant(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

const std::array<Vec3, 8>& HexCell::reference_corners() {
  static const std::array<Vec3, 8> corners{{
      {-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
      {-1, -1, 1}, {1, -1, 1}, {1, 1, 1}, {-1, 1, 1},
  }};
  return corners;
}

HexCell HexCell::box(const Vec3& lo, const Vec3& hi) {
  std::array<Vec3, 8> v{};
  const auto& ref = reference_corners();
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t i = 0; i < 3; ++i) v[k][i] = ref[k][i] < 0 ? lo[i] : hi[i];
  }
  return HexCell(v);
}

HexCell HexCell::affine(const Mat3& a, const Vec3& b) {
  std::array<Vec3, 8> v{};
  const auto& ref = reference_corners();
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      v[k][i] = a[i][0] * ref[k][0] + a[i][1] * ref[k][1] + a[i][2] * ref[k][2] + b[i];
    }
  }
  return HexCell(v);
}

HexCell HexCell::parse(std::istream& in) {
  std::array<Vec3, 8> v{};
  std::size_t count = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Vec3 p{};
    if (!(fields >> p[0])) continue;
    std::string extra;
    if (!(fields >> p[1] >> p[2]) || (fields >> extra)) {
      throw DomainError("cell vertex line must hold exactly three numbers: `x y z`");
    }
    if (count == 8) throw DomainError("cell file has more than 8 vertices");
    v[count++] = p;
  }
  if (count != 8) throw DomainError("cell file must list 8 vertices, found " + std::to_string(count));
  return HexCell(v);
}

Vec3 HexCell::map(const Vec3& r) const {
  Vec3 x{0.0, 0.0, 0.0};
  const auto& ref = reference_corners();
  for (std::size_t k = 0; k < 8; ++k) {
    const double n = 0.125 * (1 + ref[k][0] * r[0]) * (1 + ref[k][1] * r[1]) * (1 + ref[k][2] * r[2]);
    for (std::size_t i = 0; i < 3; ++i) x[i] += n * vertices_[k][i];
  }
  return x;
}

Mat3 HexCell::jacobian(const Vec3& r) const {
  Mat3 j{};
  const auto& ref = reference_corners();
  for (std::size_t k = 0; k < 8; ++k) {
    const Vec3& s = ref[k];
    const Vec3 f{1 + s[0] * r[0], 1 + s[1] * r[1], 1 + s[2] * r[2]};
    const Vec3 dn{0.125 * s[0] * f[1] * f[2], 0.125 * f[0] * s[1] * f[2], 0.125 * f[0] * f[1] * s[2]};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t c = 0; c < 3; ++c) j[i][c] += vertices_[k][i] * dn[c];
    }
  }
  return j;
}

std::vector<MappedPoint> map_rule(const QuadratureRule& rule, const HexCell& cell) {
  std::vector<MappedPoint> out;
  out.reserve(rule.points.size());
  for (const auto& p : rule.points) {
    const double det = cell.jacobian_determinant(p.xyz);
    if (!(det > 0.0)) {
      std::ostringstream os;
      os << "inverted cell: Jacobian determinant " << det << " at reference point (" << p.xyz[0]
         << ", " << p.xyz[1] << ", " << p.xyz[2] << ")";
      throw InvertedCellError(os.str());
    }
    out.push_back({cell.map(p.xyz), p.weight * det});
  }
  return out;
}

}  // namespace stroud
