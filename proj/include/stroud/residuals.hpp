#pragma once

#include "stroud/tower.hpp"

// Block entries of X C^-1 X^T for the 13-point pattern with eta = 0. The
// off-diagonal blocks (m1, m3, m4, m5) vanish for a valid rule and the
// diagonal entry m2 equals 32 divided by twice the orbit weight.
//
// Templates work for any field-like type constructible from an integer
// (double, long double, PrecisionDecimal).
namespace stroud::residual {

template <class Real>
Real m1(const Real& x, const Real& y) {
  return Real(19) - Real(15) * x * x - Real(30) * y * y;
}

template <class Real>
Real m2(const Real& x, const Real& y) {
  const Real x2 = x * x;
  const Real y2 = y * y;
  return Real(45) * x2 * x2 - Real(30) * x2 - Real(60) * y2 + Real(126) * y2 * y2 +
         Real(72) * x2 * y2 + Real(19);
}

template <class Real>
Real m3(const Real& x, const Real& y) {
  const Real x2 = x * x;
  const Real y2 = y * y;
  return Real(45) * y2 * y2 - Real(30) * x2 - Real(60) * y2 + Real(126) * x2 * y2 +
         Real(72) * x * y2 * y + Real(19);
}

template <class Real>
Real m4(const Real& lambda, const Real& xi, const Real& mu, const Real& gamma) {
  const Real l2 = lambda * lambda;
  const Real x2 = xi * xi;
  const Real m2 = mu * mu;
  const Real g2 = gamma * gamma;
  return Real(45) * x2 * m2 - Real(30) * x2 + Real(45) * m2 * l2 - Real(15) * l2 +
         Real(45) * g2 * x2 + Real(36) * lambda * xi * m2 + Real(36) * x2 * mu * gamma +
         Real(36) * lambda * xi * mu * gamma - Real(30) * m2 - Real(15) * g2 + Real(19);
}

template <class Real>
Real m5(const Real& lambda, const Real& xi, const Real& mu, const Real& gamma) {
  const Real l2 = lambda * lambda;
  const Real x2 = xi * xi;
  const Real m2 = mu * mu;
  const Real g2 = gamma * gamma;
  return Real(126) * x2 * m2 - Real(30) * x2 + Real(45) * g2 * l2 - Real(15) * l2 +
         Real(72) * lambda * xi * mu * gamma - Real(30) * m2 - Real(15) * g2 + Real(19);
}

/// The quartic part of m5: 126 xi^2 mu^2 + 45 gamma^2 lambda^2 + 72 lambda xi mu gamma.
/// With m1 = 0 on both orbits, m5 = 0 is equivalent to this being +19.
template <class Real>
Real m5_quartic_part(const Real& lambda, const Real& xi, const Real& mu, const Real& gamma) {
  return Real(126) * xi * xi * mu * mu + Real(45) * gamma * gamma * lambda * lambda +
         Real(72) * lambda * xi * mu * gamma;
}

/// m1 and m2 in the squared variables u = x^2, v = y^2; exact in the tower.
inline TowerElement m1_from_squares(const TowerElement& u, const TowerElement& v) {
  return Rational(19) + (Rational(-15) * u + Rational(-30) * v);
}

inline TowerElement m2_from_squares(const TowerElement& u, const TowerElement& v) {
  return Rational(19) + (Rational(45) * (u * u) + Rational(-30) * u + Rational(-60) * v +
                         Rational(126) * (v * v) + Rational(72) * (u * v));
}

}  // namespace stroud::residual
