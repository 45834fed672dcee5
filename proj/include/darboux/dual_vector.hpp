#pragma once

#include <algorithm>
#include <cmath>

#include "darboux/dual_scalar.hpp"
#include "darboux/types.hpp"

namespace darboux {

/// A vector over the dual numbers, split into its real part and its dual
/// (moment) part. Componentwise it is three dual scalars.
struct DualVector3 {
  Vec3d real = Vec3d::Zero();
  Vec3d dual = Vec3d::Zero();
};

/// Dual angle theta + eps*theta* between two lines: theta is the angle
/// between the directions, theta* the signed shortest distance.
struct DualAngle {
  double theta = 0.0;       // radians, in [0, pi]
  double theta_star = 0.0;  // length
};

inline DualVector3 operator+(const DualVector3& a, const DualVector3& b) {
  return {a.real + b.real, a.dual + b.dual};
}

inline DualVector3 operator-(const DualVector3& a, const DualVector3& b) {
  return {a.real - b.real, a.dual - b.dual};
}

inline DualVector3 operator-(const DualVector3& a) { return {-a.real, -a.dual}; }

/// Dual-scalar scaling: (s + eps s*)(v + eps v*) = s v + eps(s v* + s* v).
inline DualVector3 operator*(const DualScalar& s, const DualVector3& v) {
  return {s.real * v.real, s.real * v.dual + s.dual * v.real};
}

inline DualVector3 operator*(const DualVector3& v, const DualScalar& s) {
  return s * v;
}

/// <a, b> + eps(<a, b*> + <a*, b>)
inline DualScalar dual_dot(const DualVector3& a, const DualVector3& b) {
  return {a.real.dot(b.real), a.real.dot(b.dual) + a.dual.dot(b.real)};
}

/// a x b + eps(a x b* + a* x b)
inline DualVector3 dual_cross(const DualVector3& a, const DualVector3& b) {
  return {a.real.cross(b.real),
          a.real.cross(b.dual) + a.dual.cross(b.real)};
}

/// ||a|| + eps <a, a*>/||a||; undefined for vanishing real part.
inline DualScalar dual_norm(const DualVector3& a,
                            double tolerance = kPureDualTolerance) {
  const double n = a.real.norm();
  if (n < tolerance)
    throw PureDualVector("dual norm of a vector with zero real part");
  return {n, a.real.dot(a.dual) / n};
}

/// Projects onto the dual unit sphere: the result r satisfies
/// dual_dot(r, r) = 1 + eps*0 and is a positive dual multiple of a.
inline DualVector3 normalize(const DualVector3& a,
                             double tolerance = kPureDualTolerance) {
  return a * inverse(dual_norm(a, tolerance));
}

/// Tolerance on sin(theta) below which two lines count as parallel and the
/// moment-difference fallback computes the distance.
inline constexpr double kParallelSinTolerance = 1e-9;

/// Dual angle between two dual unit vectors (oriented lines).
///
/// theta* is positive when (a, b, a x b / ||a x b||) is right-handed, i.e.
/// the offset from line a to line b advances along the common perpendicular
/// by a right-hand screw. theta comes from atan2 of the cross-product norm,
/// which stays accurate where acos of the dot product would amplify
/// rounding. For (anti)parallel lines the dual dot product is blind to the
/// distance; it is recovered from the moment difference projected
/// orthogonally to the shared direction, with nonnegative sign.
inline DualAngle dual_angle_between(const DualVector3& a, const DualVector3& b) {
  const DualScalar d = dual_dot(a, b);
  const double st = a.real.cross(b.real).norm();
  const double theta = std::atan2(st, d.real);
  if (st >= kParallelSinTolerance) return {theta, -d.dual / st};
  const double sign = d.real >= 0.0 ? 1.0 : -1.0;
  const Vec3d moment_diff = b.dual - sign * a.dual;
  return {theta, a.real.cross(moment_diff).norm()};
}

}  // namespace darboux
