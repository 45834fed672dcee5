#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "darboux/errors.hpp"

namespace darboux {

template <class Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

using Vec3d = Vec3<double>;

/// Closed parameter interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double x, double slack = 0.0) const {
    return x >= lo - slack && x <= hi + slack;
  }
  double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
};

/// x^n by binary exponentiation, n >= 0. Works for any ring scalar; dual
/// scalars and jets of every order go through the same multiply sequence.
template <class T>
T ipow(const T& x, int n) {
  if (n < 0) throw DomainError("ipow: negative integer exponent");
  T result(1.0);
  T base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

}  // namespace darboux
