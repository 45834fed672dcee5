#pragma once

#include <cmath>
#include <ostream>

#include "darboux/errors.hpp"

namespace darboux {

/// Absolute tolerance below which the real part of a divisor counts as a
/// zero divisor.
inline constexpr double kPureDualTolerance = 1e-12;

/// A dual number a + eps*a* with eps^2 = 0. The dual part of a product
/// carries first-derivative (moment) information.
struct DualScalar {
  double real = 0.0;
  double dual = 0.0;

  constexpr DualScalar() = default;
  constexpr DualScalar(double r) : real(r) {}
  constexpr DualScalar(double r, double d) : real(r), dual(d) {}

  friend constexpr DualScalar operator+(const DualScalar& x) { return x; }
  friend constexpr DualScalar operator-(const DualScalar& x) {
    return {-x.real, -x.dual};
  }

  friend constexpr DualScalar operator+(const DualScalar& x, const DualScalar& y) {
    return {x.real + y.real, x.dual + y.dual};
  }
  friend constexpr DualScalar operator-(const DualScalar& x, const DualScalar& y) {
    return {x.real - y.real, x.dual - y.dual};
  }
  // (a + eps a*)(b + eps b*) = ab + eps(a b* + a* b)
  friend constexpr DualScalar operator*(const DualScalar& x, const DualScalar& y) {
    return {x.real * y.real, x.real * y.dual + x.dual * y.real};
  }
  friend DualScalar operator/(const DualScalar& x, const DualScalar& y);

  DualScalar& operator+=(const DualScalar& y) { return *this = *this + y; }
  DualScalar& operator-=(const DualScalar& y) { return *this = *this - y; }
  DualScalar& operator*=(const DualScalar& y) { return *this = *this * y; }
  DualScalar& operator/=(const DualScalar& y) { return *this = *this / y; }

  friend constexpr bool operator==(const DualScalar& x, const DualScalar& y) {
    return x.real == y.real && x.dual == y.dual;
  }

  friend std::ostream& operator<<(std::ostream& os, const DualScalar& x) {
    return os << x.real << (x.dual < 0 ? " - eps*" : " + eps*")
              << std::abs(x.dual);
  }
};

/// Quotient; satisfies div(x, y) * y == x in exact arithmetic. Pure dual
/// divisors are zero divisors and rejected.
inline DualScalar div(const DualScalar& x, const DualScalar& y,
                      double tolerance = kPureDualTolerance) {
  if (std::abs(y.real) < tolerance)
    throw PureDualDivision("division by a pure dual number");
  const double r = x.real / y.real;
  return {r, (x.dual - r * y.dual) / y.real};
}

inline DualScalar operator/(const DualScalar& x, const DualScalar& y) {
  return div(x, y);
}

inline DualScalar inverse(const DualScalar& x,
                          double tolerance = kPureDualTolerance) {
  return div(DualScalar(1.0), x, tolerance);
}

/// Lifts an analytic real function through the dual numbers:
/// f(a + eps a*) = f(a) + eps a* f'(a).
template <class F, class DF>
DualScalar apply_analytic(F&& f, DF&& df, const DualScalar& x) {
  return {f(x.real), x.dual * df(x.real)};
}

inline DualScalar sin(const DualScalar& x) {
  return {std::sin(x.real), x.dual * std::cos(x.real)};
}

inline DualScalar cos(const DualScalar& x) {
  return {std::cos(x.real), -(x.dual * std::sin(x.real))};
}

inline DualScalar sqrt(const DualScalar& x) {
  if (!(x.real > 0.0))
    throw DomainError("dual sqrt requires a positive real part");
  const double root = std::sqrt(x.real);
  return {root, x.dual / (2.0 * root)};
}

inline DualScalar exp(const DualScalar& x) {
  const double e = std::exp(x.real);
  return {e, x.dual * e};
}

// Spec-facing names; identical to the ADL overloads above.
inline DualScalar dual_sin(const DualScalar& x) { return sin(x); }
inline DualScalar dual_cos(const DualScalar& x) { return cos(x); }
inline DualScalar dual_sqrt(const DualScalar& x) { return sqrt(x); }

}  // namespace darboux
