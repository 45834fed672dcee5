#pragma once

#include <Eigen/Core>
#include <limits>
#include <ostream>

#include "darboux/errors.hpp"
#include "darboux/types.hpp"

namespace darboux {

/// Truncated Taylor series of a scalar function of one parameter.
///
/// coeff(i) is the normalized coefficient f^(i)(u)/i! at the evaluation
/// point, so an order-1 jet [a, a*] is arithmetic-isomorphic to the dual
/// number a + eps a*. Constants are order-0 jets and combine with jets of
/// any order; two non-constant jets must share their order.
class Jet {
 public:
  Jet() : coeffs_(Eigen::VectorXd::Zero(1)) {}
  Jet(double value) : coeffs_(Eigen::VectorXd::Constant(1, value)) {}
  Jet(double value, double slope) : coeffs_(2) { coeffs_ << value, slope; }

  static Jet constant(double value, int order = 0) {
    Jet j;
    j.coeffs_ = Eigen::VectorXd::Zero(order + 1);
    j.coeffs_[0] = value;
    return j;
  }

  /// The identity function u at the point `value`, tracked to `order`.
  static Jet variable(double value, int order) {
    if (order < 1) throw OrderMismatch("jet variable needs order >= 1");
    Jet j;
    j.coeffs_ = Eigen::VectorXd::Zero(order + 1);
    j.coeffs_[0] = value;
    j.coeffs_[1] = 1.0;
    return j;
  }

  static Jet from_coeffs(Eigen::VectorXd coeffs) {
    if (coeffs.size() < 1) throw OrderMismatch("jet needs at least one coefficient");
    Jet j;
    j.coeffs_ = std::move(coeffs);
    return j;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() == 1; }

  double value() const { return coeffs_[0]; }
  double coeff(int i) const { return i <= order() ? coeffs_[i] : 0.0; }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }

  /// i-th derivative value, i.e. i! * coeff(i).
  double derivative(int i) const {
    double f = 1.0;
    for (int k = 2; k <= i; ++k) f *= k;
    return coeff(i) * f;
  }

  Jet& operator+=(const Jet& y) { return *this = *this + y; }
  Jet& operator-=(const Jet& y) { return *this = *this - y; }
  Jet& operator*=(const Jet& y) { return *this = *this * y; }
  Jet& operator/=(const Jet& y) { return *this = *this / y; }

  friend Jet operator+(const Jet& x) { return x; }
  friend Jet operator-(const Jet& x) { return Jet::from_coeffs(-x.coeffs_); }

  friend Jet operator+(const Jet& x, const Jet& y) {
    auto [a, b] = aligned(x, y);
    return Jet::from_coeffs(a + b);
  }

  friend Jet operator-(const Jet& x, const Jet& y) {
    auto [a, b] = aligned(x, y);
    return Jet::from_coeffs(a - b);
  }

  // Truncated product: (fg)_i = sum_{j<=i} f_j g_{i-j}
  friend Jet operator*(const Jet& x, const Jet& y) {
    auto [a, b] = aligned(x, y);
    const int n = static_cast<int>(a.size());
    Eigen::VectorXd c(n);
    for (int i = 0; i < n; ++i) {
      double acc = a[0] * b[i];
      for (int j = 1; j <= i; ++j) acc += a[j] * b[i - j];
      c[i] = acc;
    }
    return Jet::from_coeffs(std::move(c));
  }

  // Truncated quotient: c_i = (a_i - sum_{j<i} c_j b_{i-j}) / b_0
  friend Jet operator/(const Jet& x, const Jet& y) {
    auto [a, b] = aligned(x, y);
    if (std::abs(b[0]) < kJetDivisionTolerance)
      throw PureDualDivision("jet division by a series with zero value");
    const int n = static_cast<int>(a.size());
    Eigen::VectorXd c(n);
    c[0] = a[0] / b[0];
    for (int i = 1; i < n; ++i) {
      double acc = a[i];
      for (int j = 0; j < i; ++j) acc -= c[j] * b[i - j];
      c[i] = acc / b[0];
    }
    return Jet::from_coeffs(std::move(c));
  }

  friend bool operator==(const Jet& x, const Jet& y) {
    auto [a, b] = aligned(x, y);
    return a == b;
  }

  friend std::ostream& operator<<(std::ostream& os, const Jet& x) {
    os << "jet[";
    for (int i = 0; i <= x.order(); ++i) os << (i ? ", " : "") << x.coeffs_[i];
    return os << "]";
  }

  static constexpr double kJetDivisionTolerance = 1e-12;

 private:
  // Brings two operands to a common order; only constants are stretched.
  static std::pair<Eigen::VectorXd, Eigen::VectorXd> aligned(const Jet& x,
                                                             const Jet& y) {
    if (x.order() == y.order()) return {x.coeffs_, y.coeffs_};
    if (x.is_constant()) {
      Eigen::VectorXd a = Eigen::VectorXd::Zero(y.coeffs_.size());
      a[0] = x.coeffs_[0];
      return {std::move(a), y.coeffs_};
    }
    if (y.is_constant()) {
      Eigen::VectorXd b = Eigen::VectorXd::Zero(x.coeffs_.size());
      b[0] = y.coeffs_[0];
      return {x.coeffs_, std::move(b)};
    }
    throw OrderMismatch("jet operands have different orders (" +
                        std::to_string(x.order()) + " vs " +
                        std::to_string(y.order()) + ")");
  }

  Eigen::VectorXd coeffs_;
};

namespace detail {

// sin and cos share the coupled recurrence
//   s_k =  (1/k) sum_{j=1..k} j a_j c_{k-j}
//   c_k = -(1/k) sum_{j=1..k} j a_j s_{k-j}
inline void sincos_coeffs(const Eigen::VectorXd& a, Eigen::VectorXd& s,
                          Eigen::VectorXd& c) {
  const int n = static_cast<int>(a.size());
  s.resize(n);
  c.resize(n);
  s[0] = std::sin(a[0]);
  c[0] = std::cos(a[0]);
  for (int k = 1; k < n; ++k) {
    double sacc = 0.0, cacc = 0.0;
    for (int j = 1; j <= k; ++j) {
      sacc += j * a[j] * c[k - j];
      cacc += j * a[j] * s[k - j];
    }
    s[k] = sacc / k;
    c[k] = -cacc / k;
  }
}

}  // namespace detail

inline Jet sin(const Jet& x) {
  Eigen::VectorXd s, c;
  detail::sincos_coeffs(x.coeffs(), s, c);
  return Jet::from_coeffs(std::move(s));
}

inline Jet cos(const Jet& x) {
  Eigen::VectorXd s, c;
  detail::sincos_coeffs(x.coeffs(), s, c);
  return Jet::from_coeffs(std::move(c));
}

// r_k = (a_k - sum_{j=1..k-1} r_j r_{k-j}) / (2 r_0)
inline Jet sqrt(const Jet& x) {
  const Eigen::VectorXd& a = x.coeffs();
  if (!(a[0] > 0.0)) throw DomainError("jet sqrt requires a positive value");
  const int n = static_cast<int>(a.size());
  Eigen::VectorXd r(n);
  r[0] = std::sqrt(a[0]);
  for (int k = 1; k < n; ++k) {
    double acc = a[k];
    for (int j = 1; j <= k - 1; ++j) acc -= r[j] * r[k - j];
    r[k] = acc / (2.0 * r[0]);
  }
  return Jet::from_coeffs(std::move(r));
}

// e_k = (1/k) sum_{j=1..k} j a_j e_{k-j}
inline Jet exp(const Jet& x) {
  const Eigen::VectorXd& a = x.coeffs();
  const int n = static_cast<int>(a.size());
  Eigen::VectorXd e(n);
  e[0] = std::exp(a[0]);
  for (int k = 1; k < n; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * a[j] * e[k - j];
    e[k] = acc / k;
  }
  return Jet::from_coeffs(std::move(e));
}

inline Jet pow(const Jet& x, int n) { return ipow(x, n); }

/// Series of the derivative: one order lower, coeff(i) = (i+1)*f_{i+1}.
inline Jet differentiate(const Jet& x) {
  if (x.is_constant()) return Jet(0.0);
  const int n = x.order();
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d[i] = (i + 1) * x.coeff(i + 1);
  return Jet::from_coeffs(std::move(d));
}

/// Drops coefficients above `order` (no-op if already short enough).
inline Jet truncated(const Jet& x, int order) {
  if (order < 0) throw OrderMismatch("truncation order must be >= 0");
  if (order >= x.order()) return x;
  return Jet::from_coeffs(x.coeffs().head(order + 1));
}

/// Composition f(g(.)): f is a series at the point g.value(); the result is
/// a series in g's parameter, truncated at min(f.order, g.order).
inline Jet compose(const Jet& f, const Jet& g) {
  const int k = f.order() < g.order() ? f.order() : g.order();
  Eigen::VectorXd shifted = g.coeffs().head(k + 1);
  shifted[0] = 0.0;  // powers of (g - g0)
  const Jet gs = Jet::from_coeffs(std::move(shifted));
  Jet acc = Jet::constant(f.coeff(k), k);
  for (int i = k - 1; i >= 0; --i) acc = acc * gs + Jet::constant(f.coeff(i), k);
  return acc;
}

/// Compositional inverse: given the series of s(u) at u0 with s'(u0) != 0,
/// returns the series of u(s) at s(u0). `u0` seeds the constant term.
inline Jet series_inverse(const Jet& s, double u0) {
  const int k = s.order();
  if (k < 1) throw OrderMismatch("series inverse needs order >= 1");
  const double g1 = s.coeff(1);
  if (std::abs(g1) < Jet::kJetDivisionTolerance)
    throw DomainError("series inverse of a stationary series");
  // Solve sum_{i=1..m} h_i [(s - s0)^i]_m = delta_{m,1} for h_m.
  Eigen::VectorXd gs = s.coeffs();
  gs[0] = 0.0;
  Eigen::MatrixXd powers(k + 1, k + 1);  // powers(i, m) = [(s - s0)^i]_m
  powers.setZero();
  powers(0, 0) = 1.0;
  Eigen::VectorXd cur = Eigen::VectorXd::Zero(k + 1);
  cur[0] = 1.0;
  for (int i = 1; i <= k; ++i) {
    Eigen::VectorXd next = Eigen::VectorXd::Zero(k + 1);
    for (int m = 0; m <= k; ++m) {
      double acc = 0.0;
      for (int j = 0; j <= m; ++j) acc += cur[j] * gs[m - j];
      next[m] = acc;
    }
    cur = next;
    powers.col(i) = cur;  // column i holds coefficients of (s - s0)^i
  }
  Eigen::VectorXd h = Eigen::VectorXd::Zero(k + 1);
  h[0] = u0;
  for (int m = 1; m <= k; ++m) {
    double acc = (m == 1) ? 1.0 : 0.0;
    for (int i = 1; i < m; ++i) acc -= h[i] * powers(m, i);
    h[m] = acc / powers(m, m);  // powers(m, m) = g1^m
  }
  return Jet::from_coeffs(std::move(h));
}

}  // namespace darboux

namespace Eigen {

template <>
struct NumTraits<darboux::Jet> {
  using Real = darboux::Jet;
  using NonInteger = darboux::Jet;
  using Nested = darboux::Jet;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 24,
  };
  static inline Real epsilon() {
    return Real(std::numeric_limits<double>::epsilon());
  }
  static inline Real dummy_precision() { return Real(1e-12); }
  static inline Real highest() {
    return Real(std::numeric_limits<double>::max());
  }
  static inline Real lowest() {
    return Real(std::numeric_limits<double>::lowest());
  }
  static inline int digits10() { return std::numeric_limits<double>::digits10; }
};

}  // namespace Eigen

namespace darboux {

// Componentwise helpers for 3-vectors of jets.

inline Vec3<Jet> differentiate3(const Vec3<Jet>& v) {
  return {differentiate(v.x()), differentiate(v.y()), differentiate(v.z())};
}

inline Vec3<Jet> truncated3(const Vec3<Jet>& v, int order) {
  return {truncated(v.x(), order), truncated(v.y(), order),
          truncated(v.z(), order)};
}

inline Vec3<Jet> compose3(const Vec3<Jet>& f, const Jet& g) {
  return {compose(f.x(), g), compose(f.y(), g), compose(f.z(), g)};
}

/// i-th normalized coefficient of each component as a plain vector.
inline Vec3d jet_coeff3(const Vec3<Jet>& v, int i) {
  return {v.x().coeff(i), v.y().coeff(i), v.z().coeff(i)};
}

/// i-th derivative of each component (i! times the coefficient).
inline Vec3d jet_derivative3(const Vec3<Jet>& v, int i) {
  return {v.x().derivative(i), v.y().derivative(i), v.z().derivative(i)};
}

}  // namespace darboux
