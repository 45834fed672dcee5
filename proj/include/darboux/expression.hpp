#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <string>

#include "darboux/errors.hpp"
#include "darboux/jet.hpp"
#include "darboux/types.hpp"

namespace darboux {

/// Expression AST over one parameter u: numeric literals, pi, unary minus,
/// + - * /, ^ with a non-negative integer literal exponent, and the
/// functions sin, cos, sqrt, exp.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class Func { Sin, Cos, Sqrt, Exp };

struct Expr {
  enum class Kind { Number, Pi, Var, Neg, Add, Sub, Mul, Div, Pow, Call };

  Kind kind;
  double number = 0.0;  // Number
  int exponent = 0;     // Pow
  Func func = Func::Sin;  // Call
  ExprPtr a, b;
};

ExprPtr parse(const std::string& text);

/// Normal-form printing; parse(print(e)) reproduces the tree.
std::string print(const Expr& e);
inline std::string print(const ExprPtr& e) { return print(*e); }

/// Evaluates the tree over any scalar with +,-,*,/ and sin/cos/sqrt/exp.
template <class T>
T evaluate(const Expr& e, const T& u) {
  using std::sin;
  using std::cos;
  using std::sqrt;
  using std::exp;
  switch (e.kind) {
    case Expr::Kind::Number:
      return T(e.number);
    case Expr::Kind::Pi:
      return T(M_PI);
    case Expr::Kind::Var:
      return u;
    case Expr::Kind::Neg:
      return -evaluate(*e.a, u);
    case Expr::Kind::Add:
      return evaluate(*e.a, u) + evaluate(*e.b, u);
    case Expr::Kind::Sub:
      return evaluate(*e.a, u) - evaluate(*e.b, u);
    case Expr::Kind::Mul:
      return evaluate(*e.a, u) * evaluate(*e.b, u);
    case Expr::Kind::Div:
      return evaluate(*e.a, u) / evaluate(*e.b, u);
    case Expr::Kind::Pow:
      return ipow(evaluate(*e.a, u), e.exponent);
    case Expr::Kind::Call:
      switch (e.func) {
        case Func::Sin:
          return sin(evaluate(*e.a, u));
        case Func::Cos:
          return cos(evaluate(*e.a, u));
        case Func::Sqrt:
          return sqrt(evaluate(*e.a, u));
        case Func::Exp:
          return exp(evaluate(*e.a, u));
      }
  }
  throw GeometryError("corrupt expression tree");
}

template <class T>
T evaluate(const ExprPtr& e, const T& u) {
  return evaluate(*e, u);
}

/// Space curve given by three component expressions of u.
struct ParametricCurve {
  std::array<ExprPtr, 3> components;
  Interval domain{0.0, 1.0};
};

/// Parses the config curve form "[expr, expr, expr]".
std::array<ExprPtr, 3> parse_curve_triple(const std::string& text);

/// Component jets of the curve at u, exact to order `order`.
Vec3<Jet> eval_jet(const ParametricCurve& curve, double u, int order);

}  // namespace darboux
