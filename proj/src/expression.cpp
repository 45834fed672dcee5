#include "darboux/expression.hpp"

#include <cctype>
#include <charconv>
#include <system_error>
#include <vector>

#include "darboux/format.hpp"

namespace darboux {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  double number = 0.0;
  bool integral = false;  // literal had no fraction/exponent part
  std::string text;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Token t;
    t.offset = pos_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::End;
      return t;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': t.kind = Token::Kind::Plus; ++pos_; return t;
      case '-': t.kind = Token::Kind::Minus; ++pos_; return t;
      case '*': t.kind = Token::Kind::Star; ++pos_; return t;
      case '/': t.kind = Token::Kind::Slash; ++pos_; return t;
      case '^': t.kind = Token::Kind::Caret; ++pos_; return t;
      case '(': t.kind = Token::Kind::LParen; ++pos_; return t;
      case ')': t.kind = Token::Kind::RParen; ++pos_; return t;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text_.data() + pos_;
      const char* end = text_.data() + text_.size();
      double value = 0.0;
      auto [next, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc{} || next == begin)
        throw SyntaxError("malformed number", pos_);
      t.kind = Token::Kind::Number;
      t.number = value;
      t.text.assign(begin, next);
      t.integral = t.text.find_first_of(".eE") == std::string::npos;
      pos_ += static_cast<std::size_t>(next - begin);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      t.kind = Token::Kind::Ident;
      t.text = text_.substr(pos_, end - pos_);
      pos_ = end;
      return t;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

// Grammar (standard precedence, left-associative):
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' integer-literal)*
//   atom    := number | 'pi' | 'u' | func '(' sum ')' | '(' sum ')'
class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { advance(); }

  ExprPtr run() {
    ExprPtr e = sum();
    if (cur_.kind != Token::Kind::End)
      throw SyntaxError("unexpected trailing input", cur_.offset);
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  bool accept(Token::Kind k) {
    if (cur_.kind != k) return false;
    advance();
    return true;
  }

  void expect(Token::Kind k, const char* what) {
    if (cur_.kind != k) throw SyntaxError(std::string("expected ") + what, cur_.offset);
    advance();
  }

  ExprPtr sum() {
    ExprPtr e = product();
    for (;;) {
      if (accept(Token::Kind::Plus))
        e = node({.kind = Expr::Kind::Add, .a = e, .b = product()});
      else if (accept(Token::Kind::Minus))
        e = node({.kind = Expr::Kind::Sub, .a = e, .b = product()});
      else
        return e;
    }
  }

  ExprPtr product() {
    ExprPtr e = unary();
    for (;;) {
      if (accept(Token::Kind::Star))
        e = node({.kind = Expr::Kind::Mul, .a = e, .b = unary()});
      else if (accept(Token::Kind::Slash))
        e = node({.kind = Expr::Kind::Div, .a = e, .b = unary()});
      else
        return e;
    }
  }

  ExprPtr unary() {
    if (accept(Token::Kind::Minus)) return node({.kind = Expr::Kind::Neg, .a = unary()});
    return power();
  }

  ExprPtr power() {
    ExprPtr e = atom();
    while (accept(Token::Kind::Caret)) {
      if (cur_.kind != Token::Kind::Number || !cur_.integral ||
          cur_.number != static_cast<double>(static_cast<long long>(cur_.number)) ||
          cur_.number < 0)
        throw SyntaxError("exponent must be a non-negative integer literal", cur_.offset);
      const int n = static_cast<int>(cur_.number);
      advance();
      e = node({.kind = Expr::Kind::Pow, .exponent = n, .a = e});
    }
    return e;
  }

  ExprPtr atom() {
    if (cur_.kind == Token::Kind::Number) {
      const double v = cur_.number;
      advance();
      return node({.kind = Expr::Kind::Number, .number = v});
    }
    if (cur_.kind == Token::Kind::Ident) {
      const std::string name = cur_.text;
      const std::size_t off = cur_.offset;
      advance();
      if (name == "u") return node({.kind = Expr::Kind::Var});
      if (name == "pi") return node({.kind = Expr::Kind::Pi});
      Func f;
      if (name == "sin") f = Func::Sin;
      else if (name == "cos") f = Func::Cos;
      else if (name == "sqrt") f = Func::Sqrt;
      else if (name == "exp") f = Func::Exp;
      else throw UnknownIdentifier(name, off);
      expect(Token::Kind::LParen, "'('");
      ExprPtr arg = sum();
      expect(Token::Kind::RParen, "')'");
      return node({.kind = Expr::Kind::Call, .func = f, .a = arg});
    }
    if (accept(Token::Kind::LParen)) {
      ExprPtr e = sum();
      expect(Token::Kind::RParen, "')'");
      return e;
    }
    throw SyntaxError("expected an operand", cur_.offset);
  }

  Lexer lexer_;
  Token cur_;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print_into(const Expr& e, int min_prec, std::string& out) {
  const int prec = precedence(e.kind);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case Expr::Kind::Number:
      out += format_double(e.number);
      break;
    case Expr::Kind::Pi:
      out += "pi";
      break;
    case Expr::Kind::Var:
      out += 'u';
      break;
    case Expr::Kind::Neg:
      out += '-';
      print_into(*e.a, 3, out);
      break;
    case Expr::Kind::Add:
      print_into(*e.a, 1, out);
      out += " + ";
      print_into(*e.b, 2, out);
      break;
    case Expr::Kind::Sub:
      print_into(*e.a, 1, out);
      out += " - ";
      print_into(*e.b, 2, out);
      break;
    case Expr::Kind::Mul:
      print_into(*e.a, 2, out);
      out += '*';
      print_into(*e.b, 3, out);
      break;
    case Expr::Kind::Div:
      print_into(*e.a, 2, out);
      out += '/';
      print_into(*e.b, 3, out);
      break;
    case Expr::Kind::Pow:
      print_into(*e.a, 5, out);
      out += '^';
      out += std::to_string(e.exponent);
      break;
    case Expr::Kind::Call:
      switch (e.func) {
        case Func::Sin: out += "sin("; break;
        case Func::Cos: out += "cos("; break;
        case Func::Sqrt: out += "sqrt("; break;
        case Func::Exp: out += "exp("; break;
      }
      print_into(*e.a, 0, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Expr& e) {
  std::string out;
  print_into(e, 0, out);
  return out;
}

std::array<ExprPtr, 3> parse_curve_triple(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos || text[begin] != '[' || text[end] != ']')
    throw SyntaxError("curve must have the form [expr, expr, expr]",
                      begin == std::string::npos ? 0 : begin);
  std::vector<std::pair<std::size_t, std::string>> parts;
  std::size_t start = begin + 1;
  int depth = 0;
  for (std::size_t i = begin + 1; i <= end; ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    if ((c == ',' && depth == 0) || i == end) {
      parts.emplace_back(start, text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3)
    throw SyntaxError("curve needs exactly three components", begin);
  std::array<ExprPtr, 3> out;
  for (int i = 0; i < 3; ++i) {
    try {
      out[i] = parse(parts[i].second);
    } catch (const SyntaxError& err) {
      throw SyntaxError(std::string("component ") + std::to_string(i + 1) + ": " + err.what(),
                        parts[i].first + err.offset());
    } catch (const UnknownIdentifier& err) {
      throw UnknownIdentifier(err.name(), parts[i].first + err.offset());
    }
  }
  return out;
}

Vec3<Jet> eval_jet(const ParametricCurve& curve, double u, int order) {
  if (!curve.domain.contains(u, 1e-9 * (1.0 + std::abs(curve.domain.length()))))
    throw DomainError("curve evaluated outside its domain");
  const Jet seed = order >= 1 ? Jet::variable(u, order) : Jet(u);
  return {evaluate(*curve.components[0], seed),
          evaluate(*curve.components[1], seed),
          evaluate(*curve.components[2], seed)};
}

}  // namespace darboux
