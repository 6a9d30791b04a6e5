#include <rbif/parser.hpp>

#include <rbif/error.hpp>

#include <cctype>
#include <vector>

namespace rbif {

namespace {

/// Character cursor that skips whitespace and reports 1-based columns.
class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char get() {
    char c = peek();
    if (pos_ < s_.size()) ++pos_;
    return c;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t column() {
    skip_ws();
    return pos_ + 1;
  }
  /// Digits only, no sign.
  std::string digits() {
    skip_ws();
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
    return out;
  }
  /// Digits with an optional fractional part, immediately adjacent.
  std::string decimal() {
    std::string out = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      out += s_[pos_++];
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
    }
    return out;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(column(), what); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string describe(char c) {
  if (c == '\0') return "end of input";
  return std::string("'") + c + "'";
}

class PolyParser {
 public:
  PolyParser(std::string_view text, bool internal) : cur_(text), internal_(internal) {}

  MultiPoly run() {
    if (cur_.at_end()) cur_.fail("empty expression");
    MultiPoly p = expr();
    if (!cur_.at_end()) cur_.fail("unexpected " + describe(cur_.peek()));
    return p;
  }

 private:
  static bool starts_base(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  MultiPoly expr() {
    bool negate = cur_.accept('-');
    MultiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (cur_.accept('+'))
        acc += term();
      else if (cur_.accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (cur_.accept('*')) {
        acc *= factor();
      } else if (starts_base(cur_.peek())) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (cur_.accept('^')) {
      std::string d = cur_.digits();
      if (d.empty()) cur_.fail("exponent must be a nonnegative integer literal");
      if (d.size() > 6) cur_.fail("exponent too large");
      b = b.pow(static_cast<unsigned>(std::stoul(d)));
    }
    return b;
  }

  MultiPoly base() {
    char c = cur_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(cur_.digits());
      if (cur_.accept('/')) {
        std::size_t col = cur_.column();
        std::string d = cur_.digits();
        if (d.empty()) cur_.fail("expected integer denominator");
        Integer den(d);
        if (den == 0) throw ParseError(col, "zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return MultiPoly(q);
      }
      return MultiPoly(Rational(num));
    }
    if (cur_.accept('(')) {
      MultiPoly inner = expr();
      if (!cur_.accept(')')) cur_.fail("expected ')' but found " + describe(cur_.peek()));
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t col = cur_.column();
      cur_.get();
      switch (c) {
        case 'x': return MultiPoly::var(Var::x);
        case 'y': return MultiPoly::var(Var::y);
        default: break;
      }
      if (internal_) {
        switch (c) {
          case 'z': return MultiPoly::var(Var::z);
          case 't': return MultiPoly::var(Var::t);
          case 'u': return MultiPoly::var(Var::u);
          default: break;
        }
      }
      throw ParseError(col, std::string("unknown variable '") + c + "' (only x and y are allowed)");
    }
    cur_.fail("unexpected " + describe(c));
  }

  Cursor cur_;
  bool internal_;
};

}  // namespace

MultiPoly parse(std::string_view text) { return PolyParser(text, false).run(); }

MultiPoly parse_internal(std::string_view text) { return PolyParser(text, true).run(); }

// ---------------------------------------------------------------------------
// curve expressions

struct CurveExpr::Node {
  enum class Op { Const, Param, Add, Sub, Mul, Div, Neg, Pow } op = Op::Const;
  std::complex<double> value;
  int exponent = 0;
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const CurveExpr::Node>;
using Op = CurveExpr::Node::Op;

NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<CurveExpr::Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class CurveParser {
 public:
  explicit CurveParser(std::string_view text) : cur_(text) {}

  NodePtr run() {
    if (cur_.at_end()) cur_.fail("empty expression");
    NodePtr p = expr();
    if (!cur_.at_end()) cur_.fail("unexpected " + describe(cur_.peek()));
    return p;
  }

 private:
  NodePtr expr() {
    bool negate = cur_.accept('-');
    NodePtr acc = term();
    if (negate) acc = make(Op::Neg, acc);
    for (;;) {
      if (cur_.accept('+'))
        acc = make(Op::Add, acc, term());
      else if (cur_.accept('-'))
        acc = make(Op::Sub, acc, term());
      else
        return acc;
    }
  }

  NodePtr term() {
    NodePtr acc = factor();
    for (;;) {
      char c = cur_.peek();
      if (cur_.accept('*'))
        acc = make(Op::Mul, acc, factor());
      else if (cur_.accept('/'))
        acc = make(Op::Div, acc, factor());
      else if (std::isdigit(static_cast<unsigned char>(c)) || c == 's' || c == 'i' || c == '(')
        acc = make(Op::Mul, acc, factor());
      else
        return acc;
    }
  }

  NodePtr factor() {
    NodePtr b = base();
    if (cur_.accept('^')) {
      std::string d = cur_.digits();
      if (d.empty()) cur_.fail("exponent must be a nonnegative integer literal");
      auto n = std::make_shared<CurveExpr::Node>();
      n->op = Op::Pow;
      n->a = b;
      n->exponent = std::stoi(d);
      return n;
    }
    return b;
  }

  NodePtr base() {
    char c = cur_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = std::make_shared<CurveExpr::Node>();
      n->value = std::stod(cur_.decimal());
      return n;
    }
    if (cur_.accept('(')) {
      NodePtr inner = expr();
      if (!cur_.accept(')')) cur_.fail("expected ')' but found " + describe(cur_.peek()));
      return inner;
    }
    if (cur_.accept('s')) return make(Op::Param);
    if (cur_.accept('i')) {
      auto n = std::make_shared<CurveExpr::Node>();
      n->value = {0.0, 1.0};
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      cur_.fail(std::string("unknown symbol '") + c + "' (curves use s and i)");
    cur_.fail("unexpected " + describe(c));
  }

  Cursor cur_;
};

std::complex<double> eval(const CurveExpr::Node& n, std::complex<double> s) {
  switch (n.op) {
    case Op::Const: return n.value;
    case Op::Param: return s;
    case Op::Add: return eval(*n.a, s) + eval(*n.b, s);
    case Op::Sub: return eval(*n.a, s) - eval(*n.b, s);
    case Op::Mul: return eval(*n.a, s) * eval(*n.b, s);
    case Op::Div: return eval(*n.a, s) / eval(*n.b, s);
    case Op::Neg: return -eval(*n.a, s);
    case Op::Pow: {
      std::complex<double> base = eval(*n.a, s), acc = 1.0;
      for (int k = 0; k < n.exponent; ++k) acc *= base;
      return acc;
    }
  }
  return {};
}

}  // namespace

CurveExpr CurveExpr::parse(std::string_view text) {
  CurveExpr e;
  e.root_ = CurveParser(text).run();
  e.text_ = std::string(text);
  return e;
}

std::complex<double> CurveExpr::operator()(std::complex<double> s) const { return eval(*root_, s); }

}  // namespace rbif
