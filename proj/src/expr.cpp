#include "specmult/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace specmult {

namespace {

enum class Op {
  num, var_x, var_y, var_z, var_r,
  add, sub, mul, div, pow, neg,
  call1, call2,
};

using Fn1 = double (*)(double);
using Fn2 = double (*)(double, double);

double fn_step(double u) { return u >= 0.0 ? 1.0 : 0.0; }
double fn_min(double a, double b) { return a < b ? a : b; }
double fn_max(double a, double b) { return a > b ? a : b; }

const std::map<std::string, Fn1>& unary_table() {
  static const std::map<std::string, Fn1> t = {
      {"abs", std::fabs}, {"exp", std::exp},   {"log", std::log},
      {"sqrt", std::sqrt}, {"sin", std::sin},  {"cos", std::cos},
      {"tan", std::tan},  {"tanh", std::tanh}, {"sinh", std::sinh},
      {"cosh", std::cosh}, {"floor", std::floor}, {"step", fn_step},
  };
  return t;
}

const std::map<std::string, Fn2>& binary_table() {
  static const std::map<std::string, Fn2> t = {
      {"min", fn_min}, {"max", fn_max}, {"pow", std::pow}};
  return t;
}

}  // namespace

struct Expression::Node {
  Op op;
  double value = 0.0;
  Fn1 f1 = nullptr;
  Fn2 f2 = nullptr;
  std::unique_ptr<Node> lhs, rhs;

  double eval(double x, double y, double z) const {
    switch (op) {
      case Op::num: return value;
      case Op::var_x: return x;
      case Op::var_y: return y;
      case Op::var_z: return z;
      case Op::var_r: return std::sqrt(x * x + y * y + z * z);
      case Op::add: return lhs->eval(x, y, z) + rhs->eval(x, y, z);
      case Op::sub: return lhs->eval(x, y, z) - rhs->eval(x, y, z);
      case Op::mul: return lhs->eval(x, y, z) * rhs->eval(x, y, z);
      case Op::div: return lhs->eval(x, y, z) / rhs->eval(x, y, z);
      case Op::pow: return std::pow(lhs->eval(x, y, z), rhs->eval(x, y, z));
      case Op::neg: return -lhs->eval(x, y, z);
      case Op::call1: return f1(lhs->eval(x, y, z));
      case Op::call2: return f2(lhs->eval(x, y, z), rhs->eval(x, y, z));
    }
    return 0.0;
  }
};

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  std::unique_ptr<Expression::Node> parse() {
    auto n = parseSum();
    skipSpace();
    if (pos_ != s_.size()) fail("trailing characters");
    return n;
  }

 private:
  using NodePtr = std::unique_ptr<Expression::Node>;

  NodePtr mk(Op op) {
    auto n = std::make_unique<Expression::Node>();
    n->op = op;
    return n;
  }

  NodePtr parseSum() {
    auto lhs = parseProduct();
    for (;;) {
      skipSpace();
      if (consume('+')) {
        auto n = mk(Op::add);
        n->lhs = std::move(lhs);
        n->rhs = parseProduct();
        lhs = std::move(n);
      } else if (consume('-')) {
        auto n = mk(Op::sub);
        n->lhs = std::move(lhs);
        n->rhs = parseProduct();
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  NodePtr parseProduct() {
    auto lhs = parseUnary();
    for (;;) {
      skipSpace();
      if (consume('*')) {
        auto n = mk(Op::mul);
        n->lhs = std::move(lhs);
        n->rhs = parseUnary();
        lhs = std::move(n);
      } else if (consume('/')) {
        auto n = mk(Op::div);
        n->lhs = std::move(lhs);
        n->rhs = parseUnary();
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  NodePtr parseUnary() {
    skipSpace();
    if (consume('-')) {
      auto n = mk(Op::neg);
      n->lhs = parseUnary();
      return n;
    }
    consume('+');
    return parsePower();
  }

  // Right-associative: a^b^c = a^(b^c).
  NodePtr parsePower() {
    auto base = parseAtom();
    skipSpace();
    if (consume('^')) {
      auto n = mk(Op::pow);
      n->lhs = std::move(base);
      n->rhs = parseUnary();
      return n;
    }
    return base;
  }

  NodePtr parseAtom() {
    skipSpace();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (consume('(')) {
      auto n = parseSum();
      skipSpace();
      if (!consume(')')) fail("missing ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parseNumber();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parseIdent();
    fail(std::string("unexpected character '") + c + "'");
    return nullptr;
  }

  NodePtr parseNumber() {
    size_t used = 0;
    double v;
    try {
      v = std::stod(s_.substr(pos_), &used);
    } catch (const std::exception&) {
      fail("bad number");
    }
    pos_ += used;
    auto n = mk(Op::num);
    n->value = v;
    return n;
  }

  NodePtr parseIdent() {
    const size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    skipSpace();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      auto arg1 = parseSum();
      skipSpace();
      if (consume(',')) {
        auto arg2 = parseSum();
        skipSpace();
        if (!consume(')')) fail("missing ')'");
        auto it = binary_table().find(name);
        if (it == binary_table().end()) fail("unknown function '" + name + "'");
        auto n = mk(Op::call2);
        n->f2 = it->second;
        n->lhs = std::move(arg1);
        n->rhs = std::move(arg2);
        return n;
      }
      if (!consume(')')) fail("missing ')'");
      auto it = unary_table().find(name);
      if (it == unary_table().end()) fail("unknown function '" + name + "'");
      auto n = mk(Op::call1);
      n->f1 = it->second;
      n->lhs = std::move(arg1);
      return n;
    }
    if (name == "x") return mk(Op::var_x);
    if (name == "y") return mk(Op::var_y);
    if (name == "z") return mk(Op::var_z);
    if (name == "r") return mk(Op::var_r);
    if (name == "pi") {
      auto n = mk(Op::num);
      n->value = M_PI;
      return n;
    }
    if (name == "e") {
      auto n = mk(Op::num);
      n->value = M_E;
      return n;
    }
    fail("unknown identifier '" + name + "'");
    return nullptr;
  }

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skipSpace();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("expression error at position " +
                                std::to_string(pos_) + ": " + msg);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Expression::Expression(const std::string& text) : text_(text) {
  root_ = Parser(text).parse();
}

Expression::~Expression() = default;
Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;

double Expression::eval(double x, double y, double z) const {
  return root_->eval(x, y, z);
}

}  // namespace specmult
