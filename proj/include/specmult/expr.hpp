#pragma once

#include <map>
#include <memory>
#include <string>

namespace specmult {

/// Small arithmetic expression evaluator used by the config loader for
/// potentials, vector potentials and weights. Supports + - * / ^, parentheses,
/// the variables x, y, z and r = |(x,y,z)|, the constants pi and e, and the
/// functions abs, exp, log, sqrt, sin, cos, tan, tanh, cosh, sinh, min, max,
/// pow, floor, step (step(u) = 1 for u >= 0 else 0).
class Expression {
 public:
  explicit Expression(const std::string& text);
  ~Expression();
  Expression(Expression&&) noexcept;
  Expression& operator=(Expression&&) noexcept;

  double eval(double x, double y = 0.0, double z = 0.0) const;
  const std::string& text() const { return text_; }

 private:
  struct Node;
  std::unique_ptr<Node> root_;
  std::string text_;
};

}  // namespace specmult
