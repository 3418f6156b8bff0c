#pragma once

#include <functional>
#include <string>

#include "sots/geometry.hpp"

namespace sots {

/// Arithmetic expression in the coordinates `x` and `y`.
///
/// Supports + - * / ^, parentheses, numbers, `pi`, and the functions sin, cos,
/// tan, exp, log, sqrt and abs. Evaluation is pure and thread-safe.
class Expression {
 public:
  /// Throws ConfigError on malformed input.
  static Expression parse(const std::string& text);

  double operator()(const Point2& p) const { return fn_(p.x, p.y); }
  const std::string& text() const { return text_; }
  bool is_constant() const { return constant_; }

 private:
  std::function<double(double, double)> fn_;
  std::string text_;
  bool constant_ = true;
};

/// Parses a constant expression such as "1/6".
double parse_number(const std::string& text);

}  // namespace sots
