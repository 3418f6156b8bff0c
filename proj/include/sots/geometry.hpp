#pragma once

#include <array>
#include <cmath>

namespace sots {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Closed axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 1.0;
  double y1 = 1.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  Point2 lower_left() const { return {x0, y0}; }

  bool contains(const Point2& p, double tol = 0.0) const {
    return p.x >= x0 - tol && p.x <= x1 + tol && p.y >= y0 - tol && p.y <= y1 + tol;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// 2x2 tensor stored row-major: {k11, k12, k21, k22}.
struct Tensor2 {
  std::array<double, 4> v{0.0, 0.0, 0.0, 0.0};

  static Tensor2 isotropic(double k) { return Tensor2{{k, 0.0, 0.0, k}}; }

  double operator()(int i, int j) const { return v[2 * i + j]; }
  double& operator()(int i, int j) { return v[2 * i + j]; }

  Tensor2 scaled(double c) const { return Tensor2{{c * v[0], c * v[1], c * v[2], c * v[3]}}; }

  bool is_finite() const {
    for (double a : v) {
      if (!std::isfinite(a)) return false;
    }
    return true;
  }

  bool is_symmetric(double rel_tol = 1e-12) const {
    const double scale = std::abs(v[0]) + std::abs(v[3]) + std::abs(v[1]) + std::abs(v[2]);
    return std::abs(v[1] - v[2]) <= rel_tol * scale;
  }

  /// Eigenvalues of the symmetric part, ascending.
  std::array<double, 2> eigenvalues() const {
    const double a = v[0];
    const double d = v[3];
    const double b = 0.5 * (v[1] + v[2]);
    const double mean = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), b);
    return {mean - r, mean + r};
  }

  friend bool operator==(const Tensor2&, const Tensor2&) = default;
};

}  // namespace sots
