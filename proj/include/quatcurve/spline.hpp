#pragma once

#include <span>
#include <vector>

namespace quatcurve {

/// Scalar cubic spline with not-a-knot end conditions. Needs at least four
/// strictly increasing knots.
class CubicSpline {
 public:
  CubicSpline(std::span<const double> x, std::span<const double> y);

  /// Value or derivative (order 0..3). Outside the knot range the end
  /// polynomial pieces are extended.
  double eval(double s, int order = 0) const;

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }

 private:
  std::size_t segment(double s) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace quatcurve
