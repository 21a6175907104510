#include "quatcurve/spline.hpp"

#include <algorithm>
#include <stdexcept>

namespace quatcurve {

CubicSpline::CubicSpline(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()), m_(x.size(), 0.0) {
  const std::size_t n = x_.size();
  if (n < 4 || y_.size() != n) throw std::invalid_argument("CubicSpline: need >= 4 knots and matching values");
  std::vector<double> h(n - 1);
  std::vector<double> slope(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    if (!(h[i] > 0.0)) throw std::invalid_argument("CubicSpline: knots must be strictly increasing");
    slope[i] = (y_[i + 1] - y_[i]) / h[i];
  }

  // Unknowns M_1 .. M_{n-2}; M_0 and M_{n-1} are eliminated through the
  // not-a-knot conditions (third derivative continuous at x_1 and x_{n-2}).
  const std::size_t m = n - 2;
  std::vector<double> lower(m, 0.0), diag(m, 0.0), upper(m, 0.0), rhs(m, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t i = r + 1;
    lower[r] = h[i - 1];
    diag[r] = 2.0 * (h[i - 1] + h[i]);
    upper[r] = h[i];
    rhs[r] = 6.0 * (slope[i] - slope[i - 1]);
  }
  {
    const double h0 = h[0], h1 = h[1];
    diag[0] += h0 * (h0 + h1) / h1;
    upper[0] -= h0 * h0 / h1;
    lower[0] = 0.0;
  }
  {
    const double ha = h[n - 3], hb = h[n - 2];
    diag[m - 1] += hb * (ha + hb) / ha;
    lower[m - 1] -= hb * hb / ha;
    upper[m - 1] = 0.0;
  }

  // Thomas algorithm.
  for (std::size_t r = 1; r < m; ++r) {
    const double w = lower[r] / diag[r - 1];
    diag[r] -= w * upper[r - 1];
    rhs[r] -= w * rhs[r - 1];
  }
  std::vector<double> sol(m);
  sol[m - 1] = rhs[m - 1] / diag[m - 1];
  for (std::size_t r = m - 1; r-- > 0;) sol[r] = (rhs[r] - upper[r] * sol[r + 1]) / diag[r];

  for (std::size_t r = 0; r < m; ++r) m_[r + 1] = sol[r];
  m_[0] = ((h[0] + h[1]) * m_[1] - h[0] * m_[2]) / h[1];
  m_[n - 1] = ((h[n - 3] + h[n - 2]) * m_[n - 2] - h[n - 2] * m_[n - 3]) / h[n - 3];
}

std::size_t CubicSpline::segment(double s) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), s);
  const auto idx = static_cast<std::size_t>(std::distance(x_.begin(), it));
  if (idx == 0) return 0;
  return std::min(idx - 1, x_.size() - 2);
}

double CubicSpline::eval(double s, int order) const {
  const std::size_t i = segment(s);
  const double h = x_[i + 1] - x_[i];
  const double l = x_[i + 1] - s;
  const double r = s - x_[i];
  const double mi = m_[i], mj = m_[i + 1];
  const double ci = y_[i] / h - mi * h / 6.0;
  const double cj = y_[i + 1] / h - mj * h / 6.0;
  switch (order) {
    case 0: return mi * l * l * l / (6.0 * h) + mj * r * r * r / (6.0 * h) + ci * l + cj * r;
    case 1: return -mi * l * l / (2.0 * h) + mj * r * r / (2.0 * h) - ci + cj;
    case 2: return (mi * l + mj * r) / h;
    case 3: return (mj - mi) / h;
    default: return 0.0;
  }
}

}  // namespace quatcurve
