#include "quatcurve/quaternion.hpp"

#include <cmath>

#include <Eigen/Geometry>

namespace quatcurve {

Quaternion qmul(const Quaternion& p, const Quaternion& q) {
  const Vec3 vp = p.vector();
  const Vec3 vq = q.vector();
  const double scalar = p.d * q.d - vp.dot(vq);
  const Vec3 vec = p.d * vq + q.d * vp + vp.cross(vq);
  return {scalar, vec};
}

Quaternion conjugate(const Quaternion& q) { return {q.d, -q.a, -q.b, -q.c}; }

double hform(const Quaternion& p, const Quaternion& q) {
  const Quaternion sym = qmul(p, conjugate(q)) + qmul(q, conjugate(p));
  return 0.5 * sym.d;
}

double qnorm(const Quaternion& q) { return std::sqrt(hform(q, q)); }

bool is_spatial(const Quaternion& q, double tol) { return std::abs(q.d) <= tol; }

bool is_temporal(const Quaternion& q, double tol) {
  return std::abs(q.a) <= tol && std::abs(q.b) <= tol && std::abs(q.c) <= tol;
}

double hform(const Vec4& p, const Vec4& q) { return hform(Quaternion::from_vec4(p), Quaternion::from_vec4(q)); }

namespace {

// 3x3 minor of the matrix with rows a, b, c after deleting column `skip`.
double minor3(const Vec4& a, const Vec4& b, const Vec4& c, int skip) {
  int cols[3];
  for (int i = 0, k = 0; i < 4; ++i) {
    if (i != skip) cols[k++] = i;
  }
  const auto m = [&](const Vec4& r, int j) { return r[cols[j]]; };
  return m(a, 0) * (m(b, 1) * m(c, 2) - m(b, 2) * m(c, 1)) -
         m(a, 1) * (m(b, 0) * m(c, 2) - m(b, 2) * m(c, 0)) +
         m(a, 2) * (m(b, 0) * m(c, 1) - m(b, 1) * m(c, 0));
}

}  // namespace

Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  // Cofactor expansion along the first (basis) row.
  Vec4 w;
  for (int i = 0; i < 4; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    w[i] = sign * minor3(a, b, c, i);
  }
  return w;
}

double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) { return cross4(b, c, d).dot(a); }

}  // namespace quatcurve
