#pragma once

#include <Eigen/Core>

namespace quatcurve {

/// Point or vector of R^4 in basis order (e1, e2, e3, e4). The last component
/// is the real unit e4 = 1, so a Vec4 (x1, x2, x3, x4) is the quaternion
/// x4 + x1 e1 + x2 e2 + x3 e3.
using Vec4 = Eigen::Vector4d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kDefaultTol = 1e-9;

/// Real quaternion d + a e1 + b e2 + c e3.
struct Quaternion {
  double d = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double d_, double a_, double b_, double c_) : d(d_), a(a_), b(b_), c(c_) {}
  Quaternion(double scalar, const Vec3& vec) : d(scalar), a(vec.x()), b(vec.y()), c(vec.z()) {}

  double scalar() const { return d; }
  Vec3 vector() const { return {a, b, c}; }

  static Quaternion from_vec4(const Vec4& v) { return {v[3], v[0], v[1], v[2]}; }
  Vec4 to_vec4() const { return {a, b, c, d}; }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.d + q.d, p.a + q.a, p.b + q.b, p.c + q.c};
  }
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.d - q.d, p.a - q.a, p.b - q.b, p.c - q.c};
  }
  friend Quaternion operator*(double s, const Quaternion& q) { return {s * q.d, s * q.a, s * q.b, s * q.c}; }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Basis quaternions. e4 is the real unit.
inline constexpr Quaternion kE1{0, 1, 0, 0};
inline constexpr Quaternion kE2{0, 0, 1, 0};
inline constexpr Quaternion kE3{0, 0, 0, 1};
inline constexpr Quaternion kE4{1, 0, 0, 0};

/// p x q = S_p S_q - <V_p, V_q> + S_p V_q + S_q V_p + V_p ^ V_q
Quaternion qmul(const Quaternion& p, const Quaternion& q);
Quaternion conjugate(const Quaternion& q);

/// Symmetric bilinear form: scalar part of (p q^* + q p^*) / 2. Equal to the
/// Euclidean dot product of the 4-tuples.
double hform(const Quaternion& p, const Quaternion& q);
double qnorm(const Quaternion& q);

/// True iff |scalar part| <= tol.
bool is_spatial(const Quaternion& q, double tol = kDefaultTol);
/// True iff every vector component is within tol of zero.
bool is_temporal(const Quaternion& q, double tol = kDefaultTol);

/// hform on 4-vectors through the quaternion identification.
double hform(const Vec4& p, const Vec4& q);

/// Ternary wedge of R^4. Returns w with <w, v> = det(rows v, a, b, c) for all v,
/// so cross4(e2, e3, e4) = e1 and cross4(e1, e2, e3) = -e4.
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c);

/// Determinant of the 4x4 matrix with rows a, b, c, d.
double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d);

}  // namespace quatcurve
