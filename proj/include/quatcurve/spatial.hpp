#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "quatcurve/curve.hpp"
#include "quatcurve/frenet.hpp"
#include "quatcurve/involute.hpp"

namespace quatcurve {

/// Frame {t, n, b} of the spatial curve associated with a curve in R^4,
/// related to the 4D frame by N = t T, B = n T, E = b T (quaternion products).
/// k is the spatial principal curvature and r = bitorsion + kappa of the
/// 4D curve.
struct SpatialFrame {
  Vec3 t = Vec3::Zero();
  Vec3 n = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  double k = 0.0;
  double r = 0.0;
};

/// t = N conj(T), n = B conj(T), b = E conj(T). Throws NotSpatial when a
/// product has scalar part above 1e-6 in magnitude.
SpatialFrame spatial_frame(const FrenetFrame4& frame);

/// Integrates d(alpha)/ds = speed * t(s) from `anchor` with fourth-order
/// Runge-Kutta steps between consecutive grid points; the midpoint frame is
/// evaluated on the curve. Returns one point per grid value.
std::vector<Vec3> associated_spatial_curve(const CurveDefinition& curve, std::span<const double> grid,
                                           const Vec3& anchor, const FrenetOptions& options = {});

/// Compares the spatial tangent t* of an involute with the spatial frame of
/// its evolute. t* has no n component, and its t component is
/// kappa / sqrt(kappa^2 + k^2), which keeps the pair from being involute and
/// evolute in R^3.
struct SpatialInvoluteReport {
  std::vector<double> s;
  std::vector<double> h_t_tstar;   // <t, t*>
  std::vector<double> predicted;   // kappa / sqrt(kappa^2 + k^2)
  double max_n_component = 0.0;    // max |<t*, n>|
  double max_deviation = 0.0;      // max |<t, t*> - predicted|
  double min_abs_h = 0.0;          // min |<t, t*>|
};

/// Skips grid points the involute does not admit.
SpatialInvoluteReport check_spatial_involute(const CurveDefinition& evolute, const InvoluteParams& params,
                                             std::span<const double> grid, const FrenetOptions& options = {});

/// Menger curvature of each consecutive point triple, 4 area / (|ab| |bc| |ca|).
/// One value per interior point.
std::vector<double> menger_curvature(std::span<const Vec3> points);

/// Least-squares rigid motion (rotation, no reflection) taking `from` onto `to`.
struct RigidAlignment {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Vec3 translation = Vec3::Zero();
  double max_deviation = 0.0;
  double rms_deviation = 0.0;
};

RigidAlignment align_rigid(std::span<const Vec3> from, std::span<const Vec3> to);

}  // namespace quatcurve
