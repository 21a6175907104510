#include "quatcurve/spatial.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>


#include "quatcurve/errors.hpp"

namespace quatcurve {

namespace {

constexpr double kSpatialTol = 1e-6;

Vec3 spatial_part(const Vec4& v, const Quaternion& conj_T, const char* name) {
  const Quaternion q = qmul(Quaternion::from_vec4(v), conj_T);
  if (std::abs(q.scalar()) > kSpatialTol) {
    std::ostringstream os;
    os << name << " has scalar part " << q.scalar() << "; the input frame is not orthonormal";
    throw GeometryError(ErrorKind::NotSpatial, os.str());
  }
  return q.vector();
}

Vec3 tangent_field(const CurveDefinition& curve, double s, const FrenetOptions& options) {
  const FrenetFrame4 f = frenet_apparatus(curve, s, options);
  return f.speed * spatial_frame(f).t;
}

}  // namespace

SpatialFrame spatial_frame(const FrenetFrame4& frame) {
  const Quaternion conj_T = conjugate(Quaternion::from_vec4(frame.T));
  SpatialFrame out;
  out.t = spatial_part(frame.N, conj_T, "t");
  out.n = spatial_part(frame.B, conj_T, "n");
  out.b = spatial_part(frame.E, conj_T, "b");
  out.k = frame.k;
  out.r = frame.bitorsion + frame.kappa;
  return out;
}

std::vector<Vec3> associated_spatial_curve(const CurveDefinition& curve, std::span<const double> grid,
                                           const Vec3& anchor, const FrenetOptions& options) {
  std::vector<Vec3> out;
  if (grid.empty()) return out;
  out.reserve(grid.size());
  out.push_back(anchor);
  Vec3 prev = tangent_field(curve, grid[0], options);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double h = grid[i] - grid[i - 1];
    const Vec3 mid = tangent_field(curve, grid[i - 1] + 0.5 * h, options);
    const Vec3 next = tangent_field(curve, grid[i], options);
    // The field depends on s only, so the RK4 stages collapse to Simpson's rule.
    out.push_back(out.back() + h / 6.0 * (prev + 4.0 * mid + next));
    prev = next;
  }
  return out;
}

SpatialInvoluteReport check_spatial_involute(const CurveDefinition& evolute, const InvoluteParams& params,
                                             std::span<const double> grid, const FrenetOptions& options) {
  const CurveDefinition involute = involute_curve(evolute, params);
  SpatialInvoluteReport report;
  report.min_abs_h = std::numeric_limits<double>::infinity();
  for (double s : grid) {
    if (!involute.admits(s)) continue;
    const FrenetFrame4 fx = frenet_apparatus(evolute, s, options);
    const TangentNormal fphi = tangent_normal(involute, s, options);
    const SpatialFrame sx = spatial_frame(fx);
    const Vec3 tstar = spatial_part(fphi.N, conjugate(Quaternion::from_vec4(fphi.T)), "t*");
    const double h = sx.t.dot(tstar);
    const double predicted = fx.kappa / std::hypot(fx.kappa, fx.k);
    report.s.push_back(s);
    report.h_t_tstar.push_back(h);
    report.predicted.push_back(predicted);
    report.max_n_component = std::max(report.max_n_component, std::abs(tstar.dot(sx.n)));
    report.max_deviation = std::max(report.max_deviation, std::abs(h - predicted));
    report.min_abs_h = std::min(report.min_abs_h, std::abs(h));
  }
  if (report.s.empty()) report.min_abs_h = 0.0;
  return report;
}

std::vector<double> menger_curvature(std::span<const Vec3> points) {
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    const Vec3 ab = points[i] - points[i - 1];
    const Vec3 bc = points[i + 1] - points[i];
    const Vec3 ca = points[i - 1] - points[i + 1];
    out.push_back(2.0 * ab.cross(bc).norm() / (ab.norm() * bc.norm() * ca.norm()));
  }
  return out;
}

RigidAlignment align_rigid(std::span<const Vec3> from, std::span<const Vec3> to) {
  if (from.size() != to.size() || from.empty()) throw std::invalid_argument("align_rigid: point sets differ in size");
  const auto n = static_cast<double>(from.size());
  Vec3 cf = Vec3::Zero(), ct = Vec3::Zero();
  for (std::size_t i = 0; i < from.size(); ++i) {
    cf += from[i];
    ct += to[i];
  }
  cf /= n;
  ct /= n;
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (std::size_t i = 0; i < from.size(); ++i) cov += (from[i] - cf) * (to[i] - ct).transpose();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d fix = Eigen::Matrix3d::Identity();
  fix(2, 2) = (svd.matrixV() * svd.matrixU().transpose()).determinant() < 0.0 ? -1.0 : 1.0;

  RigidAlignment out;
  out.rotation = svd.matrixV() * fix * svd.matrixU().transpose();
  out.translation = ct - out.rotation * cf;
  double sq = 0.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    const double d = (out.rotation * from[i] + out.translation - to[i]).norm();
    out.max_deviation = std::max(out.max_deviation, d);
    sq += d * d;
  }
  out.rms_deviation = std::sqrt(sq / n);
  return out;
}

}  // namespace quatcurve
