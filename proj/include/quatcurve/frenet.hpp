#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "quatcurve/curve.hpp"
#include "quatcurve/quaternion.hpp"

namespace quatcurve {

/// Serret-Frenet apparatus of a curve in R^4 at one parameter value.
///
/// T, N, B, E are orthonormal with det(T, N, B, E) = +1. B points along the
/// part of the third derivative normal to span(T, N), so the frame obeys
///   T' =  kappa N
///   N' = -kappa T + k B
///   B' = -k N + bitorsion E
///   E' = -bitorsion B
/// with respect to arc length. eta is the sign with E = eta * T^N^x''' / |.|.
struct FrenetFrame4 {
  double s = 0.0;
  Vec4 position = Vec4::Zero();
  Vec4 T = Vec4::Zero();
  Vec4 N = Vec4::Zero();
  Vec4 B = Vec4::Zero();
  Vec4 E = Vec4::Zero();
  double kappa = 0.0;
  double k = 0.0;
  double bitorsion = 0.0;  // r - kappa
  int eta = 1;
  double speed = 1.0;  // |x'(s)|

  const Vec4& vector(int i) const;
  Vec4& vector(int i);
};

struct FrenetOptions {
  /// A frame vector is undefined when its normalizing denominator is below
  /// this fraction of the local derivative scale.
  double degeneracy_tol = 1e-12;
  /// |x'| below this raises CurveSingular.
  double singular_speed_tol = 1e-12;
};

/// Apparatus from raw derivatives x', x'', x''', x'''' at s. Speed-general.
FrenetFrame4 frenet_from_derivatives(double s, const Vec4& position, std::span<const Vec4, 4> derivatives,
                                     const FrenetOptions& options = {});

FrenetFrame4 frenet_apparatus(const CurveDefinition& curve, double s, const FrenetOptions& options = {});

/// T, N and kappa only, for curves whose B and E are undefined (k = 0).
struct TangentNormal {
  Vec4 T = Vec4::Zero();
  Vec4 N = Vec4::Zero();
  double kappa = 0.0;
  double speed = 1.0;
};

TangentNormal tangent_normal(const CurveDefinition& curve, double s, const FrenetOptions& options = {});

/// Flips individual frame vectors of `frame` so each has a non-negative
/// inner product with the matching vector of `reference`. Curvatures are
/// left untouched; this is a comparison helper.
FrenetFrame4 sign_aligned(const FrenetFrame4& frame, const FrenetFrame4& reference);

/// Norms of the four Frenet equation residuals, with derivatives of the
/// frame field taken by central differences of step h and converted to arc
/// length through the local speed.
struct FrenetResidual {
  double T = 0.0;
  double N = 0.0;
  double B = 0.0;
  double E = 0.0;

  double max() const;
};

FrenetResidual serret_frenet_residual(const CurveDefinition& curve, double s, double h,
                                      const FrenetOptions& options = {});

struct SkippedPoint {
  double s = 0.0;
  std::string reason;
};

struct ApparatusSeries {
  std::string curve_id;
  std::vector<double> grid;
  std::vector<FrenetFrame4> frames;
  std::vector<SkippedPoint> skipped;
};

/// Frames at every admissible grid point. Points where the frame is
/// undefined are skipped and recorded. Consecutive frames whose B vectors
/// anti-align have their (B, E) pair flipped, which keeps det = +1 and
/// negates k and eta.
ApparatusSeries sample_apparatus(const CurveDefinition& curve, std::span<const double> grid,
                                 const FrenetOptions& options = {});

/// Largest deviation of the frame from orthonormality, and det(T, N, B, E).
double orthonormality_defect(const FrenetFrame4& frame);
double frame_determinant(const FrenetFrame4& frame);

}  // namespace quatcurve
