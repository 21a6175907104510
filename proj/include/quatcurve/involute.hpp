#pragma once

#include <span>

#include "quatcurve/curve.hpp"
#include "quatcurve/frenet.hpp"

namespace quatcurve {

/// Involute phi(s) = x(s) + (c - s) T(s). Points with |c - s| < exclusion_tol
/// are excluded because the involute's curvature diverges at s = c.
struct InvoluteParams {
  double c = 0.0;
  double exclusion_tol = 1e-3;
};

/// exclusion_tol = 1e-3 * (domain length).
InvoluteParams default_involute_params(const CurveDefinition& evolute, double c);

/// Builds the involute, kept in the evolute's parameter s. Derivatives follow
/// phi^(k) = (c - s) x^(k+1) + (1 - k) x^(k). Throws NotUnitSpeed when the
/// evolute deviates from unit speed by more than 1e-6, EmptyDomain when the
/// excluded band swallows the whole domain.
CurveDefinition involute_curve(const CurveDefinition& evolute, const InvoluteParams& params);

/// Largest |h(T_phi, T_x)| over the grid points admitted by the involute.
double check_involute_definition(const CurveDefinition& evolute, const CurveDefinition& involute,
                                 std::span<const double> grid);

/// kappa, k, bitorsion and their first and second derivatives in s, the
/// derivatives taken by central differences of the curvature functions.
struct CurvatureJet {
  double kappa = 0.0, dkappa = 0.0, ddkappa = 0.0;
  double k = 0.0, dk = 0.0, ddk = 0.0;
  double bitorsion = 0.0, dbitorsion = 0.0;
};

CurvatureJet curvature_jet(const CurveDefinition& curve, double s, const FrenetOptions& options = {});

/// Involute curvatures predicted from the evolute's apparatus.
///
/// k_star is the second curvature that follows from the wedge-norm quotient
/// applied to the involute, sqrt(radicand) / (kappa |c - s| (kappa^2 + k^2)).
/// k_star_as_printed carries the closed form with a single power of
/// sqrt(kappa^2 + k^2) in the denominator; it disagrees with the direct
/// computation by that factor and is kept for reporting.
struct PredictedInvoluteCurvatures {
  double kappa_phi = 0.0;
  double k_star = 0.0;
  double k_star_as_printed = 0.0;
  /// k^4 b^2 + kappa^2 k^2 b^2 + (kappa' k - kappa k')^2, b the bitorsion.
  double radicand = 0.0;
};

struct PredictedInvoluteApparatus {
  double s = 0.0;
  Vec4 T_phi = Vec4::Zero();
  Vec4 N_phi = Vec4::Zero();
  Vec4 B_phi = Vec4::Zero();
  Vec4 E_phi = Vec4::Zero();
  double kappa_phi = 0.0;
  double k_star = 0.0;
  double k_star_as_printed = 0.0;
  /// Long closed-form quotient for r* - kappa_phi, evaluated verbatim.
  double bitorsion_star = 0.0;
  int eta = 1;
};

struct HigherFrameOptions {
  /// sqrt(radicand) below tol * (kappa^2 + k^2)^(3/2) is treated as zero.
  double radicand_tol = 1e-9;
  FrenetOptions frenet;
};

/// Throws InvoluteSingular when |c - s| <= exclusion_tol.
PredictedInvoluteCurvatures predicted_involute_curvatures(const CurveDefinition& evolute, const InvoluteParams& params,
                                                          double s, const HigherFrameOptions& options = {});

/// Full predicted apparatus. eta is taken from the evolute frame. Throws
/// InvoluteSingular, or HigherFrameIndeterminate when the radicand vanishes
/// (B_phi and E_phi become 0/0; use wcurve_involute_frame for w-curves).
PredictedInvoluteApparatus predicted_involute_apparatus(const CurveDefinition& evolute, const InvoluteParams& params,
                                                        double s, const HigherFrameOptions& options = {});

struct InvoluteFrame {
  Vec4 T = Vec4::Zero();
  Vec4 N = Vec4::Zero();
  Vec4 B = Vec4::Zero();
  Vec4 E = Vec4::Zero();

  const Vec4& vector(int i) const;
};

/// Involute frame of a w-curve evolute:
///   T_phi = N, N_phi = (-kappa T + k B) / w, B_phi = eta E,
///   E_phi = eta (k T + kappa B) / w,          w = sqrt(kappa^2 + k^2).
/// Throws CurvatureZero when w = 0.
InvoluteFrame wcurve_involute_frame(const FrenetFrame4& evolute_frame, int eta = 1);

/// phi + sign * rho N_phi - rho (k / kappa_x) E_phi with rho = 1 / kappa_phi.
/// Throws CurvatureZero when kappa_phi or kappa_x is not positive.
Vec4 evolute_position_from_involute(const FrenetFrame4& involute_frame, double k, double kappa_x, int sign);

/// Coefficients of x - phi in the involute frame: h(N_phi, x - phi),
/// h(B_phi, x - phi), h(E_phi, x - phi).
struct EvoluteOffsetCoefficients {
  double along_N = 0.0;
  double mu = 0.0;
  double gamma = 0.0;
};

EvoluteOffsetCoefficients evolute_offset_coefficients(const FrenetFrame4& involute_frame, const Vec4& evolute_point);

struct EvoluteApparatus {
  Vec4 T = Vec4::Zero();
  Vec4 N = Vec4::Zero();
  Vec4 B = Vec4::Zero();
  Vec4 E = Vec4::Zero();
  double kappa = 0.0;
  double k = 0.0;
  double bitorsion = 0.0;
  int eta = 1;
};

/// Closed forms for the evolute apparatus in terms of the involute's,
/// evaluated verbatim:
///   T = B_phi,  N = (-k* N_phi + b* E_phi) / q,  E = eta (b* N_phi + k* E_phi) / q,
///   B = eta q T_phi,  q = sqrt(k*^2 + b*^2),  b* = r* - kappa_phi,
/// and the three curvature quotients with denominator q^2 + kappa_phi b*.
/// eta is taken from the involute frame. Throws HigherFrameIndeterminate when
/// q vanishes and DenominatorZero when k* or the quotient denominator does.
EvoluteApparatus evolute_apparatus_from_involute(const FrenetFrame4& involute_frame, double tol = 1e-12);

}  // namespace quatcurve
