#include "quatcurve/involute.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "quatcurve/errors.hpp"

namespace quatcurve {

InvoluteParams default_involute_params(const CurveDefinition& evolute, double c) {
  return {c, 1e-3 * evolute.domain().length()};
}

CurveDefinition involute_curve(const CurveDefinition& evolute, const InvoluteParams& params) {
  if (!(params.exclusion_tol > 0.0) || !std::isfinite(params.c))
    throw GeometryError(ErrorKind::SpecInvalid, "involute needs finite c and exclusion_tol > 0");

  const Interval domain = evolute.domain();
  std::vector<double> probe;
  for (double s : uniform_grid(domain.lo, domain.hi, 65)) {
    if (evolute.admits(s)) probe.push_back(s);
  }
  const UnitSpeedReport speed = is_unit_speed(evolute, probe, 1e-6);
  if (!speed.unit_speed) {
    std::ostringstream os;
    os << "evolute speed deviates from 1 by " << speed.max_deviation;
    throw GeometryError(ErrorKind::NotUnitSpeed, os.str());
  }

  const Interval band{params.c - params.exclusion_tol, params.c + params.exclusion_tol};
  if (band.lo <= domain.lo && band.hi >= domain.hi)
    throw GeometryError(ErrorKind::EmptyDomain, "exclusion band around c covers the whole domain");
  std::optional<Interval> excluded;
  if (band.hi > domain.lo && band.lo < domain.hi) excluded = band;

  const double c = params.c;
  CurveDefinition::Evaluator eval = [evolute, c](double s, int k) -> Vec4 {
    const Vec4 next = evolute.eval(s, k + 1);
    if (k == 0) return evolute.eval(s, 0) + (c - s) * next;
    return (c - s) * next + (1.0 - k) * evolute.eval(s, k);
  };
  // Shifting needs x^(k+1), so order 5 falls back to a difference of order 4.
  return CurveDefinition("involute", domain, std::move(eval), evolute.provenance(), kMaxDerivativeOrder - 1,
                         excluded);
}

double check_involute_definition(const CurveDefinition& evolute, const CurveDefinition& involute,
                                 std::span<const double> grid) {
  const auto tangent = [](const CurveDefinition& curve, double s) {
    const Vec4 d1 = curve.eval(s, 1);
    const double v = d1.norm();
    if (!(v > 0.0)) throw GeometryError(ErrorKind::CurveSingular, "tangent undefined at s = " + std::to_string(s));
    return Vec4(d1 / v);
  };
  double worst = 0.0;
  for (double s : grid) {
    if (!involute.admits(s) || !evolute.admits(s)) continue;
    worst = std::max(worst, std::abs(hform(tangent(involute, s), tangent(evolute, s))));
  }
  return worst;
}

CurvatureJet curvature_jet(const CurveDefinition& curve, double s, const FrenetOptions& options) {
  const auto packed = [&](double t) {
    const FrenetFrame4 f = frenet_apparatus(curve, t, options);
    return Vec4(f.kappa, f.k, f.bitorsion, 0.0);
  };
  const Vec4 value = packed(s);
  const Vec4 d1 = fd_derivative(packed, s, 1, default_fd_step(s, 1), curve.domain(), curve.excluded());
  const Vec4 d2 = fd_derivative(packed, s, 2, default_fd_step(s, 2), curve.domain(), curve.excluded());
  CurvatureJet jet;
  jet.kappa = value[0];
  jet.dkappa = d1[0];
  jet.ddkappa = d2[0];
  jet.k = value[1];
  jet.dk = d1[1];
  jet.ddk = d2[1];
  jet.bitorsion = value[2];
  jet.dbitorsion = d1[2];
  return jet;
}

namespace {

double checked_lambda(const InvoluteParams& params, double s) {
  const double lambda = params.c - s;
  if (std::abs(lambda) <= params.exclusion_tol) {
    std::ostringstream os;
    os << "|c - s| = " << std::abs(lambda) << " is within the exclusion radius " << params.exclusion_tol;
    throw GeometryError(ErrorKind::InvoluteSingular, os.str());
  }
  return lambda;
}

struct Radicand {
  double value = 0.0;
  double cross = 0.0;  // kappa' k - kappa k'
  double w = 0.0;
};

Radicand radicand_of(const CurvatureJet& j) {
  Radicand r;
  const double b = j.bitorsion;
  r.cross = j.dkappa * j.k - j.kappa * j.dk;
  r.value = std::pow(j.k, 4) * b * b + j.kappa * j.kappa * j.k * j.k * b * b + r.cross * r.cross;
  r.w = std::hypot(j.kappa, j.k);
  return r;
}

PredictedInvoluteCurvatures curvatures_from(const CurvatureJet& jet, const Radicand& rad, double lambda) {
  if (!(jet.kappa > 0.0)) throw GeometryError(ErrorKind::CurvatureZero, "evolute curvature vanishes");
  PredictedInvoluteCurvatures out;
  const double scale = jet.kappa * std::abs(lambda);
  const double root = std::sqrt(rad.value);
  out.kappa_phi = rad.w / scale;
  out.k_star = root / (scale * rad.w * rad.w);
  out.k_star_as_printed = root / (scale * rad.w);
  out.radicand = rad.value;
  return out;
}

// Long quotient for r* - kappa_phi, term by term in closed form.
double bitorsion_star_as_printed(const CurvatureJet& j, double lambda, double w) {
  const double K = j.kappa, k = j.k, b = j.bitorsion;
  const double numerator = -K * j.ddkappa * k * k * b + 2.0 * K * j.dkappa * k * j.dk * b + K * K * k * j.ddk * b -
                           2.0 * K * K * k * k * b - K * K * k * k * b * b * b - K * K * k * j.dk * j.dbitorsion;
  const double cross = j.dkappa * k - K * j.dk;
  const double denominator =
      (lambda * lambda * K * K / w) * (std::pow(k, 4) * b * b + K * K * k * k * b * b) + cross * cross;
  return lambda * numerator / denominator;
}

}  // namespace

PredictedInvoluteCurvatures predicted_involute_curvatures(const CurveDefinition& evolute, const InvoluteParams& params,
                                                          double s, const HigherFrameOptions& options) {
  const double lambda = checked_lambda(params, s);
  const CurvatureJet jet = curvature_jet(evolute, s, options.frenet);
  return curvatures_from(jet, radicand_of(jet), lambda);
}

PredictedInvoluteApparatus predicted_involute_apparatus(const CurveDefinition& evolute, const InvoluteParams& params,
                                                        double s, const HigherFrameOptions& options) {
  const double lambda = checked_lambda(params, s);
  const FrenetFrame4 f = frenet_apparatus(evolute, s, options.frenet);
  const CurvatureJet jet = curvature_jet(evolute, s, options.frenet);
  const Radicand rad = radicand_of(jet);
  const double root = std::sqrt(rad.value);
  if (!(root > options.radicand_tol * std::pow(rad.w, 3))) {
    std::ostringstream os;
    os << "radicand " << rad.value << " vanishes at s = " << s << "; B and E of the involute are 0/0";
    throw GeometryError(ErrorKind::HigherFrameIndeterminate, os.str());
  }
  const PredictedInvoluteCurvatures curv = curvatures_from(jet, rad, lambda);

  const double K = jet.kappa, k = jet.k, b = jet.bitorsion, w = rad.w;
  PredictedInvoluteApparatus out;
  out.s = s;
  out.eta = f.eta;
  out.T_phi = f.N;
  out.N_phi = (-K * f.T + k * f.B) / w;
  out.E_phi = f.eta * (k * k * b * f.T + K * k * b * f.B + rad.cross * f.E) / root;
  out.B_phi = f.eta * (rad.cross * (k * f.T + K * f.B) - k * b * w * w * f.E) / (w * root);
  out.kappa_phi = curv.kappa_phi;
  out.k_star = curv.k_star;
  out.k_star_as_printed = curv.k_star_as_printed;
  out.bitorsion_star = bitorsion_star_as_printed(jet, lambda, w);
  return out;
}

const Vec4& InvoluteFrame::vector(int i) const {
  switch (i) {
    case 0: return T;
    case 1: return N;
    case 2: return B;
    case 3: return E;
    default: throw std::out_of_range("InvoluteFrame::vector");
  }
}

InvoluteFrame wcurve_involute_frame(const FrenetFrame4& f, int eta) {
  const double w = std::hypot(f.kappa, f.k);
  if (!(w > 0.0)) throw GeometryError(ErrorKind::CurvatureZero, "kappa^2 + k^2 vanishes");
  InvoluteFrame out;
  out.T = f.N;
  out.N = (-f.kappa * f.T + f.k * f.B) / w;
  out.B = eta * f.E;
  out.E = eta * (f.k * f.T + f.kappa * f.B) / w;
  return out;
}

Vec4 evolute_position_from_involute(const FrenetFrame4& frame, double k, double kappa_x, int sign) {
  if (!(frame.kappa > 0.0)) throw GeometryError(ErrorKind::CurvatureZero, "involute curvature vanishes");
  if (!(kappa_x > 0.0)) throw GeometryError(ErrorKind::CurvatureZero, "evolute curvature vanishes");
  const double rho = 1.0 / frame.kappa;
  return frame.position + sign * rho * frame.N - rho * (k / kappa_x) * frame.E;
}

EvoluteOffsetCoefficients evolute_offset_coefficients(const FrenetFrame4& frame, const Vec4& evolute_point) {
  const Vec4 offset = evolute_point - frame.position;
  return {hform(frame.N, offset), hform(frame.B, offset), hform(frame.E, offset)};
}

EvoluteApparatus evolute_apparatus_from_involute(const FrenetFrame4& f, double tol) {
  const double P = f.kappa;
  const double K = f.k;
  const double R = f.bitorsion;
  const double q2 = K * K + R * R;
  const double q = std::sqrt(q2);
  if (!(q > tol)) throw GeometryError(ErrorKind::HigherFrameIndeterminate, "k*^2 + (r* - kappa)^2 vanishes");
  const double denom = q2 + P * R;
  if (std::abs(denom) <= tol * q2) throw GeometryError(ErrorKind::DenominatorZero, "k*^2 + b*^2 + kappa b* vanishes");
  if (std::abs(K) <= tol) throw GeometryError(ErrorKind::DenominatorZero, "k* vanishes");

  EvoluteApparatus out;
  out.eta = f.eta;
  out.T = f.B;
  out.N = (-K * f.N + R * f.E) / q;
  out.E = f.eta * (R * f.N + K * f.E) / q;
  out.B = f.eta * q * f.T;
  out.kappa = P * q2 * q / (K * denom);
  out.k = P * P * q / denom;
  out.bitorsion = P * P * R * q / (K * denom);
  return out;
}

}  // namespace quatcurve
