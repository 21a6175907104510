#include "quatcurve/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "quatcurve/errors.hpp"

namespace quatcurve {

const Vec4& FrenetFrame4::vector(int i) const {
  switch (i) {
    case 0: return T;
    case 1: return N;
    case 2: return B;
    case 3: return E;
    default: throw std::out_of_range("FrenetFrame4::vector");
  }
}

Vec4& FrenetFrame4::vector(int i) { return const_cast<Vec4&>(std::as_const(*this).vector(i)); }

namespace {

TangentNormal tangent_normal_from(double s, const Vec4& d1, const Vec4& d2, const FrenetOptions& options) {
  TangentNormal out;
  out.speed = d1.norm();
  if (!(out.speed > options.singular_speed_tol)) {
    throw GeometryError(ErrorKind::CurveSingular, "|x'| vanishes at s = " + std::to_string(s));
  }
  out.T = d1 / out.speed;
  const double v2 = out.speed * out.speed;
  const Vec4 normal_part = v2 * d2 - hform(d1, d2) * d1;
  const double normal_norm = normal_part.norm();
  if (!(normal_norm > options.degeneracy_tol * v2 * d2.norm())) throw FrameUndefined(FrameVector::N, s);
  out.N = normal_part / normal_norm;
  out.kappa = normal_norm / (v2 * v2);
  return out;
}

}  // namespace

TangentNormal tangent_normal(const CurveDefinition& curve, double s, const FrenetOptions& options) {
  return tangent_normal_from(s, curve.eval(s, 1), curve.eval(s, 2), options);
}

FrenetFrame4 frenet_from_derivatives(double s, const Vec4& position, std::span<const Vec4, 4> d,
                                     const FrenetOptions& options) {
  const Vec4& d1 = d[0];
  const Vec4& d2 = d[1];
  const Vec4& d3 = d[2];
  const Vec4& d4 = d[3];

  const TangentNormal tn = tangent_normal_from(s, d1, d2, options);
  const double speed = tn.speed;
  const double normal_norm = tn.kappa * std::pow(speed, 4);

  FrenetFrame4 f;
  f.s = s;
  f.position = position;
  f.speed = speed;
  f.T = tn.T;
  f.N = tn.N;

  const Vec4 wedge = cross4(f.T, f.N, d3);
  const double wedge_norm = wedge.norm();
  if (!(wedge_norm > options.degeneracy_tol * d3.norm())) throw FrameUndefined(FrameVector::E, s);
  const Vec4 e0 = wedge / wedge_norm;

  // E^T^N alone is antiparallel to the normal part of x''' for either sign of
  // eta; the negation makes B the Frenet binormal (k >= 0).
  f.B = -cross4(e0, f.T, f.N);
  f.eta = det4(f.T, f.N, f.B, e0) > 0.0 ? 1 : -1;
  f.E = f.eta * e0;

  f.kappa = tn.kappa;
  f.k = wedge_norm * speed / normal_norm;
  f.bitorsion = hform(d4, f.E) / (wedge_norm * speed);
  return f;
}

FrenetFrame4 frenet_apparatus(const CurveDefinition& curve, double s, const FrenetOptions& options) {
  const std::array<Vec4, 4> d{curve.eval(s, 1), curve.eval(s, 2), curve.eval(s, 3), curve.eval(s, 4)};
  return frenet_from_derivatives(s, curve.eval(s, 0), d, options);
}

FrenetFrame4 sign_aligned(const FrenetFrame4& frame, const FrenetFrame4& reference) {
  FrenetFrame4 out = frame;
  for (int i = 0; i < 4; ++i) {
    if (out.vector(i).dot(reference.vector(i)) < 0.0) out.vector(i) = -out.vector(i);
  }
  return out;
}

double FrenetResidual::max() const { return std::max({T, N, B, E}); }

FrenetResidual serret_frenet_residual(const CurveDefinition& curve, double s, double h, const FrenetOptions& options) {
  const FrenetFrame4 mid = frenet_apparatus(curve, s, options);
  const FrenetFrame4 ahead = sign_aligned(frenet_apparatus(curve, s + h, options), mid);
  const FrenetFrame4 behind = sign_aligned(frenet_apparatus(curve, s - h, options), mid);
  const double scale = 1.0 / (2.0 * h * mid.speed);
  const Vec4 dT = (ahead.T - behind.T) * scale;
  const Vec4 dN = (ahead.N - behind.N) * scale;
  const Vec4 dB = (ahead.B - behind.B) * scale;
  const Vec4 dE = (ahead.E - behind.E) * scale;

  FrenetResidual r;
  r.T = (dT - mid.kappa * mid.N).norm();
  r.N = (dN + mid.kappa * mid.T - mid.k * mid.B).norm();
  r.B = (dB + mid.k * mid.N - mid.bitorsion * mid.E).norm();
  r.E = (dE + mid.bitorsion * mid.B).norm();
  return r;
}

ApparatusSeries sample_apparatus(const CurveDefinition& curve, std::span<const double> grid,
                                 const FrenetOptions& options) {
  ApparatusSeries series;
  series.curve_id = curve.id();
  for (double s : grid) {
    if (!curve.admits(s)) {
      series.skipped.push_back({s, "outside the admissible domain"});
      continue;
    }
    try {
      series.frames.push_back(frenet_apparatus(curve, s, options));
      series.grid.push_back(s);
    } catch (const GeometryError& e) {
      series.skipped.push_back({s, e.what()});
    }
  }
  for (std::size_t i = 1; i < series.frames.size(); ++i) {
    const FrenetFrame4& prev = series.frames[i - 1];
    FrenetFrame4& cur = series.frames[i];
    if (cur.B.dot(prev.B) < 0.0) {
      cur.B = -cur.B;
      cur.E = -cur.E;
      cur.k = -cur.k;
      cur.eta = -cur.eta;
    }
  }
  return series;
}

double orthonormality_defect(const FrenetFrame4& frame) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(hform(frame.vector(i), frame.vector(j)) - target));
    }
  }
  return worst;
}

double frame_determinant(const FrenetFrame4& frame) { return det4(frame.T, frame.N, frame.B, frame.E); }

}  // namespace quatcurve
