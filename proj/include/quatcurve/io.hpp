#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "quatcurve/frenet.hpp"
#include "quatcurve/spatial.hpp"

namespace quatcurve {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Extra columns of an involute export: c, lambda = c - s, and the measured
/// distance |phi(s) - x(s)| per row.
struct InvoluteColumns {
  double c = 0.0;
  std::vector<double> distance;
};

/// Header s,x1..x4,T1..T4,N1..N4,B1..B4,E1..E4,kappa,k,bitorsion,eta and one
/// row per frame. The involute variant appends c,lambda,distance.
void write_apparatus_csv(std::ostream& out, const ApparatusSeries& series,
                         const std::optional<InvoluteColumns>& involute = std::nullopt);

/// Header s,ax,ay,az, followed by t1..t3,n1..n3,b1..b3 when frames are given.
void write_spatial_csv(std::ostream& out, std::span<const double> s, std::span<const Vec3> points,
                       const std::vector<SpatialFrame>* frames = nullptr);

/// Writes to a sibling temporary file and renames it over `path`, so a failed
/// run never leaves a partial file behind.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace quatcurve
