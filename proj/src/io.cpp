#include "quatcurve/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace quatcurve {

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), end);
}

namespace {

void put_vec(std::ostream& out, const auto& v, int n) {
  for (int i = 0; i < n; ++i) out << ',' << format_double(v[i]);
}

}  // namespace

void write_apparatus_csv(std::ostream& out, const ApparatusSeries& series,
                         const std::optional<InvoluteColumns>& involute) {
  out << "s,x1,x2,x3,x4";
  for (const char* v : {"T", "N", "B", "E"}) {
    for (int i = 1; i <= 4; ++i) out << ',' << v << i;
  }
  out << ",kappa,k,bitorsion,eta";
  if (involute) out << ",c,lambda,distance";
  out << '\n';
  if (involute && involute->distance.size() != series.frames.size())
    throw std::invalid_argument("write_apparatus_csv: distance column length mismatch");

  for (std::size_t r = 0; r < series.frames.size(); ++r) {
    const FrenetFrame4& f = series.frames[r];
    out << format_double(f.s);
    put_vec(out, f.position, 4);
    put_vec(out, f.T, 4);
    put_vec(out, f.N, 4);
    put_vec(out, f.B, 4);
    put_vec(out, f.E, 4);
    out << ',' << format_double(f.kappa) << ',' << format_double(f.k) << ',' << format_double(f.bitorsion) << ','
        << f.eta;
    if (involute) {
      out << ',' << format_double(involute->c) << ',' << format_double(involute->c - f.s) << ','
          << format_double(involute->distance[r]);
    }
    out << '\n';
  }
}

void write_spatial_csv(std::ostream& out, std::span<const double> s, std::span<const Vec3> points,
                       const std::vector<SpatialFrame>* frames) {
  if (s.size() != points.size() || (frames && frames->size() != points.size()))
    throw std::invalid_argument("write_spatial_csv: column length mismatch");
  out << "s,ax,ay,az";
  if (frames) out << ",t1,t2,t3,n1,n2,n3,b1,b2,b3";
  out << '\n';
  for (std::size_t r = 0; r < points.size(); ++r) {
    out << format_double(s[r]);
    put_vec(out, points[r], 3);
    if (frames) {
      const SpatialFrame& f = (*frames)[r];
      put_vec(out, f.t, 3);
      put_vec(out, f.n, 3);
      put_vec(out, f.b, 3);
    }
    out << '\n';
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      f.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  fs::rename(tmp, target);
}

}  // namespace quatcurve
