#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quatcurve/quaternion.hpp"

namespace quatcurve {

inline constexpr int kMaxDerivativeOrder = 5;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double s) const { return s >= lo && s <= hi; }
  /// Strict containment, used for the excluded band around a singular point.
  bool contains_open(double s) const { return s > lo && s < hi; }
};

enum class Provenance { Analytic, FiniteDifferenceWrapped, Sampled };

std::string_view to_string(Provenance p);

/// Parametric curve s -> R^4 with derivatives up to order 5. Orders above
/// max_analytic_order are produced by finite differences of the highest
/// analytic order. Immutable and cheap to copy.
class CurveDefinition {
 public:
  /// eval(s, order) for 0 <= order <= max_analytic_order.
  using Evaluator = std::function<Vec4(double, int)>;

  CurveDefinition(std::string id, Interval domain, Evaluator eval, Provenance provenance, int max_analytic_order,
                  std::optional<Interval> excluded = std::nullopt);

  /// Curve known only through its position; every derivative is a finite difference.
  static CurveDefinition from_position(std::string id, Interval domain, std::function<Vec4(double)> position);

  Vec4 eval(double s, int order = 0) const;
  Vec4 position(double s) const { return eval(s, 0); }

  const std::string& id() const;
  const Interval& domain() const;
  const std::optional<Interval>& excluded() const;
  Provenance provenance() const;
  int max_analytic_order() const;

  /// Inside the domain and outside the excluded band.
  bool admits(double s) const;

  /// Copy whose orders above max_analytic_order are finite differences of
  /// eval(., base) with fixed step h (h = 0 selects default_fd_step).
  CurveDefinition with_fallback(int base, double h) const;

  /// Step used when this curve falls back to finite differences for `order`.
  /// Sampled curves use a step tied to the sample spacing.
  double fallback_step(double s, int order) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// ---- curve specifications -------------------------------------------------

struct PaperExampleSpec {
  std::optional<Interval> domain;
};

/// (A cos ws, A sin ws, B s, C s)
struct Circular4Spec {
  double A = 0.0;
  double omega = 0.0;
  double B = 0.0;
  double C = 0.0;
  std::optional<Interval> domain;
};

/// (a cos ps, a sin ps, b cos qs, b sin qs)
struct DoubleHelixSpec {
  double a = 0.0;
  double p = 0.0;
  double b = 0.0;
  double q = 0.0;
  std::optional<Interval> domain;
};

struct SamplesSpec {
  std::vector<double> s;
  std::vector<Vec4> points;
};

using CurveSpec = std::variant<PaperExampleSpec, Circular4Spec, DoubleHelixSpec, SamplesSpec>;

/// Default parameter domain of the closed-form families: [0, 4 pi].
Interval default_domain();

/// Built-in defaults used when a family is named without parameters.
Circular4Spec default_circular4();
DoubleHelixSpec default_double_helix();

struct BuildOptions {
  bool require_unit_speed = false;
  double unit_speed_tol = 1e-12;
};

/// Throws GeometryError{SpecInvalid} for bad parameters or malformed samples.
CurveDefinition build_curve(const CurveSpec& spec, const BuildOptions& options = {});

/// Parses the JSON curve specification. Unknown fields are rejected.
CurveSpec parse_curve_spec(std::string_view json_text);

/// Accepts a built-in family name ("paper_example", "circular4",
/// "double_helix") or a path to a JSON specification file.
CurveSpec load_curve_spec(const std::string& name_or_path);

// ---- numerical differentiation --------------------------------------------

/// Default step (machine epsilon)^(1/(order+2)) scaled by max(1, |s|).
double default_fd_step(double s, int order);

/// Half-width of the central stencil for `order`, in units of h.
int fd_stencil_halfwidth(int order);

/// Central difference of order 1..5 with one Richardson extrapolation step
/// (steps h and h/2). If `domain` is given, a stencil reaching outside it
/// throws GeometryError{DomainExceeded}; the same holds for a stencil that
/// touches `excluded`.
Vec4 fd_derivative(const std::function<Vec4(double)>& f, double s, int order, double h,
                   std::optional<Interval> domain = std::nullopt, std::optional<Interval> excluded = std::nullopt);

struct UnitSpeedReport {
  bool unit_speed = false;
  double max_deviation = 0.0;
};

UnitSpeedReport is_unit_speed(const CurveDefinition& curve, std::span<const double> grid, double tol);

/// n uniformly spaced values from lo to hi inclusive (n == 1 gives {lo}).
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

}  // namespace quatcurve
