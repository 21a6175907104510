#include "quatcurve/curve.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "quatcurve/errors.hpp"
#include "quatcurve/spline.hpp"

namespace quatcurve {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Analytic: return "analytic";
    case Provenance::FiniteDifferenceWrapped: return "finite-difference-wrapped";
    case Provenance::Sampled: return "sampled";
  }
  return "unknown";
}

// ---- finite differences ------------------------------------------------------

double default_fd_step(double s, int order) {
  const double eps = std::numeric_limits<double>::epsilon();
  return std::pow(eps, 1.0 / (order + 2)) * std::max(1.0, std::abs(s));
}

int fd_stencil_halfwidth(int order) {
  switch (order) {
    case 1:
    case 2: return 1;
    case 3:
    case 4: return 2;
    case 5: return 3;
    default: throw std::invalid_argument("fd_stencil_halfwidth: order must be in 1..5");
  }
}

namespace {

Vec4 central_difference(const std::function<Vec4(double)>& f, double s, int order, double h) {
  const auto at = [&](int k) { return f(s + k * h); };
  switch (order) {
    case 1: return (at(1) - at(-1)) / (2.0 * h);
    case 2: return (at(1) - 2.0 * at(0) + at(-1)) / (h * h);
    case 3: return (at(2) - 2.0 * at(1) + 2.0 * at(-1) - at(-2)) / (2.0 * h * h * h);
    case 4: return (at(2) - 4.0 * at(1) + 6.0 * at(0) - 4.0 * at(-1) + at(-2)) / std::pow(h, 4);
    case 5:
      return (at(3) - 4.0 * at(2) + 5.0 * at(1) - 5.0 * at(-1) + 4.0 * at(-2) - at(-3)) / (2.0 * std::pow(h, 5));
    default: throw std::invalid_argument("fd_derivative: order must be in 1..5");
  }
}

}  // namespace

Vec4 fd_derivative(const std::function<Vec4(double)>& f, double s, int order, double h, std::optional<Interval> domain,
                   std::optional<Interval> excluded) {
  if (order < 1 || order > kMaxDerivativeOrder) throw std::invalid_argument("fd_derivative: order must be in 1..5");
  if (!(h > 0.0)) throw std::invalid_argument("fd_derivative: step must be positive");
  const double reach = fd_stencil_halfwidth(order) * h;
  const double slack = 1e-12 * std::max(1.0, std::abs(s));
  if (domain && (s - reach < domain->lo - slack || s + reach > domain->hi + slack)) {
    std::ostringstream os;
    os << "stencil [" << s - reach << ", " << s + reach << "] leaves domain [" << domain->lo << ", " << domain->hi
       << "]";
    throw GeometryError(ErrorKind::DomainExceeded, os.str());
  }
  if (excluded && s + reach > excluded->lo && s - reach < excluded->hi) {
    std::ostringstream os;
    os << "stencil around s = " << s << " touches the excluded band (" << excluded->lo << ", " << excluded->hi << ")";
    throw GeometryError(ErrorKind::DomainExceeded, os.str());
  }
  const Vec4 coarse = central_difference(f, s, order, h);
  const Vec4 fine = central_difference(f, s, order, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

// ---- CurveDefinition ------------------------------------------------------------

struct CurveDefinition::Impl {
  std::string id;
  Interval domain;
  Evaluator eval;
  Provenance provenance;
  int max_analytic_order;
  std::optional<Interval> excluded;
  int fallback_base = 0;
  double fallback_h = 0.0;  // 0 selects default_fd_step
};

CurveDefinition::CurveDefinition(std::string id, Interval domain, Evaluator eval, Provenance provenance,
                                 int max_analytic_order, std::optional<Interval> excluded) {
  if (max_analytic_order < 0 || max_analytic_order > kMaxDerivativeOrder)
    throw std::invalid_argument("CurveDefinition: max_analytic_order must be in 0..5");
  auto impl = std::make_shared<Impl>();
  impl->id = std::move(id);
  impl->domain = domain;
  impl->eval = std::move(eval);
  impl->provenance = provenance;
  impl->max_analytic_order = max_analytic_order;
  impl->excluded = excluded;
  impl->fallback_base = max_analytic_order;
  impl_ = std::move(impl);
}

CurveDefinition CurveDefinition::from_position(std::string id, Interval domain, std::function<Vec4(double)> position) {
  return CurveDefinition(
      std::move(id), domain, [position = std::move(position)](double s, int) { return position(s); },
      Provenance::FiniteDifferenceWrapped, 0);
}

Vec4 CurveDefinition::eval(double s, int order) const {
  if (order < 0 || order > kMaxDerivativeOrder) throw std::invalid_argument("eval: order must be in 0..5");
  const Impl& im = *impl_;
  if (order <= im.max_analytic_order) return im.eval(s, order);
  const int base = im.fallback_base;
  const int fd_order = order - base;
  const double h = fallback_step(s, fd_order);
  const auto f = [this, base](double t) { return impl_->eval(t, base); };
  return fd_derivative(f, s, fd_order, h, im.domain, im.excluded);
}

CurveDefinition CurveDefinition::with_fallback(int base, double h) const {
  if (base < 0 || base > impl_->max_analytic_order) throw std::invalid_argument("with_fallback: bad base order");
  auto impl = std::make_shared<Impl>(*impl_);
  impl->fallback_base = base;
  impl->fallback_h = h;
  CurveDefinition copy = *this;
  copy.impl_ = std::move(impl);
  return copy;
}

double CurveDefinition::fallback_step(double s, int order) const {
  if (impl_->fallback_h > 0.0) return impl_->fallback_h;
  return default_fd_step(s, order);
}

const std::string& CurveDefinition::id() const { return impl_->id; }
const Interval& CurveDefinition::domain() const { return impl_->domain; }
const std::optional<Interval>& CurveDefinition::excluded() const { return impl_->excluded; }
Provenance CurveDefinition::provenance() const { return impl_->provenance; }
int CurveDefinition::max_analytic_order() const { return impl_->max_analytic_order; }

bool CurveDefinition::admits(double s) const {
  if (!impl_->domain.contains(s)) return false;
  return !(impl_->excluded && impl_->excluded->contains_open(s));
}

// ---- built-in families -----------------------------------------------------------

Interval default_domain() { return {0.0, 4.0 * std::numbers::pi}; }

Circular4Spec default_circular4() { return {0.6, 1.0, 0.48, 0.64, std::nullopt}; }

DoubleHelixSpec default_double_helix() { return {0.6, 1.0, 0.4, 2.0, std::nullopt}; }

namespace {

// k-th derivative of cos and sin at x, exact sign cycling.
std::pair<double, double> trig_derivative(int k, double x) {
  const double c = std::cos(x), s = std::sin(x);
  switch (k % 4) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

// k-th derivative of t -> coeff * t.
double linear_derivative(int k, double coeff, double s) {
  if (k == 0) return coeff * s;
  if (k == 1) return coeff;
  return 0.0;
}

[[noreturn]] void invalid(const std::string& why) { throw GeometryError(ErrorKind::SpecInvalid, why); }

void require_finite(std::initializer_list<std::pair<const char*, double>> values) {
  for (const auto& [name, v] : values) {
    if (!std::isfinite(v)) invalid(std::string("parameter ") + name + " is not finite");
  }
}

Interval checked_domain(const std::optional<Interval>& d) {
  if (!d) return default_domain();
  if (!std::isfinite(d->lo) || !std::isfinite(d->hi) || !(d->lo < d->hi)) invalid("domain must satisfy lo < hi");
  return *d;
}

void check_speed(double speed_sq, const BuildOptions& options, const char* family) {
  if (options.require_unit_speed && std::abs(speed_sq - 1.0) > options.unit_speed_tol) {
    std::ostringstream os;
    os << family << " is not unit-speed: squared speed " << speed_sq;
    invalid(os.str());
  }
}

CurveDefinition build(const PaperExampleSpec& spec, const BuildOptions&) {
  return CurveDefinition("paper_example", checked_domain(spec.domain),
                         [](double s, int k) {
                           const double scale = std::pow(0.5, k);
                           const auto [c, sn] = trig_derivative(k, 0.5 * s);
                           const double lin = linear_derivative(k, 0.5, s);
                           return Vec4(scale * (c - sn), scale * (c + sn), lin, lin);
                         },
                         Provenance::Analytic, kMaxDerivativeOrder);
}

CurveDefinition build(const Circular4Spec& spec, const BuildOptions& options) {
  require_finite({{"A", spec.A}, {"omega", spec.omega}, {"B", spec.B}, {"C", spec.C}});
  check_speed(spec.A * spec.A * spec.omega * spec.omega + spec.B * spec.B + spec.C * spec.C, options, "circular4");
  return CurveDefinition("circular4", checked_domain(spec.domain),
                         [spec](double s, int k) {
                           const auto [c, sn] = trig_derivative(k, spec.omega * s);
                           const double amp = spec.A * std::pow(spec.omega, k);
                           return Vec4(amp * c, amp * sn, linear_derivative(k, spec.B, s),
                                       linear_derivative(k, spec.C, s));
                         },
                         Provenance::Analytic, kMaxDerivativeOrder);
}

CurveDefinition build(const DoubleHelixSpec& spec, const BuildOptions& options) {
  require_finite({{"a", spec.a}, {"p", spec.p}, {"b", spec.b}, {"q", spec.q}});
  check_speed(spec.a * spec.a * spec.p * spec.p + spec.b * spec.b * spec.q * spec.q, options, "double_helix");
  return CurveDefinition("double_helix", checked_domain(spec.domain),
                         [spec](double s, int k) {
                           const auto [c1, s1] = trig_derivative(k, spec.p * s);
                           const auto [c2, s2] = trig_derivative(k, spec.q * s);
                           const double amp1 = spec.a * std::pow(spec.p, k);
                           const double amp2 = spec.b * std::pow(spec.q, k);
                           return Vec4(amp1 * c1, amp1 * s1, amp2 * c2, amp2 * s2);
                         },
                         Provenance::Analytic, kMaxDerivativeOrder);
}

CurveDefinition build(const SamplesSpec& spec, const BuildOptions&) {
  const std::size_t n = spec.s.size();
  if (n != spec.points.size()) invalid("samples: s and points differ in length");
  if (n < 11) invalid("samples: at least 11 points are required");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(spec.s[i]) || !spec.points[i].allFinite()) invalid("samples: non-finite value");
    if (i > 0 && !(spec.s[i] > spec.s[i - 1])) invalid("samples: s must be strictly increasing");
  }
  std::vector<CubicSpline> splines;
  splines.reserve(4);
  for (int j = 0; j < 4; ++j) {
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = spec.points[i][j];
    splines.emplace_back(spec.s, y);
  }
  const Interval domain{spec.s.front(), spec.s.back()};
  CurveDefinition curve("samples", domain,
                        [splines = std::move(splines)](double s, int k) {
                          return Vec4(splines[0].eval(s, k), splines[1].eval(s, k), splines[2].eval(s, k),
                                      splines[3].eval(s, k));
                        },
                        Provenance::Sampled, 3);
  return curve;
}

}  // namespace

// Sampled curves differentiate the spline position for orders 4 and 5 with a
// step of four mean sample spacings. These orders are low accuracy.
CurveDefinition build_curve(const CurveSpec& spec, const BuildOptions& options) {
  CurveDefinition curve = std::visit([&](const auto& s) { return build(s, options); }, spec);
  if (const auto* samples = std::get_if<SamplesSpec>(&spec)) {
    const double spacing = (samples->s.back() - samples->s.front()) / static_cast<double>(samples->s.size() - 1);
    return curve.with_fallback(0, 4.0 * spacing);
  }
  return curve;
}

// ---- JSON ------------------------------------------------------------------------

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) invalid("unknown field \"" + key + "\"");
  }
}

double number(const json& j, const char* key) {
  if (!j.contains(key)) invalid(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number()) invalid(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

std::optional<Interval> optional_domain(const json& j) {
  if (!j.contains("domain")) return std::nullopt;
  const json& d = j.at("domain");
  if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number())
    invalid("field \"domain\" must be [lo, hi]");
  return Interval{d[0].get<double>(), d[1].get<double>()};
}

}  // namespace

CurveSpec parse_curve_spec(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    invalid("curve spec must be an object with a string \"type\"");
  const std::string type = j.at("type").get<std::string>();
  if (type == "paper_example") {
    reject_unknown(j, {"type", "domain"});
    return PaperExampleSpec{optional_domain(j)};
  }
  if (type == "circular4") {
    reject_unknown(j, {"type", "A", "omega", "B", "C", "domain"});
    return Circular4Spec{number(j, "A"), number(j, "omega"), number(j, "B"), number(j, "C"), optional_domain(j)};
  }
  if (type == "double_helix") {
    reject_unknown(j, {"type", "a", "p", "b", "q", "domain"});
    return DoubleHelixSpec{number(j, "a"), number(j, "p"), number(j, "b"), number(j, "q"), optional_domain(j)};
  }
  if (type == "samples") {
    reject_unknown(j, {"type", "s", "points"});
    if (!j.contains("s") || !j.contains("points") || !j.at("s").is_array() || !j.at("points").is_array())
      invalid("samples needs arrays \"s\" and \"points\"");
    SamplesSpec spec;
    for (const auto& v : j.at("s")) {
      if (!v.is_number()) invalid("samples: s entries must be numbers");
      spec.s.push_back(v.get<double>());
    }
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 4) invalid("samples: each point must have 4 coordinates");
      Vec4 v;
      for (int k = 0; k < 4; ++k) {
        if (!p[k].is_number()) invalid("samples: coordinates must be numbers");
        v[k] = p[k].get<double>();
      }
      spec.points.push_back(v);
    }
    return spec;
  }
  invalid("unknown curve type \"" + type + "\"");
}

CurveSpec load_curve_spec(const std::string& name_or_path) {
  if (name_or_path == "paper_example") return PaperExampleSpec{};
  if (name_or_path == "circular4") return default_circular4();
  if (name_or_path == "double_helix") return default_double_helix();
  std::ifstream in(name_or_path);
  if (!in) invalid("cannot open curve spec \"" + name_or_path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_curve_spec(buffer.str());
}

// ---- utilities -------------------------------------------------------------------

UnitSpeedReport is_unit_speed(const CurveDefinition& curve, std::span<const double> grid, double tol) {
  UnitSpeedReport report{true, 0.0};
  for (double s : grid) {
    const double dev = std::abs(curve.eval(s, 1).norm() - 1.0);
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  report.unit_speed = report.max_deviation <= tol;
  return report;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    g[i] = (i + 1 == n) ? hi : lo + t * (hi - lo);
  }
  return g;
}

}  // namespace quatcurve
