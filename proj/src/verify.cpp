#include "quatcurve/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "quatcurve/curve.hpp"
#include "quatcurve/errors.hpp"
#include "quatcurve/frenet.hpp"
#include "quatcurve/involute.hpp"
#include "quatcurve/io.hpp"
#include "quatcurve/spatial.hpp"

namespace quatcurve {

namespace {

constexpr double kPi = std::numbers::pi;
const double kRoot2 = std::sqrt(2.0);

class Recorder {
 public:
  Recorder(VerifyReport& report, std::optional<double> tol) : report_(report), tol_(tol) {}

  void add(std::string id, std::string description, double residual, double tolerance, std::string grid,
           bool gated = true) {
    CheckResult c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.max_residual = residual;
    c.tolerance = tol_.value_or(tolerance);
    c.pass = std::isfinite(residual) && residual <= c.tolerance;
    c.gated = gated;
    c.grid = std::move(grid);
    report_.checks.push_back(std::move(c));
  }

 private:
  VerifyReport& report_;
  std::optional<double> tol_;
};

std::string grid_text(const std::string& curve, double lo, double hi, std::size_t n) {
  std::ostringstream os;
  os << curve << " s in [" << format_double(lo) << ", " << format_double(hi) << "], " << n << " points";
  return os.str();
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double max_component(const Vec4& v) { return v.cwiseAbs().maxCoeff(); }

Vec4 aligned(const Vec4& v, const Vec4& ref) { return v.dot(ref) < 0.0 ? Vec4(-v) : v; }

// ---- algebra ---------------------------------------------------------------------

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : gen_(seed) {}
  double operator()() { return 2.0 * static_cast<double>(gen_() >> 11) * 0x1.0p-53 - 1.0; }
  Quaternion quaternion() { return {(*this)(), (*this)(), (*this)(), (*this)()}; }

 private:
  std::mt19937_64 gen_;
};

double qdiff(const Quaternion& p, const Quaternion& q) { return (p.to_vec4() - q.to_vec4()).cwiseAbs().maxCoeff(); }

void algebra_suite(Recorder& rec) {
  Uniform rnd(20240917);
  double assoc = 0, norm_mult = 0, conj_anti = 0, hdot = 0, spatial = 0, split = 0;
  constexpr int kTrials = 1000;
  for (int i = 0; i < kTrials; ++i) {
    const Quaternion p = rnd.quaternion(), q = rnd.quaternion(), r = rnd.quaternion();
    assoc = std::max(assoc, qdiff(qmul(qmul(p, q), r), qmul(p, qmul(q, r))));
    norm_mult = std::max(norm_mult, std::abs(qnorm(qmul(p, q)) - qnorm(p) * qnorm(q)));
    conj_anti = std::max(conj_anti, qdiff(conjugate(qmul(p, q)), qmul(conjugate(q), conjugate(p))));
    hdot = std::max(hdot, std::abs(hform(p, q) - p.to_vec4().dot(q.to_vec4())));

    const Quaternion ps(0.0, p.vector()), qs(0.0, q.vector());
    const Quaternion expected(-hform(ps, qs), ps.vector().cross(qs.vector()));
    spatial = std::max(spatial, qdiff(qmul(ps, qs), expected));

    const Quaternion halves = 0.5 * (p + conjugate(p)) + 0.5 * (p - conjugate(p));
    split = std::max(split, qdiff(halves, p));
  }
  const std::string grid = "1000 random quaternion triples, seed 20240917";
  rec.add("algebra.associativity", "(pq)r = p(qr)", assoc, 1e-12, grid);
  rec.add("algebra.norm_multiplicative", "|pq| = |p||q|", norm_mult, 1e-12, grid);
  rec.add("algebra.conjugate_antihomomorphism", "conj(pq) = conj(q) conj(p)", conj_anti, 1e-12, grid);
  rec.add("algebra.hform_dot", "h(p, q) equals the Euclidean dot product", hdot, 1e-12, grid);
  rec.add("algebra.spatial_product", "spatial p q = -h(p, q) + p x q", spatial,
          4.0 * std::numeric_limits<double>::epsilon(), grid);
  rec.add("algebra.scalar_vector_split", "q = (q + conj q)/2 + (q - conj q)/2", split, 0.0, grid);
}

// ---- frenet ----------------------------------------------------------------------

struct ExampleFrame {
  Vec4 T, N, B, E;
};

// Frame vectors of the example curve in the closed form given with it.
ExampleFrame example_frame_closed_form(double s) {
  const double c = std::cos(0.5 * s), sn = std::sin(0.5 * s);
  return {0.5 * Vec4(-sn - c, -sn + c, 1.0, 1.0), Vec4(-c + sn, -c - sn, 0.0, 0.0) / kRoot2,
          0.5 * Vec4(-c - sn, c - sn, -1.0, 1.0), Vec4(0.0, 0.0, 1.0, -1.0) / kRoot2};
}

// Unit vector orthogonal to the closed-form T, N, E, oriented so that
// det(T, N, B, E) = +1 with the closed-form orientation.
Vec4 example_binormal_completion(double s) {
  const double c = std::cos(0.5 * s), sn = std::sin(0.5 * s);
  return 0.5 * Vec4(sn + c, sn - c, 1.0, 1.0);
}

void frenet_suite(Recorder& rec, bool corrupt_eta) {
  const CurveDefinition example = build_curve(PaperExampleSpec{});
  const double hi = 4.0 * kPi;
  const auto grid = uniform_grid(0.0, hi, 512);
  const std::string g = grid_text("paper_example", 0.0, hi, grid.size());

  double curv = 0, dT = 0, dN = 0, dB = 0, dE = 0, dBc = 0;
  for (double s : grid) {
    const FrenetFrame4 f = frenet_apparatus(example, s);
    curv = std::max({curv, std::abs(f.kappa - kRoot2 / 4), std::abs(f.k - kRoot2 / 4), std::abs(f.bitorsion)});
    const ExampleFrame p = example_frame_closed_form(s);
    dT = std::max(dT, max_component(aligned(f.T, p.T) - p.T));
    dN = std::max(dN, max_component(aligned(f.N, p.N) - p.N));
    dB = std::max(dB, max_component(aligned(f.B, p.B) - p.B));
    dE = std::max(dE, max_component(aligned(f.E, p.E) - p.E));
    const Vec4 bc = example_binormal_completion(s);
    dBc = std::max(dBc, max_component(aligned(f.B, bc) - bc));
  }
  rec.add("frenet.example_curvatures", "example curve: kappa = k = sqrt2/4, bitorsion = 0", curv, 1e-9, g);
  rec.add("frenet.example_T", "example curve: T matches its closed form", dT, 1e-9, g);
  rec.add("frenet.example_N", "example curve: N matches its closed form", dN, 1e-9, g);
  rec.add("frenet.example_E", "example curve: E matches its closed form up to sign", dE, 1e-9, g);
  rec.add("frenet.example_B_printed",
          "example curve: B against the reference closed form, which is not orthogonal to T", dB, 1e-9, g, false);
  rec.add("frenet.example_B_completion", "example curve: B matches the unit completion of T, N, E", dBc, 1e-9, g);

  // Orthonormality and orientation on every built-in family.
  const std::vector<std::pair<std::string, CurveDefinition>> families{
      {"paper_example", example},
      {"circular4", build_curve(default_circular4())},
      {"double_helix", build_curve(default_double_helix())}};
  double ortho = 0, det = 0;
  for (const auto& [name, curve] : families) {
    for (double s : uniform_grid(0.0, hi, 256)) {
      FrenetFrame4 f = frenet_apparatus(curve, s);
      if (corrupt_eta) {
        f.E = -f.E;
        f.eta = -f.eta;
      }
      ortho = std::max(ortho, orthonormality_defect(f));
      det = std::max(det, std::abs(frame_determinant(f) - 1.0));
    }
  }
  const std::string gf = "paper_example, circular4, double_helix; s in [0, 4pi], 256 points each";
  rec.add("frenet.orthonormality", "h(V_i, V_j) = delta_ij for the four frame vectors", ortho, 1e-9, gf);
  rec.add("frenet.determinant", "det(T, N, B, E) = +1", det, 1e-9, gf);

  // Frenet equations by central differences of the frame field.
  const std::vector<double> steps{1e-3, 5e-4, 2.5e-4, 1.25e-4, 1e-4};
  double worst_residual = 0.0;
  double worst_order = std::numeric_limits<double>::infinity();
  for (const auto& [name, curve] : {families[0], families[2]}) {
    for (double s : uniform_grid(0.5, hi - 0.5, 16)) {
      std::vector<double> r;
      for (double h : steps) r.push_back(serret_frenet_residual(curve, s, h).max());
      worst_residual = std::max(worst_residual, r.back());
      for (std::size_t i = 0; i + 2 < steps.size(); ++i) {
        if (r[i + 1] < 1e-11) continue;  // rounding floor, no slope information
        worst_order = std::min(worst_order, std::log(r[i] / r[i + 1]) / std::log(steps[i] / steps[i + 1]));
      }
    }
  }
  const std::string go = "paper_example, double_helix; 16 points in [0.5, 4pi - 0.5]; h = 1e-3 ... 1e-4";
  rec.add("frenet.ode_residual", "Frenet equation residual at h = 1e-4", worst_residual, 1e-6, go);
  rec.add("frenet.ode_order", "2 - observed convergence order of the residual (<= 0.05 accepted)",
          std::isfinite(worst_order) ? std::max(0.0, 2.0 - worst_order) : 0.0, 0.05, go);
}

// ---- involute --------------------------------------------------------------------

Vec4 example_involute_closed_form(double s, double c) {
  const double cs = std::cos(0.5 * s), sn = std::sin(0.5 * s);
  return 0.5 * Vec4((2 - c + s) * cs + (-2 - c + s) * sn, (2 + c - s) * cs + (2 - c + s) * sn, c, c);
}

void involute_suite(Recorder& rec) {
  const CurveDefinition example = build_curve(PaperExampleSpec{});
  {
    const double c = 4.0;
    const CurveDefinition inv = involute_curve(example, {c, 1e-3});
    const auto grid = uniform_grid(0.0, 2.0 * kPi, 512);
    double closed = 0;
    for (double s : grid) {
      if (!inv.admits(s)) continue;
      closed = std::max(closed, max_component(inv.position(s) - example_involute_closed_form(s, c)));
    }
    rec.add("involute.example_closed_form", "example involute with c = 4 matches its closed form", closed, 1e-9,
            grid_text("paper_example", 0.0, 2.0 * kPi, grid.size()) + ", |s - 4| >= 1e-3");
  }

  const std::vector<std::pair<std::string, CurveDefinition>> families{
      {"paper_example", example},
      {"circular4", build_curve(default_circular4())},
      {"double_helix", build_curve(default_double_helix())}};
  double dist = 0, tang = 0, speed = 0;
  for (const auto& [name, curve] : families) {
    const double c = 2.0 * kPi;
    const InvoluteParams params = default_involute_params(curve, c);
    const CurveDefinition inv = involute_curve(curve, params);
    const auto grid = uniform_grid(0.0, 4.0 * kPi, 512);
    for (double s : grid) {
      if (!inv.admits(s)) continue;
      dist = std::max(dist, std::abs((inv.position(s) - curve.position(s)).norm() - std::abs(c - s)));
      const FrenetFrame4 fx = frenet_apparatus(curve, s);
      speed = std::max(speed, std::abs(inv.eval(s, 1).norm() - fx.kappa * std::abs(c - s)));
    }
    tang = std::max(tang, check_involute_definition(curve, inv, grid));
  }
  const std::string gb = "paper_example, circular4, double_helix; c = 2pi; s in [0, 4pi], 512 points";
  rec.add("involute.distance", "|phi - x| = |c - s|", dist, 1e-9, gb);
  rec.add("involute.tangency", "h(T_phi, T_x) = 0", tang, 1e-6, gb);
  rec.add("involute.speed_law", "|phi'| = kappa |c - s|", speed, 1e-8, gb);

  // Predicted apparatus against the direct frame of the constructed involute.
  const CurveDefinition helix = families[2].second;
  const double c = 2.0 * kPi;
  const InvoluteParams params = default_involute_params(helix, c);
  const CurveDefinition inv = involute_curve(helix, params);
  const auto grid = uniform_grid(0.05, 4.0 * kPi - 0.05, 128);
  double frame = 0, kap = 0, kstar = 0, kprinted = 0, bitors_err = 0, wframe = 0;
  for (double s : grid) {
    if (!inv.admits(s)) continue;
    const PredictedInvoluteApparatus p = predicted_involute_apparatus(helix, params, s);
    const FrenetFrame4 d = frenet_apparatus(inv, s);
    frame = std::max({frame, max_component(aligned(d.T, p.T_phi) - p.T_phi),
                      max_component(aligned(d.N, p.N_phi) - p.N_phi), max_component(aligned(d.B, p.B_phi) - p.B_phi),
                      max_component(aligned(d.E, p.E_phi) - p.E_phi)});
    kap = std::max(kap, rel(p.kappa_phi, d.kappa));
    kstar = std::max(kstar, rel(p.k_star, d.k));
    kprinted = std::max(kprinted, rel(p.k_star_as_printed, d.k));
    bitors_err = std::max(bitors_err, rel(p.bitorsion_star, d.bitorsion));

    const InvoluteFrame w = wcurve_involute_frame(frenet_apparatus(helix, s), p.eta);
    for (int i = 0; i < 4; ++i) {
      const Vec4& pv = i == 0 ? p.T_phi : i == 1 ? p.N_phi : i == 2 ? p.B_phi : p.E_phi;
      wframe = std::max(wframe, max_component(aligned(w.vector(i), pv) - pv));
    }
  }
  const std::string gp = grid_text("double_helix", 0.05, 4.0 * kPi - 0.05, grid.size()) + ", c = 2pi";
  rec.add("involute.predicted_frame", "predicted T, N, B, E of the involute match the direct frame", frame, 1e-5, gp);
  rec.add("involute.predicted_kappa", "predicted kappa_phi, relative error", kap, 1e-4, gp);
  rec.add("involute.predicted_k", "predicted second curvature, relative error", kstar, 1e-4, gp);
  rec.add("involute.predicted_k_printed",
          "reference second-curvature closed form (missing one power of sqrt(kappa^2 + k^2))", kprinted, 1e-4, gp,
          false);
  rec.add("involute.predicted_bitorsion_printed", "reference bitorsion quotient against the direct bitorsion", bitors_err,
          1e-4, gp, false);
  rec.add("involute.wcurve_vs_predicted", "w-curve involute frame matches the general prediction", wframe, 1e-8, gp);

  // w-curve frame against the direct involute frame. circular4 has k* = 0, so
  // only T and N are direct there; B and E are checked for completing them.
  double wc = 0;
  for (const auto& [name, curve] : {families[1], families[2]}) {
    const InvoluteParams pr = default_involute_params(curve, c);
    const CurveDefinition iv = involute_curve(curve, pr);
    for (double s : uniform_grid(0.05, 4.0 * kPi - 0.05, 128)) {
      if (!iv.admits(s)) continue;
      const FrenetFrame4 fx = frenet_apparatus(curve, s);
      const InvoluteFrame w = wcurve_involute_frame(fx, fx.eta);
      const TangentNormal tn = tangent_normal(iv, s);
      const Vec4& T = tn.T;
      const Vec4& N = tn.N;
      wc = std::max({wc, max_component(aligned(w.T, T) - T), max_component(aligned(w.N, N) - N)});
      for (const Vec4* v : {&w.B, &w.E}) wc = std::max({wc, std::abs(v->dot(T)), std::abs(v->dot(N))});
      wc = std::max({wc, std::abs(w.B.dot(w.E)), std::abs(w.B.norm() - 1), std::abs(w.E.norm() - 1)});
      if (name == "double_helix") {
        const FrenetFrame4 d = frenet_apparatus(iv, s);
        wc = std::max({wc, max_component(aligned(w.B, d.B) - d.B), max_component(aligned(w.E, d.E) - d.E)});
      }
    }
  }
  rec.add("involute.wcurve_frame", "w-curve involute frame against the direct involute frame", wc, 1e-8,
          "circular4, double_helix; c = 2pi; s in [0.05, 4pi - 0.05], 128 points");
}

// ---- evolute ---------------------------------------------------------------------

// Involute frame with B and E oriented like the w-curve frame at eta = +1.
FrenetFrame4 wcurve_oriented(const FrenetFrame4& direct, const FrenetFrame4& evolute_frame) {
  const InvoluteFrame w = wcurve_involute_frame(evolute_frame, 1);
  FrenetFrame4 out = direct;
  out.B = aligned(direct.B, w.B);
  out.E = aligned(direct.E, w.E);
  return out;
}

void evolute_suite(Recorder& rec, VerifyReport& report) {
  const CurveDefinition helix = build_curve(default_double_helix());
  const double c = 4.0 * kPi;
  const InvoluteParams params = default_involute_params(helix, c);
  const CurveDefinition inv = involute_curve(helix, params);
  const auto grid = uniform_grid(0.0, c - 0.1, 256);
  const std::string g = grid_text("double_helix", 0.0, c - 0.1, grid.size()) + ", c = 4pi";

  double plus = 0, minus = 0, raw_best = std::numeric_limits<double>::infinity(), mu = 0, gamma = 0;
  double raw_plus = 0, raw_minus = 0;
  double rt_T = 0, rt_curv = 0, rt_T_geom = 0;
  for (double s : grid) {
    const FrenetFrame4 fx = frenet_apparatus(helix, s);
    const FrenetFrame4 direct = frenet_apparatus(inv, s);
    const FrenetFrame4 f = wcurve_oriented(direct, fx);
    const Vec4 target = helix.position(s);
    plus = std::max(plus, (evolute_position_from_involute(f, fx.k, fx.kappa, 1) - target).norm());
    minus = std::max(minus, (evolute_position_from_involute(f, fx.k, fx.kappa, -1) - target).norm());
    raw_plus = std::max(raw_plus, (evolute_position_from_involute(direct, fx.k, fx.kappa, 1) - target).norm());
    raw_minus = std::max(raw_minus, (evolute_position_from_involute(direct, fx.k, fx.kappa, -1) - target).norm());

    const EvoluteOffsetCoefficients co = evolute_offset_coefficients(f, target);
    const double rho = 1.0 / f.kappa;
    mu = std::max(mu, std::abs(co.mu));
    gamma = std::max(gamma, std::abs(co.gamma + rho * fx.k / fx.kappa));

    const EvoluteApparatus ea = evolute_apparatus_from_involute(direct);
    rt_T = std::max(rt_T, max_component(ea.T - direct.B));
    rt_T_geom = std::max(rt_T_geom, max_component(aligned(ea.T, fx.T) - fx.T));
    rt_curv = std::max({rt_curv, rel(ea.kappa, fx.kappa), rel(ea.k, fx.k), rel(ea.bitorsion, fx.bitorsion)});
  }
  raw_best = std::min(raw_plus, raw_minus);

  const double tol = 1e-6;
  SignResolution sign;
  sign.curve = "double_helix";
  sign.residual_plus = plus;
  sign.residual_minus = minus;
  const bool p_ok = plus <= tol, m_ok = minus <= tol;
  sign.resolved = (p_ok != m_ok) ? (p_ok ? 1 : -1) : 0;
  report.sign = sign;

  rec.add("evolute.position_sign", "exactly one sign of the rho N term rebuilds the evolute",
          sign.resolved != 0 ? std::min(plus, minus) : std::numeric_limits<double>::infinity(), tol, g);
  rec.add("evolute.position_raw_frame", "same, with the involute's B and E left as computed (best sign)", raw_best,
          tol, g, false);
  rec.add("evolute.mu", "h(B_phi, x - phi) = 0", mu, tol, g);
  rec.add("evolute.gamma", "h(E_phi, x - phi) = -rho k / kappa_x", gamma, tol, g);
  rec.add("evolute.roundtrip_T", "returned T_x equals B_phi", rt_T, tol, g);
  rec.add("evolute.roundtrip_T_geometric", "returned T_x against the evolute's actual tangent", rt_T_geom, tol, g,
          false);
  rec.add("evolute.roundtrip_curvatures", "returned kappa, k, bitorsion against the evolute's constants", rt_curv,
          1e-4, g, false);
}

// ---- spatial ---------------------------------------------------------------------

void spatial_suite(Recorder& rec) {
  const CurveDefinition example = build_curve(PaperExampleSpec{});
  const std::vector<std::pair<std::string, CurveDefinition>> families{
      {"paper_example", example},
      {"circular4", build_curve(default_circular4())},
      {"double_helix", build_curve(default_double_helix())}};
  double ident = 0, props = 0;
  for (const auto& [name, curve] : families) {
    for (double s : uniform_grid(0.0, 4.0 * kPi, 256)) {
      const FrenetFrame4 f = frenet_apparatus(curve, s);
      const SpatialFrame sf = spatial_frame(f);
      const Quaternion T = Quaternion::from_vec4(f.T);
      ident = std::max({ident, max_component(qmul(Quaternion(0.0, sf.t), T).to_vec4() - f.N),
                        max_component(qmul(Quaternion(0.0, sf.n), T).to_vec4() - f.B),
                        max_component(qmul(Quaternion(0.0, sf.b), T).to_vec4() - f.E)});
      props = std::max({props, std::abs(sf.t.norm() - 1), std::abs(sf.n.norm() - 1), std::abs(sf.b.norm() - 1),
                        std::abs(sf.t.dot(sf.n)), std::abs(sf.t.dot(sf.b)), std::abs(sf.n.dot(sf.b))});
    }
  }
  const std::string gf = "paper_example, circular4, double_helix; s in [0, 4pi], 256 points each";
  rec.add("spatial.reconstruction", "t T = N, n T = B, b T = E", ident, 1e-9, gf);
  rec.add("spatial.orthonormal", "t, n, b unit and mutually orthogonal", props, 1e-9, gf);

  double curv = 0;
  for (double s : uniform_grid(0.0, 4.0 * kPi, 64)) {
    const SpatialFrame sf = spatial_frame(frenet_apparatus(example, s));
    curv = std::max({curv, std::abs(sf.k - kRoot2 / 4), std::abs(sf.r - kRoot2 / 4)});
  }
  rec.add("spatial.example_curvatures", "example curve: spatial k = r = sqrt2/4", curv, 1e-9,
          grid_text("paper_example", 0.0, 4.0 * kPi, 64));

  const auto grid = uniform_grid(0.0, 2.0 * kPi, 512);
  const std::vector<Vec3> alpha = associated_spatial_curve(example, grid, Vec3(0.0, kRoot2, 0.0));
  std::vector<Vec3> closed;
  for (double s : grid) closed.push_back(Vec3(s, 2 * std::cos(0.5 * s), 2 * std::sin(0.5 * s)) / kRoot2);
  const RigidAlignment fit = align_rigid(alpha, closed);
  const std::string ga = grid_text("paper_example", 0.0, 2.0 * kPi, grid.size());
  rec.add("spatial.example_alpha", "integrated spatial curve matches its closed form after rigid alignment",
          fit.max_deviation, 1e-5, ga);
  double menger = 0;
  for (double m : menger_curvature(alpha)) menger = std::max(menger, std::abs(m - kRoot2 / 4));
  rec.add("spatial.example_alpha_curvature", "discrete curvature of the integrated spatial curve is sqrt2/4", menger,
          1e-4, ga);

  double h_example = 0, n_comp = 0, h_helix = 0;
  {
    const SpatialInvoluteReport r = check_spatial_involute(example, default_involute_params(example, 4.0), grid);
    for (double h : r.h_t_tstar) h_example = std::max(h_example, std::abs(h - 1.0 / kRoot2));
    n_comp = std::max(n_comp, r.max_n_component);
  }
  const CurveDefinition helix = families[2].second;
  const auto hgrid = uniform_grid(0.0, 4.0 * kPi, 256);
  {
    const SpatialInvoluteReport r = check_spatial_involute(helix, default_involute_params(helix, 2.0 * kPi), hgrid);
    h_helix = r.max_deviation;
    n_comp = std::max(n_comp, r.max_n_component);
  }
  rec.add("spatial.involute_h_example", "example pair: h(t, t*) = 1/sqrt2", h_example, 1e-6, ga + ", c = 4");
  rec.add("spatial.involute_h_helix", "double_helix pair: h(t, t*) = kappa / sqrt(kappa^2 + k^2)", h_helix, 1e-6,
          grid_text("double_helix", 0.0, 4.0 * kPi, hgrid.size()) + ", c = 2pi");
  rec.add("spatial.involute_n_component", "<t*, n> = 0 for both pairs", n_comp, 1e-6, "as above");
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  const std::string& suite = options.suite;
  const bool all = suite == "all";
  if (!all && suite != "algebra" && suite != "frenet" && suite != "involute" && suite != "evolute" &&
      suite != "spatial")
    throw std::invalid_argument("unknown suite \"" + suite + "\"");

  VerifyReport report;
  Recorder rec(report, options.tol);
  if (all || suite == "algebra") algebra_suite(rec);
  if (all || suite == "frenet") frenet_suite(rec, options.corrupt_eta);
  if (all || suite == "involute") involute_suite(rec);
  if (all || suite == "evolute") evolute_suite(rec, report);
  if (all || suite == "spatial") spatial_suite(rec);

  report.overall_pass = true;
  for (const CheckResult& c : report.checks) {
    if (c.gated && !c.pass) report.overall_pass = false;
  }
  return report;
}

std::string report_text(const VerifyReport& report) {
  std::ostringstream os;
  for (const CheckResult& c : report.checks) {
    const char* status = c.pass ? "PASS" : (c.gated ? "FAIL" : "INFO");
    os << status << "  " << c.id << "  residual " << format_double(c.max_residual) << "  tol "
       << format_double(c.tolerance) << "  " << c.description << "  [" << c.grid << "]\n";
  }
  if (report.sign) {
    const SignResolution& s = *report.sign;
    os << "rho N sign on " << s.curve << ": ";
    if (s.resolved == 0)
      os << "unresolved";
    else
      os << (s.resolved > 0 ? "+1" : "-1");
    os << " (residual +1: " << format_double(s.residual_plus) << ", -1: " << format_double(s.residual_minus)
       << ")\n";
  }
  os << (report.overall_pass ? "overall: PASS" : "overall: FAIL") << '\n';
  return os.str();
}

std::string report_json(const VerifyReport& report) {
  using nlohmann::ordered_json;
  // Non-finite residuals are written as null.
  const auto num = [](double v) -> ordered_json { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); };
  ordered_json j;
  j["schema"] = 1;
  j["overall_pass"] = report.overall_pass;
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"max_residual", num(c.max_residual)},
                      {"tolerance", num(c.tolerance)},
                      {"pass", c.pass},
                      {"gated", c.gated},
                      {"grid", c.grid}});
  }
  j["checks"] = std::move(checks);
  if (report.sign) {
    j["resolved_sign"] = {{"curve", report.sign->curve},
                          {"sign", report.sign->resolved},
                          {"residual_plus", num(report.sign->residual_plus)},
                          {"residual_minus", num(report.sign->residual_minus)}};
  } else {
    j["resolved_sign"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace quatcurve
