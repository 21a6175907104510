#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "quatcurve/errors.hpp"
#include "quatcurve/involute.hpp"

using namespace quatcurve;

namespace {

constexpr double kPi = std::numbers::pi;
const double kR2 = std::sqrt(2.0);

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no GeometryError thrown";
  return ErrorKind::SpecInvalid;
}

Vec4 aligned(const Vec4& v, const Vec4& ref) { return v.dot(ref) < 0 ? Vec4(-v) : v; }

}  // namespace

TEST(Involute, ExampleClosedForm) {
  const CurveDefinition x = build_curve(PaperExampleSpec{});
  for (double c : {-1.0, 4.0, 9.5}) {
    const CurveDefinition phi = involute_curve(x, {c, 1e-3});
    for (double s : uniform_grid(0, 4 * kPi, 40)) {
      const double cs = std::cos(s / 2), sn = std::sin(s / 2);
      const Vec4 want =
          Vec4((2 - c + s) * cs + (-2 - c + s) * sn, (2 + c - s) * cs + (2 - c + s) * sn, c, c) / 2;
      EXPECT_LT((phi.position(s) - want).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Involute, DistanceLawAtRandomPoints) {
  const CurveDefinition x = build_curve(default_double_helix());
  const double c = 5.0;
  const CurveDefinition phi = involute_curve(x, default_involute_params(x, c));
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> u(0, 4 * kPi);
  for (int i = 0; i < 100; ++i) {
    const double s = u(gen);
    EXPECT_NEAR((phi.position(s) - x.position(s)).norm(), std::abs(c - s), 1e-12);
  }
  // At s = c the involute touches the evolute.
  EXPECT_LT((phi.position(c) - x.position(c)).norm(), 1e-15);
}

TEST(Involute, ShiftedDerivativesMatchDifferences) {
  const CurveDefinition x = build_curve(default_circular4());
  const CurveDefinition phi = involute_curve(x, {3.0, 1e-3});
  const auto pos = [&](double t) { return phi.position(t); };
  for (int order = 1; order <= 4; ++order) {
    EXPECT_LT((fd_derivative(pos, 6.0, order, 0.02) - phi.eval(6.0, order)).norm(), 1e-5) << order;
  }
  // Order 5 is a difference of the analytic order 4.
  EXPECT_LT((phi.eval(6.0, 5) - fd_derivative([&](double t) { return phi.eval(t, 4); }, 6.0, 1, 1e-3)).norm(), 1e-6);
}

TEST(Involute, DomainHandling) {
  const CurveDefinition x = build_curve(PaperExampleSpec{});
  const CurveDefinition inside = involute_curve(x, {4.0, 1e-3});
  ASSERT_TRUE(inside.excluded().has_value());
  EXPECT_FALSE(inside.admits(4.0));
  EXPECT_TRUE(inside.admits(4.01));
  const CurveDefinition outside = involute_curve(x, {-5.0, 1e-3});
  EXPECT_FALSE(outside.excluded().has_value());
  EXPECT_EQ(kind_of([&] { involute_curve(x, {1.0, 100.0}); }), ErrorKind::EmptyDomain);
  EXPECT_EQ(kind_of([&] { involute_curve(x, {1.0, 0.0}); }), ErrorKind::SpecInvalid);
  const CurveDefinition slow = build_curve(Circular4Spec{1, 2, 0.5, 0.5, std::nullopt});
  EXPECT_EQ(kind_of([&] { involute_curve(slow, {1.0, 1e-3}); }), ErrorKind::NotUnitSpeed);
}

TEST(Involute, DefinitionCheck) {
  const CurveDefinition x = build_curve(PaperExampleSpec{});
  const auto grid = uniform_grid(0, 4 * kPi, 200);
  EXPECT_LT(check_involute_definition(x, involute_curve(x, {4.0, 1e-3}), grid), 1e-8);
  EXPECT_NEAR(check_involute_definition(x, x, grid), 1.0, 1e-12);
  const CurveDefinition h = build_curve(default_double_helix());
  EXPECT_LT(check_involute_definition(h, involute_curve(h, {2.0, 1e-3}), grid), 1e-6);
}

TEST(Involute, ExamplePredictedCurvatures) {
  const CurveDefinition x = build_curve(PaperExampleSpec{});
  const InvoluteParams p = default_involute_params(x, 4.0);
  for (double s : {1.0, 2.5, 7.0}) {
    const PredictedInvoluteCurvatures pc = predicted_involute_curvatures(x, p, s);
    EXPECT_NEAR(pc.kappa_phi, kR2 / std::abs(4.0 - s), 1e-12);
    EXPECT_NEAR(pc.k_star, 0.0, 1e-9);
    // The direct involute curvature agrees.
    EXPECT_NEAR(tangent_normal(involute_curve(x, p), s).kappa, pc.kappa_phi, 1e-12);
  }
  // B and E of the involute are 0/0 on the general path.
  EXPECT_EQ(kind_of([&] { predicted_involute_apparatus(x, p, 1.0); }), ErrorKind::HigherFrameIndeterminate);
  EXPECT_EQ(kind_of([&] { predicted_involute_apparatus(x, p, 4.0 + 1e-5); }), ErrorKind::InvoluteSingular);
}

TEST(Involute, PredictionMatchesDirectOnDoubleHelix) {
  const CurveDefinition x = build_curve(default_double_helix());
  const InvoluteParams p = default_involute_params(x, 2 * kPi);
  const CurveDefinition phi = involute_curve(x, p);
  for (double s : {0.5, 3.0, 8.0, 11.0}) {
    const PredictedInvoluteApparatus pr = predicted_involute_apparatus(x, p, s);
    const FrenetFrame4 d = frenet_apparatus(phi, s);
    EXPECT_LT((aligned(d.T, pr.T_phi) - pr.T_phi).norm(), 1e-9);
    EXPECT_LT((aligned(d.N, pr.N_phi) - pr.N_phi).norm(), 1e-9);
    EXPECT_LT((aligned(d.B, pr.B_phi) - pr.B_phi).norm(), 1e-8);
    EXPECT_LT((aligned(d.E, pr.E_phi) - pr.E_phi).norm(), 1e-8);
    EXPECT_NEAR(pr.kappa_phi / d.kappa, 1.0, 1e-10);
    EXPECT_NEAR(pr.k_star / d.k, 1.0, 1e-8);
    // The single-power closed form is off by sqrt(kappa^2 + k^2).
    const FrenetFrame4 fx = frenet_apparatus(x, s);
    EXPECT_NEAR(pr.k_star_as_printed / pr.k_star, std::hypot(fx.kappa, fx.k), 1e-10);
  }
}

TEST(Involute, WCurveFrame) {
  const CurveDefinition x = build_curve(PaperExampleSpec{});
  const FrenetFrame4 f = frenet_apparatus(x, 0.0);
  const InvoluteFrame w = wcurve_involute_frame(f, 1);
  EXPECT_TRUE(w.T.isApprox(Vec4(-1, -1, 0, 0) / kR2, 1e-14));
  EXPECT_TRUE(w.B.isApprox(Vec4(0, 0, -1, 1) / kR2, 1e-14));
  // kappa = k: N_phi = (-T + B) / sqrt2.
  EXPECT_TRUE(w.N.isApprox((-f.T + f.B) / kR2, 1e-14));
  const InvoluteFrame w2 = wcurve_involute_frame(f, -1);
  EXPECT_TRUE(w2.B.isApprox(-w.B));
  EXPECT_TRUE(w2.E.isApprox(-w.E));
  FrenetFrame4 flat = f;
  flat.kappa = flat.k = 0;
  EXPECT_EQ(kind_of([&] { wcurve_involute_frame(flat); }), ErrorKind::CurvatureZero);
}

TEST(Evolute, PositionFromInvolute) {
  const CurveDefinition x = build_curve(default_double_helix());
  const double c = 4 * kPi;
  const CurveDefinition phi = involute_curve(x, default_involute_params(x, c));
  for (double s : {0.5, 4.0, 9.0}) {
    const FrenetFrame4 fx = frenet_apparatus(x, s);
    FrenetFrame4 f = frenet_apparatus(phi, s);
    const InvoluteFrame w = wcurve_involute_frame(fx, 1);
    f.B = aligned(f.B, w.B);
    f.E = aligned(f.E, w.E);
    EXPECT_LT((evolute_position_from_involute(f, fx.k, fx.kappa, 1) - x.position(s)).norm(), 1e-12);
    EXPECT_GT((evolute_position_from_involute(f, fx.k, fx.kappa, -1) - x.position(s)).norm(), 1.0);
    const EvoluteOffsetCoefficients co = evolute_offset_coefficients(f, x.position(s));
    EXPECT_NEAR(co.along_N, 1 / f.kappa, 1e-12);
    EXPECT_NEAR(co.mu, 0.0, 1e-12);
    EXPECT_NEAR(co.gamma, -fx.k / (f.kappa * fx.kappa), 1e-12);
  }
  FrenetFrame4 f = frenet_apparatus(phi, 1.0);
  const Vec4 no_e = evolute_position_from_involute(f, 0.0, 1.0, 1);
  EXPECT_LT((no_e - f.position - f.N / f.kappa).norm(), 1e-14);
  f.kappa = 0;
  EXPECT_EQ(kind_of([&] { evolute_position_from_involute(f, 1.0, 1.0, 1); }), ErrorKind::CurvatureZero);
}

TEST(Evolute, ApparatusClosedForms) {
  FrenetFrame4 f;
  f.T = Vec4(1, 0, 0, 0);
  f.N = Vec4(0, 1, 0, 0);
  f.B = Vec4(0, 0, 1, 0);
  f.E = Vec4(0, 0, 0, 1);
  f.kappa = 2.0;
  f.k = 0.5;
  f.bitorsion = 0.0;
  f.eta = 1;
  EvoluteApparatus a = evolute_apparatus_from_involute(f);
  EXPECT_EQ(a.T, f.B);
  EXPECT_TRUE(a.N.isApprox(-f.N));
  EXPECT_TRUE(a.E.isApprox(f.E));
  EXPECT_TRUE(a.B.isApprox(0.5 * f.T));
  EXPECT_NEAR(a.kappa, 2.0 * 0.125 / (0.5 * 0.25), 1e-14);
  EXPECT_NEAR(a.k, 4.0 * 0.5 / 0.25, 1e-14);
  EXPECT_EQ(a.bitorsion, 0.0);

  f.k = 0;
  EXPECT_EQ(kind_of([&] { evolute_apparatus_from_involute(f); }), ErrorKind::HigherFrameIndeterminate);
  f.bitorsion = 1.0;
  EXPECT_EQ(kind_of([&] { evolute_apparatus_from_involute(f); }), ErrorKind::DenominatorZero);
  f.k = 1.0;
  f.bitorsion = -0.5;  // q^2 + kappa b* = 1.25 - 1.25
  f.kappa = 2.5;
  EXPECT_EQ(kind_of([&] { evolute_apparatus_from_involute(f); }), ErrorKind::DenominatorZero);
}
