#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "plc/equiv.hpp"
#include "plc/principal_line.hpp"
#include "plc/random.hpp"
#include "plc/synth.hpp"

using namespace plc;
using plc::test::expect_code;

namespace {

Homography random_guarded(rng::CounterRng& rng, const DirectionPair& dir = {}) {
  for (;;) {
    Homography::Entries h;
    for (auto& v : h) v = rng.uniform(-1, 1);
    const Homography H(h);
    if (!failed_guard(H, dir)) return H;
  }
}

DirectionPair random_direction(rng::CounterRng& rng) {
  const double a = rng.uniform(0.1, 1.0) * (rng.uniform() < 0.5 ? -1 : 1);
  const double b = rng.uniform(0.1, 1.0) * (rng.uniform() < 0.5 ? -1 : 1);
  return {a, b};
}

void expect_line(const ProjectiveLine& got, const ProjectiveLine& want, double tol = 1e-15) {
  EXPECT_LE(line_discrepancy(got, want), tol) << "got (" << got.a << ", " << got.b << ", " << got.c << ")";
}

}  // namespace

TEST(FromHomography, WorkedExamples) {
  const PrincipalLine pl = pl_from_homography(test::H_b());
  EXPECT_EQ(pl.method, PlMethod::HomographyForm);
  const double s = std::sqrt(10.0);
  EXPECT_NEAR(pl.line.a, -3 / s, 1e-15);
  EXPECT_NEAR(pl.line.b, 1 / s, 1e-15);
  EXPECT_NEAR(pl.line.c, 1 / s, 1e-15);

  expect_line(pl_from_homography(test::H_c()).line, {1, 0, -0.5});
  expect_line(pl_from_homography(test::H_d()).line, {0, 1, -0.7});
  expect_line(pl_from_homography(test::H_a()).line, {-2, 3, -2.5});
}

TEST(FromHomography, FrontoParallel) {
  expect_code(ErrorCode::FrontoParallel, [] { pl_from_homography(Homography()); });
  expect_code(ErrorCode::FrontoParallel, [] { pl_from_homography(Homography({3, 1, 5, -1, 2, 7, 0, 0, 4})); });
}

TEST(FromHomography, ConstantSignFromCameraGeometry) {
  // Rotation about the pattern x-axis with principal point (cx, 0): the line
  // must be u = cx. Flipping the sign of the constant moves it to u = -cx.
  for (double cx : {0.5, 2.0, -3.0}) {
    PinholeCamera cam;
    cam.cx = cx;
    cam.pose.R = test::exact_rotation_x(0.6, 0.8);
    const Homography H = homography_from_camera(cam);
    const PrincipalLine pl = pl_from_homography(H);
    expect_line(pl.line, {1, 0, -cx}, 1e-14);

    const auto& h = H.entries();
    const double h7 = h[6];
    const double h8 = h[7];
    const double positive_c = ((h[1] * h[1] + h[4] * h[4] - h[0] * h[0] - h[3] * h[3]) * h7 * h8 +
                               (h[0] * h[1] + h[3] * h[4]) * (h7 * h7 - h8 * h8)) /
                              (h7 * h7 + h8 * h8);
    const ProjectiveLine flipped(h[1] * h7 - h[0] * h8, h[4] * h7 - h[3] * h8, positive_c);
    EXPECT_GT(point_line_distance(flipped, cx, 0.0), 0.5);
  }
}

TEST(FromOvps, WorkedExample) {
  const OvpQuad q = ovps_from_columns(test::H_b());
  const PrincipalLine pl = pl_from_ovps(q);
  EXPECT_EQ(pl.method, PlMethod::OvpForm);
  expect_line(pl.line, {-1.5, 0.5, 0.5});
  EXPECT_NEAR(pl.diagnostics.denom_m, 2.5, 1e-15);   // 2 + 0.5 - 1 + 1
  EXPECT_NEAR(pl.diagnostics.denom_n, -5.0 / 6.0, 1e-15);  // 1 + 1.5 - 4/3 - 2
}

TEST(FromOvps, HandEvaluatedConstant) {
  // c = -[(m2-m1)(m1m2-m3m4)/(m1+m2-m3-m4) + (n2-n1)(n1n2-n3n4)/(n1+n2-n3-n4)]
  const double m1 = 2, m2 = 0.5, m3 = 1, m4 = -1;
  const double n1 = 1, n2 = 1.5, n3 = 4.0 / 3.0, n4 = 2;
  const double term_m = (m2 - m1) * (m1 * m2 - m3 * m4) / (m1 + m2 - m3 - m4);
  const double term_n = (n2 - n1) * (n1 * n2 - n3 * n4) / (n1 + n2 - n3 - n4);
  EXPECT_NEAR(term_m, -1.2, 1e-15);
  EXPECT_NEAR(term_n, 0.7, 1e-15);
  const OvpQuad q{{HomogeneousPoint2::finite(m1, n1), HomogeneousPoint2::finite(m2, n2),
                   HomogeneousPoint2::finite(m3, n3), HomogeneousPoint2::finite(m4, n4)},
                  DirectionPair{}};
  expect_line(pl_from_ovps(q).line, {m2 - m1, n2 - n1, -(term_m + term_n)});
}

TEST(FromOvps, Errors) {
  expect_code(ErrorCode::InfiniteVanishingPoint, [] { pl_from_ovps(ovps_from_columns(test::H_a())); });
  expect_code(ErrorCode::DegeneratePL, [] {
    const auto p = HomogeneousPoint2::finite(1, 2);
    pl_from_ovps(OvpQuad{{p, p, HomogeneousPoint2::finite(3, 1), HomogeneousPoint2::finite(0, 4)}, DirectionPair{}});
  });
  // m1 = m2 = m3 = m4: the u-denominator vanishes together with its prefactor
  expect_code(ErrorCode::DegenerateDenominator,
              [] { pl_from_ovps(ovps_from_columns(Homography({1, 2, 0, 0, 1, 0, 1, 2, 1}))); });
}

TEST(InfinitePv1, Examples) {
  const PrincipalLine a = pl_from_ovps_infinite_pv1(1, 0, HomogeneousPoint2::finite(0.5, 4.0 / 3.0));
  EXPECT_EQ(a.method, PlMethod::OvpInfiniteForm);
  expect_line(a.line, {-1, 0, 0.5});
  expect_line(pl_from_ovps_infinite_pv1(0, 1, HomogeneousPoint2::finite(3, 7)).line, {0, -1, 7});
  // direction length and sign are free
  expect_line(pl_from_ovps_infinite_pv1(-4, 0, HomogeneousPoint2::finite(0.5, 2)).line, {1, 0, -0.5});
  expect_code(ErrorCode::PreconditionViolation, [] { pl_from_ovps_infinite_pv1(1, 0, {1, 0, 0}); });
  expect_code(ErrorCode::PreconditionViolation, [] { pl_from_ovps_infinite_pv1(0, 0, HomogeneousPoint2::finite(1, 1)); });
}

TEST(InfinitePv1, PassesThroughFiniteMember) {
  rng::CounterRng rng(7);
  for (int i = 0; i < 500; ++i) {
    const double t = rng.uniform(0, 2 * M_PI);
    const auto pv2 = HomogeneousPoint2::finite(rng.uniform(-100, 100), rng.uniform(-100, 100));
    const PrincipalLine pl = pl_from_ovps_infinite_pv1(std::cos(t), std::sin(t), pv2);
    EXPECT_LE(point_line_distance(pl.line, pv2.x, pv2.y), 1e-12);
    EXPECT_NEAR(std::abs(pl.line.a * std::cos(t) + pl.line.b * std::sin(t)), 1.0, 1e-12);
  }
}

TEST(SecondPairInfinite, MatchesHomographyForm) {
  rng::CounterRng rng(8);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 500; ++i) {
    Homography::Entries h;
    for (auto& v : h) v = rng.uniform(-1, 1);
    // h7 + h8 = 0 puts pv3 at infinity, h7 - h8 = 0 puts pv4 there
    h[7] = (i % 2 ? -1 : 1) * h[6];
    const Homography H(h);
    if (std::abs(H.canonical().det()) < 1e-3 || std::abs(h[6]) < 1e-2) continue;
    const OvpQuad q = ovps_from_columns(H);
    const auto& inf = q.pv[i % 2 ? 2 : 3];
    const auto& fin = q.pv[i % 2 ? 3 : 2];
    ASSERT_EQ(inf.w, 0.0);
    // skip axis-parallel infinite directions and near-degenerate prefactors
    if (std::abs(inf.x) < 1e-2 * std::hypot(inf.x, inf.y) || std::abs(inf.y) < 1e-2 * std::hypot(inf.x, inf.y)) continue;
    if (!is_finite(q.pv1()) || !is_finite(q.pv2()) || !is_finite(fin)) continue;
    const PrincipalLine limit = pl_from_ovps_second_pair_infinite(q);
    EXPECT_EQ(limit.method, PlMethod::OvpInfiniteForm);
    EXPECT_LE(line_discrepancy(limit.line, pl_from_homography(H).line), 1e-9) << i;
    ++checked;
  }
  EXPECT_GE(checked, 500);
}

TEST(SecondPairInfinite, WorkedHomography) {
  // H_a: pv4 = (-2, 3, 0) at infinity, pv3 = (1, 1.5)
  expect_line(pl_from_ovps_second_pair_infinite(ovps_from_columns(test::H_a())).line, {-2, 3, -2.5}, 1e-15);
  expect_code(ErrorCode::PreconditionViolation,
              [] { pl_from_ovps_second_pair_infinite(ovps_from_columns(test::H_b())); });
}

TEST(Auto, Dispatch) {
  const PrincipalLine b = pl_auto(test::H_b());
  EXPECT_EQ(b.method, PlMethod::OvpForm);
  expect_line(b.line, {-3, 1, 1});

  const PrincipalLine c = pl_auto(test::H_c());
  EXPECT_EQ(c.method, PlMethod::OvpInfiniteForm);
  expect_line(c.line, {1, 0, -0.5});

  const PrincipalLine d = pl_auto(test::H_d());
  EXPECT_EQ(d.method, PlMethod::OvpInfiniteForm);
  expect_line(d.line, {0, 1, -0.7});

  const PrincipalLine a = pl_auto(test::H_a());
  EXPECT_EQ(a.method, PlMethod::HomographyForm);
  expect_line(a.line, {-2, 3, -2.5});

  const PrincipalLine degenerate_denominator = pl_auto(Homography({1, 2, 0, 0, 1, 0, 1, 2, 1}));
  EXPECT_EQ(degenerate_denominator.method, PlMethod::HomographyForm);
  expect_line(degenerate_denominator.line, {0, 1, -0.4}, 1e-15);  // C = -[4 * 2 + 2 * (1 - 4)] / 5

  expect_code(ErrorCode::FrontoParallel, [] { pl_auto(Homography()); });
}

TEST(Auto, AgreesWithHomographyForm) {
  rng::CounterRng rng(9);
  for (int i = 0; i < 2000; ++i) {
    Homography::Entries h;
    for (auto& v : h) v = rng.uniform(-1, 1);
    // a third of the samples lie on the pv1 / pv2 / pv3 / pv4 at-infinity loci
    switch (i % 6) {
      case 1: h[6] = 0; break;
      case 2: h[7] = 0; break;
      case 3: h[7] = -h[6]; break;
      case 4: h[7] = h[6]; break;
      default: break;
    }
    const Homography H(h);
    if (std::abs(H.canonical().det()) < 1e-3 || std::hypot(h[6], h[7]) < 1e-2) continue;
    EXPECT_LE(line_discrepancy(pl_auto(H).line, pl_from_homography(H).line), 1e-9) << i;
  }
}

TEST(Methods, Names) {
  for (PlMethod m : {PlMethod::HomographyForm, PlMethod::OvpForm, PlMethod::OvpInfiniteForm}) {
    EXPECT_EQ(method_from_name(method_name(m)), m);
  }
  EXPECT_EQ(method_name(PlMethod::OvpInfiniteForm), "ovp_infinite");
  expect_code(ErrorCode::InvalidInput, [] { method_from_name("svd"); });
}

TEST(Properties, RouteEquivalence) {
  rng::CounterRng rng(10);
  for (int i = 0; i < 2000; ++i) {
    const Homography H = random_guarded(rng);
    const ProjectiveLine a = pl_from_homography(H).line;
    const ProjectiveLine b = pl_from_ovps(ovps_from_columns(H)).line;
    ASSERT_TRUE(lines_equal_up_to_scale(a, b, 1e-9)) << i << " discrepancy " << line_discrepancy(a, b);
  }
}

TEST(Properties, OrientationInvariance) {
  rng::CounterRng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const DirectionPair dir = random_direction(rng);
    const Homography H = random_guarded(rng, dir);
    EXPECT_LE(line_discrepancy(pl_from_ovps(ovps_from_columns(H, dir)).line, pl_from_homography(H).line), 1e-9) << i;
  }
}

TEST(Properties, PerpendicularToVanishingLine) {
  rng::CounterRng rng(12);
  for (int i = 0; i < 2000; ++i) {
    const Homography H = random_guarded(rng);
    const ProjectiveLine pl = pl_from_homography(H).line;
    const ProjectiveLine vl = normalize_line(vanishing_line(ovps_from_columns(H)));
    EXPECT_LE(std::abs(pl.a * vl.a + pl.b * vl.b), 1e-9) << i;
  }
}

TEST(Properties, ScaleInvariance) {
  rng::CounterRng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Homography H = random_guarded(rng);
    const ProjectiveLine base = pl_from_homography(H).line;

    Homography::Entries pow2 = H.entries();
    for (auto& v : pow2) v *= -8.0;
    const ProjectiveLine exact = pl_from_homography(Homography(pow2)).line;
    EXPECT_EQ(base.a, exact.a);
    EXPECT_EQ(base.b, exact.b);
    EXPECT_EQ(base.c, exact.c);

    Homography::Entries any = H.entries();
    const double s = rng.uniform(1e-3, 1e3);
    for (auto& v : any) v *= s;
    EXPECT_LE(line_discrepancy(base, pl_from_homography(Homography(any)).line), 1e-14);
  }
}

TEST(Properties, PassesThroughPrincipalPoint) {
  rng::CounterRng rng(14);
  for (int i = 0; i < 1000; ++i) {
    PinholeCamera cam;
    cam.f = rng.uniform(300, 1500);
    cam.cx = rng.uniform(0, 640);
    cam.cy = rng.uniform(0, 480);
    cam.pose = random_pose(rng::derive_seed(14, static_cast<std::uint64_t>(i)), PoseRange{5, 80, 2, 10, 0.2});
    const Homography H = homography_from_camera(cam);
    const ProjectiveLine pl = pl_from_homography(H).line;
    EXPECT_LE(point_line_distance(pl, cam.cx, cam.cy), 1e-9) << i;
    EXPECT_LE(line_discrepancy(pl, test::geometric_principal_line(cam)), 1e-9) << i;
    EXPECT_LE(point_line_distance(pl_auto(H).line, cam.cx, cam.cy), 1e-9) << i;
  }
}
