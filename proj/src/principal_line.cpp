#include "plc/principal_line.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "plc/formulas.hpp"

namespace plc {
namespace {

PlDiagnostics homography_diagnostics(const Homography& canon) {
  PlDiagnostics d;
  d.h7 = canon[6];
  d.h8 = canon[7];
  d.det = canon.det();
  return d;
}

void require_not_fronto_parallel(const Homography& canon) {
  const double r = std::hypot(canon[6], canon[7]);
  if (r <= tolerance::kFrontoParallel) {
    std::ostringstream msg;
    msg << "sqrt(h7^2 + h8^2) = " << r << " on the canonical H; the vanishing line is at infinity";
    throw Error(ErrorCode::FrontoParallel, msg.str());
  }
}

PrincipalLine make_line(const formulas::LineCoeffs<double>& k, PlMethod method, const PlDiagnostics& diag) {
  return PrincipalLine{normalize_line(ProjectiveLine(k.a, k.b, k.c)), method, diag};
}

FinitePoint require_finite(const HomogeneousPoint2& p, ErrorCode code, const char* what) {
  const PointClass cls = classify_point(p);
  if (const auto* f = std::get_if<FinitePoint>(&cls)) return *f;
  throw Error(code, std::string(what) + " is at infinity");
}

double max_abs(const formulas::QuadAxis<double>& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2]), std::abs(v[3])});
}

}  // namespace

std::string_view method_name(PlMethod m) noexcept {
  switch (m) {
    case PlMethod::HomographyForm: return "homography";
    case PlMethod::OvpForm: return "ovp";
    case PlMethod::OvpInfiniteForm: return "ovp_infinite";
  }
  return "homography";
}

PlMethod method_from_name(std::string_view name) {
  if (name == "homography") return PlMethod::HomographyForm;
  if (name == "ovp") return PlMethod::OvpForm;
  if (name == "ovp_infinite") return PlMethod::OvpInfiniteForm;
  throw Error(ErrorCode::InvalidInput, "unknown principal-line method '" + std::string(name) + "'");
}

PrincipalLine pl_from_homography(const Homography& H) {
  const Homography canon = H.canonical();
  require_not_fronto_parallel(canon);
  const auto k = formulas::principal_line_from_entries(canon.entries());
  if (std::hypot(k.a, k.b) <= tolerance::kDegeneratePl) {
    throw Error(ErrorCode::DegeneratePL, "homography-route coefficients (A, B) vanish; H is near singular");
  }
  return make_line(k, PlMethod::HomographyForm, homography_diagnostics(canon));
}

PrincipalLine pl_from_ovps(const OvpQuad& quad) {
  formulas::QuadAxis<double> m{};
  formulas::QuadAxis<double> n{};
  static constexpr const char* kNames[] = {"pv1", "pv2", "pv3", "pv4"};
  for (std::size_t i = 0; i < 4; ++i) {
    const FinitePoint f = require_finite(quad.pv[i], ErrorCode::InfiniteVanishingPoint, kNames[i]);
    m[i] = f.u;
    n[i] = f.v;
  }

  const double da = m[1] - m[0];
  const double db = n[1] - n[0];
  const double scale = std::max({std::abs(m[0]), std::abs(m[1]), std::abs(n[0]), std::abs(n[1])});
  if (std::hypot(da, db) <= tolerance::kProportional * scale || (da == 0.0 && db == 0.0)) {
    throw Error(ErrorCode::DegeneratePL, "pv1 and pv2 coincide; (m2 - m1, n2 - n1) = (0, 0)");
  }

  PlDiagnostics diag;
  diag.denom_m = formulas::ovp_denominator(m);
  diag.denom_n = formulas::ovp_denominator(n);
  auto check = [](double denom, const formulas::QuadAxis<double>& axis, const char* which) {
    if (std::abs(denom) <= tolerance::kOvpDenominator * max_abs(axis)) {
      std::ostringstream msg;
      msg << which << "1 + " << which << "2 - " << which << "3 - " << which << "4 = " << denom
          << " is ill-conditioned";
      throw Error(ErrorCode::DegenerateDenominator, msg.str());
    }
  };
  check(diag.denom_m, m, "m");
  check(diag.denom_n, n, "n");

  return make_line(formulas::principal_line_from_ovps(m, n), PlMethod::OvpForm, diag);
}

PrincipalLine pl_from_ovps_infinite_pv1(double dir_x, double dir_y, const HomogeneousPoint2& pv2) {
  const double len = std::hypot(dir_x, dir_y);
  if (!std::isfinite(len) || len == 0.0) {
    throw Error(ErrorCode::PreconditionViolation, "direction of the infinite vanishing point is zero");
  }
  const FinitePoint f = require_finite(pv2, ErrorCode::PreconditionViolation, "the finite partner vanishing point");
  const auto k = formulas::principal_line_pv1_at_infinity(dir_x / len, dir_y / len, f.u, f.v);
  return make_line(k, PlMethod::OvpInfiniteForm, {});
}

PrincipalLine pl_from_ovps_second_pair_infinite(const OvpQuad& quad) {
  const FinitePoint p1 = require_finite(quad.pv1(), ErrorCode::PreconditionViolation, "pv1");
  const FinitePoint p2 = require_finite(quad.pv2(), ErrorCode::PreconditionViolation, "pv2");
  const bool f3 = is_finite(quad.pv3());
  const bool f4 = is_finite(quad.pv4());
  if (f3 == f4) {
    throw Error(ErrorCode::PreconditionViolation, "exactly one of pv3, pv4 must be at infinity");
  }
  const auto inf = std::get<PointAtInfinity>(classify_point(f3 ? quad.pv4() : quad.pv3()));
  if (std::abs(inf.dx) <= tolerance::kInfinite || std::abs(inf.dy) <= tolerance::kInfinite) {
    throw Error(ErrorCode::DegenerateDenominator,
                "infinite member of the second pair is parallel to an image axis; the c-fraction has no limit");
  }
  const FinitePoint pf = std::get<FinitePoint>(classify_point(f3 ? quad.pv3() : quad.pv4()));
  const auto k = formulas::principal_line_second_pair_at_infinity(p1.u, p1.v, p2.u, p2.v, pf.u, pf.v);
  return make_line(k, PlMethod::OvpInfiniteForm, {});
}

PrincipalLine pl_auto(const Homography& H, const DirectionPair& dir) {
  const Homography canon = H.canonical();
  require_not_fronto_parallel(canon);
  const OvpQuad quad = ovps_from_columns(canon, dir);
  const PlDiagnostics diag = homography_diagnostics(canon);

  const PointClass c1 = classify_point(quad.pv1());
  const PointClass c2 = classify_point(quad.pv2());
  const auto* inf1 = std::get_if<PointAtInfinity>(&c1);
  const auto* inf2 = std::get_if<PointAtInfinity>(&c2);
  if (inf1 != nullptr && inf2 != nullptr) return pl_from_homography(canon);
  if (inf1 != nullptr || inf2 != nullptr) {
    PrincipalLine pl = inf1 != nullptr ? pl_from_ovps_infinite_pv1(inf1->dx, inf1->dy, quad.pv2())
                                       : pl_from_ovps_infinite_pv1(inf2->dx, inf2->dy, quad.pv1());
    pl.diagnostics = diag;
    return pl;
  }
  if (!is_finite(quad.pv3()) || !is_finite(quad.pv4())) return pl_from_homography(canon);

  try {
    PrincipalLine pl = pl_from_ovps(quad);
    pl.diagnostics.h7 = diag.h7;
    pl.diagnostics.h8 = diag.h8;
    pl.diagnostics.det = diag.det;
    return pl;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateDenominator && e.code() != ErrorCode::DegeneratePL) throw;
  }
  return pl_from_homography(canon);
}

}  // namespace plc
