#pragma once

#include <string_view>

#include "plc/geometry.hpp"
#include "plc/vanishing.hpp"

namespace plc {

enum class PlMethod { HomographyForm, OvpForm, OvpInfiniteForm };

std::string_view method_name(PlMethod m) noexcept;  // "homography" | "ovp" | "ovp_infinite"
PlMethod method_from_name(std::string_view name);

// Quantities the guards looked at when the line was produced.
struct PlDiagnostics {
  double h7 = 0.0;  // canonical H, when a homography was involved
  double h8 = 0.0;
  double det = 0.0;
  double denom_m = 0.0;  // OVP-route c-denominators, when evaluated
  double denom_n = 0.0;
};

struct PrincipalLine {
  ProjectiveLine line;  // normalized
  PlMethod method = PlMethod::HomographyForm;
  PlDiagnostics diagnostics;
};

namespace tolerance {
// sqrt(h7^2 + h8^2) on the canonical H at or below which the view is fronto-parallel.
inline constexpr double kFrontoParallel = 1e-9;
// |m1 + m2 - m3 - m4| relative to its largest term.
inline constexpr double kOvpDenominator = 1e-8;
// |(A, B)| of the homography-route line on the canonical H.
inline constexpr double kDegeneratePl = 1e-12;
}  // namespace tolerance

// A = h2 h7 - h1 h8, B = h5 h7 - h4 h8,
// C = -[(h2^2 + h5^2 - h1^2 - h4^2) h7 h8 + (h1 h2 + h4 h5)(h7^2 - h8^2)] / (h7^2 + h8^2)
// on the canonical H. Throws FrontoParallel or DegeneratePL.
PrincipalLine pl_from_homography(const Homography& H);

// (m2 - m1) u + (n2 - n1) v + c = 0 from four finite vanishing points.
// Throws InfiniteVanishingPoint, DegeneratePL (pv1 == pv2) or
// DegenerateDenominator (ill-conditioned c-fraction).
PrincipalLine pl_from_ovps(const OvpQuad& quad);

// Limit form for pv1 at infinity along dir1: -m1 u - n1 v + (m1 m2 + n1 n2) = 0
// with dir1 scaled to unit length. Throws PreconditionViolation when pv2 is
// not finite or dir1 is zero.
PrincipalLine pl_from_ovps_infinite_pv1(double dir_x, double dir_y, const HomogeneousPoint2& pv2);

// Limit form for exactly one of pv3, pv4 at infinity, with pv1 and pv2
// finite: the c-fractions tend to the finite member's coordinates. Throws
// PreconditionViolation when the quad is not of that shape and
// DegenerateDenominator when the infinite member's direction is parallel to
// an image axis (the fraction then has no limit).
PrincipalLine pl_from_ovps_second_pair_infinite(const OvpQuad& quad);

// Dispatch: pv1 or pv2 at infinity -> limit form around the finite one;
// pv3 or pv4 at infinity, or an ill-conditioned c-denominator -> homography
// form; otherwise the OVP form. Throws FrontoParallel.
PrincipalLine pl_auto(const Homography& H, const DirectionPair& dir = {});

}  // namespace plc
