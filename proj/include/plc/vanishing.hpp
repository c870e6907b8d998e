#pragma once

#include <array>
#include <span>

#include "plc/geometry.hpp"

namespace plc {

// Unit direction (a, b) of the second orthogonal pair on the pattern plane.
// The second pair is (a, b) and its perpendicular (-b, a).
class DirectionPair {
 public:
  // Rejected when either component of the unit direction falls below this.
  static constexpr double kMinComponent = 0.05;

  // (1, 1) / sqrt(2): diagonals of the unit square.
  DirectionPair();
  // Normalizes (a, b); throws PreconditionViolation when |a| or |b| of the
  // unit vector is below min_component.
  DirectionPair(double a, double b, double min_component = kMinComponent);

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] double b() const noexcept { return b_; }

 private:
  double a_;
  double b_;
};

// Two pairs of orthogonal vanishing points (pv1, pv2) and (pv3, pv4).
// pv1, pv2 are the images of the pattern x and y directions; pv3, pv4 those
// of (a, b) and (-b, a). Any member may be at infinity (w == 0).
struct OvpQuad {
  std::array<HomogeneousPoint2, 4> pv;
  DirectionPair orientation;

  [[nodiscard]] const HomogeneousPoint2& pv1() const { return pv[0]; }
  [[nodiscard]] const HomogeneousPoint2& pv2() const { return pv[1]; }
  [[nodiscard]] const HomogeneousPoint2& pv3() const { return pv[2]; }
  [[nodiscard]] const HomogeneousPoint2& pv4() const { return pv[3]; }
};

// Vertices of the two unit squares sharing edge AD: square I is A B C D,
// square II is F A D E. Plane points on Z = 0, homogeneous (X, Y, 1).
struct PatternSquare {
  static constexpr std::array<std::array<double, 2>, 6> kVertices{{
      {0.0, 0.0},   // A
      {1.0, 0.0},   // B
      {1.0, 1.0},   // C
      {0.0, 1.0},   // D
      {-1.0, 1.0},  // E
      {-1.0, 0.0},  // F
  }};
  enum Vertex : std::size_t { A, B, C, D, E, F };

  static HomogeneousPoint2 vertex(Vertex v) { return {kVertices[v][0], kVertices[v][1], 1.0}; }
};

// Vanishing points as images of plane directions: H (1,0,0), H (0,1,0),
// H (a,b,0), H (-b,a,0), using the canonical H.
// Throws DegenerateHomography when H is singular.
OvpQuad ovps_from_columns(const Homography& H, const DirectionPair& dir = {});

// Vanishing points by projecting the square vertices and meeting images of
// parallel edges: pv1 = A'B' x C'D', pv2 = A'D' x B'C', pv3 = A'C' x D'F',
// pv4 = A'E' x B'D'. Throws DegenerateProjection when the construction
// breaks down (coincident projected vertices or coincident edge lines).
OvpQuad ovps_from_square_edges(const Homography& H);

// Line through pv1 and pv2, returned unnormalized so that the line at
// infinity (fronto-parallel view) stays representable.
ProjectiveLine vanishing_line(const OvpQuad& quad);

// Largest normalized incidence residual of the four points on the line.
double max_incidence_residual(const ProjectiveLine& line, std::span<const HomogeneousPoint2> points);

}  // namespace plc
