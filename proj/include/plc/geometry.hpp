#pragma once

// Projective primitives of the image plane: homogeneous points, lines and
// the plane-to-image homography.

#include <array>
#include <variant>

#include <Eigen/Core>

#include "plc/error.hpp"

namespace plc {

namespace tolerance {
// Proportionality test on unit-norm 3-vectors.
inline constexpr double kProportional = 1e-12;
// |det| floor on the canonical (unit Frobenius norm) homography.
inline constexpr double kDeterminant = 1e-10;
// Relative |w| below which a homogeneous point is treated as a direction.
inline constexpr double kInfinite = 1e-9;
// Relative (a, b) magnitude below which a line is the line at infinity.
inline constexpr double kLineAtInfinity = 1e-14;
}  // namespace tolerance

// Point (x, y, w) of the projective plane. w == 0 encodes a direction.
struct HomogeneousPoint2 {
  double x = 0.0;
  double y = 0.0;
  double w = 1.0;

  HomogeneousPoint2() = default;
  // Throws PreconditionViolation for (0, 0, 0) or non-finite input.
  HomogeneousPoint2(double x, double y, double w);

  static HomogeneousPoint2 finite(double u, double v) { return {u, v, 1.0}; }
  static HomogeneousPoint2 from(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

  [[nodiscard]] Eigen::Vector3d vec() const { return {x, y, w}; }
};

// Line a*u + b*v + c = 0, defined up to a nonzero scale.
struct ProjectiveLine {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;

  ProjectiveLine() = default;
  ProjectiveLine(double a, double b, double c);

  static ProjectiveLine from(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

  [[nodiscard]] Eigen::Vector3d vec() const { return {a, b, c}; }
};

// 3x3 plane-to-image map, entries h1..h9 stored row-major.
class Homography {
 public:
  using Entries = std::array<double, 9>;

  Homography();  // identity
  explicit Homography(const Entries& h);
  static Homography from_matrix(const Eigen::Matrix3d& m);

  [[nodiscard]] const Entries& entries() const noexcept { return h_; }
  [[nodiscard]] double operator[](std::size_t i) const { return h_[i]; }
  [[nodiscard]] double at(int row, int col) const { return h_[static_cast<std::size_t>(3 * row + col)]; }
  [[nodiscard]] Eigen::Matrix3d matrix() const;

  [[nodiscard]] double det() const;

  // Unit Frobenius norm, largest-magnitude entry positive. H and s*H (s != 0)
  // map to the same representative.
  [[nodiscard]] Homography canonical() const;

  // Throws DegenerateHomography when |det| of the canonical form is not above tol.
  void require_invertible(double tol = tolerance::kDeterminant) const;

 private:
  Entries h_;
};

struct FinitePoint {
  double u;
  double v;
};

struct PointAtInfinity {
  double dx;  // unit direction
  double dy;
};

using PointClass = std::variant<FinitePoint, PointAtInfinity>;

// Join of two points. Throws CoincidentPoints when p and q are proportional.
ProjectiveLine line_through_points(const HomogeneousPoint2& p, const HomogeneousPoint2& q,
                                   double tol = tolerance::kProportional);

// Meet of two lines. Parallel lines meet in a w == 0 point; proportional
// lines throw CoincidentLines.
HomogeneousPoint2 intersect_lines(const ProjectiveLine& l1, const ProjectiveLine& l2,
                                  double tol = tolerance::kProportional);

// H * p, left in homogeneous form.
HomogeneousPoint2 map_point(const Homography& H, const HomogeneousPoint2& p);

// Scales to a^2 + b^2 = 1 with b > 0, or b == 0 and a > 0.
// Throws LineAtInfinity when a = b = 0.
ProjectiveLine normalize_line(const ProjectiveLine& l);

PointClass classify_point(const HomogeneousPoint2& p, double eps = tolerance::kInfinite);
bool is_finite(const HomogeneousPoint2& p, double eps = tolerance::kInfinite);

// Infinity-norm distance between the normalized lines, minimized over the
// overall sign so that near-vertical lines compare correctly.
double line_discrepancy(const ProjectiveLine& l1, const ProjectiveLine& l2);
bool lines_equal_up_to_scale(const ProjectiveLine& l1, const ProjectiveLine& l2, double tol);

// Same as line_discrepancy for points scaled to unit 3-vector norm.
double point_discrepancy(const HomogeneousPoint2& p, const HomogeneousPoint2& q);
bool points_proportional(const HomogeneousPoint2& p, const HomogeneousPoint2& q,
                         double tol = tolerance::kProportional);

// |L . p| with both operands scaled to unit norm.
double incidence_residual(const ProjectiveLine& l, const HomogeneousPoint2& p);

// Euclidean distance from the finite point (u, v) to the line.
double point_line_distance(const ProjectiveLine& l, double u, double v);

}  // namespace plc
