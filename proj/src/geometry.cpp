#include "plc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Geometry>

namespace plc {
namespace {

bool all_finite(std::initializer_list<double> values) {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

Eigen::Vector3d unit(const Eigen::Vector3d& v) { return v / v.norm(); }

// Infinity-norm distance between unit vectors, minimized over the sign.
double signless_distance(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return std::min((a - b).lpNorm<Eigen::Infinity>(), (a + b).lpNorm<Eigen::Infinity>());
}

}  // namespace

HomogeneousPoint2::HomogeneousPoint2(double x_, double y_, double w_) : x(x_), y(y_), w(w_) {
  if (!all_finite({x, y, w})) {
    throw Error(ErrorCode::PreconditionViolation, "homogeneous point has non-finite coordinates");
  }
  if (x == 0.0 && y == 0.0 && w == 0.0) {
    throw Error(ErrorCode::PreconditionViolation, "homogeneous point (0, 0, 0) is undefined");
  }
}

ProjectiveLine::ProjectiveLine(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!all_finite({a, b, c})) {
    throw Error(ErrorCode::PreconditionViolation, "line has non-finite coefficients");
  }
  if (a == 0.0 && b == 0.0 && c == 0.0) {
    throw Error(ErrorCode::PreconditionViolation, "line (0, 0, 0) is undefined");
  }
}

Homography::Homography() : h_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}

Homography::Homography(const Entries& h) : h_(h) {
  if (!std::all_of(h_.begin(), h_.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::PreconditionViolation, "homography has non-finite entries");
  }
  if (std::all_of(h_.begin(), h_.end(), [](double v) { return v == 0.0; })) {
    throw Error(ErrorCode::DegenerateHomography, "homography is the zero matrix");
  }
}

Homography Homography::from_matrix(const Eigen::Matrix3d& m) {
  return Homography(Entries{m(0, 0), m(0, 1), m(0, 2), m(1, 0), m(1, 1), m(1, 2), m(2, 0), m(2, 1), m(2, 2)});
}

Eigen::Matrix3d Homography::matrix() const {
  Eigen::Matrix3d m;
  m << h_[0], h_[1], h_[2], h_[3], h_[4], h_[5], h_[6], h_[7], h_[8];
  return m;
}

double Homography::det() const { return matrix().determinant(); }

Homography Homography::canonical() const {
  double norm2 = 0.0;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < h_.size(); ++i) {
    norm2 += h_[i] * h_[i];
    if (std::abs(h_[i]) > std::abs(h_[largest])) largest = i;
  }
  const double scale = (h_[largest] < 0.0 ? -1.0 : 1.0) / std::sqrt(norm2);
  Entries out;
  std::transform(h_.begin(), h_.end(), out.begin(), [scale](double v) { return v * scale; });
  return Homography(out);
}

void Homography::require_invertible(double tol) const {
  const double d = canonical().det();
  if (!(std::abs(d) > tol)) {
    std::ostringstream msg;
    msg << "|det(H)| = " << std::abs(d) << " on the canonical form (tolerance " << tol << ")";
    throw Error(ErrorCode::DegenerateHomography, msg.str());
  }
}

ProjectiveLine line_through_points(const HomogeneousPoint2& p, const HomogeneousPoint2& q, double tol) {
  const Eigen::Vector3d join = p.vec().cross(q.vec());
  if (unit(p.vec()).cross(unit(q.vec())).norm() <= tol) {
    throw Error(ErrorCode::CoincidentPoints, "cannot join proportional points");
  }
  return ProjectiveLine::from(join);
}

HomogeneousPoint2 intersect_lines(const ProjectiveLine& l1, const ProjectiveLine& l2, double tol) {
  const Eigen::Vector3d meet = l1.vec().cross(l2.vec());
  if (unit(l1.vec()).cross(unit(l2.vec())).norm() <= tol) {
    throw Error(ErrorCode::CoincidentLines, "cannot intersect proportional lines");
  }
  return HomogeneousPoint2::from(meet);
}

HomogeneousPoint2 map_point(const Homography& H, const HomogeneousPoint2& p) {
  return HomogeneousPoint2::from(H.matrix() * p.vec());
}

ProjectiveLine normalize_line(const ProjectiveLine& l) {
  const double ab = std::hypot(l.a, l.b);
  if (ab <= tolerance::kLineAtInfinity * std::abs(l.c)) {
    throw Error(ErrorCode::LineAtInfinity, "line has a = b = 0");
  }
  const double s = (l.b > 0.0 || (l.b == 0.0 && l.a > 0.0)) ? 1.0 / ab : -1.0 / ab;
  return {l.a * s, l.b * s, l.c * s};
}

PointClass classify_point(const HomogeneousPoint2& p, double eps) {
  const double scale = std::max({std::abs(p.x), std::abs(p.y), std::abs(p.w)});
  if (std::abs(p.w) > eps * scale) return FinitePoint{p.x / p.w, p.y / p.w};
  const double n = std::hypot(p.x, p.y);
  return PointAtInfinity{p.x / n, p.y / n};
}

bool is_finite(const HomogeneousPoint2& p, double eps) {
  return std::holds_alternative<FinitePoint>(classify_point(p, eps));
}

double line_discrepancy(const ProjectiveLine& l1, const ProjectiveLine& l2) {
  return signless_distance(normalize_line(l1).vec(), normalize_line(l2).vec());
}

bool lines_equal_up_to_scale(const ProjectiveLine& l1, const ProjectiveLine& l2, double tol) {
  return line_discrepancy(l1, l2) <= tol;
}

double point_discrepancy(const HomogeneousPoint2& p, const HomogeneousPoint2& q) {
  return signless_distance(unit(p.vec()), unit(q.vec()));
}

bool points_proportional(const HomogeneousPoint2& p, const HomogeneousPoint2& q, double tol) {
  return point_discrepancy(p, q) <= tol;
}

double incidence_residual(const ProjectiveLine& l, const HomogeneousPoint2& p) {
  return std::abs(unit(l.vec()).dot(unit(p.vec())));
}

double point_line_distance(const ProjectiveLine& l, double u, double v) {
  const ProjectiveLine n = normalize_line(l);
  return std::abs(n.a * u + n.b * v + n.c);
}

}  // namespace plc
