#include "plc/vanishing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace plc {

DirectionPair::DirectionPair() : a_(1.0 / std::sqrt(2.0)), b_(1.0 / std::sqrt(2.0)) {}

DirectionPair::DirectionPair(double a, double b, double min_component) {
  const double n = std::hypot(a, b);
  if (!std::isfinite(n) || n == 0.0) {
    throw Error(ErrorCode::PreconditionViolation, "direction (a, b) must be a nonzero finite vector");
  }
  a_ = a / n;
  b_ = b / n;
  if (std::abs(a_) < min_component || std::abs(b_) < min_component) {
    std::ostringstream msg;
    msg << "direction (" << a_ << ", " << b_ << ") is within " << min_component
        << " of a pattern axis; the second pair would collapse onto the first";
    throw Error(ErrorCode::PreconditionViolation, msg.str());
  }
}

OvpQuad ovps_from_columns(const Homography& H, const DirectionPair& dir) {
  H.require_invertible();
  const Eigen::Matrix3d m = H.canonical().matrix();
  const double a = dir.a();
  const double b = dir.b();
  return OvpQuad{{
                     HomogeneousPoint2::from(m * Eigen::Vector3d(1.0, 0.0, 0.0)),
                     HomogeneousPoint2::from(m * Eigen::Vector3d(0.0, 1.0, 0.0)),
                     HomogeneousPoint2::from(m * Eigen::Vector3d(a, b, 0.0)),
                     HomogeneousPoint2::from(m * Eigen::Vector3d(-b, a, 0.0)),
                 },
                 dir};
}

OvpQuad ovps_from_square_edges(const Homography& H) {
  using V = PatternSquare::Vertex;
  const Homography canon = H.canonical();
  try {
    std::array<HomogeneousPoint2, 6> img;
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = map_point(canon, PatternSquare::vertex(static_cast<V>(i)));
    }
    auto edge = [&](V p, V q) { return line_through_points(img[p], img[q]); };
    auto meet = [&](V p, V q, V r, V s) { return intersect_lines(edge(p, q), edge(r, s)); };
    return OvpQuad{{
                       meet(V::A, V::B, V::C, V::D),
                       meet(V::A, V::D, V::B, V::C),
                       meet(V::A, V::C, V::D, V::F),
                       meet(V::A, V::E, V::B, V::D),
                   },
                   DirectionPair{}};
  } catch (const Error& e) {
    throw Error(ErrorCode::DegenerateProjection, "square-edge construction failed (" + e.detail() + ")");
  }
}

ProjectiveLine vanishing_line(const OvpQuad& quad) { return line_through_points(quad.pv1(), quad.pv2()); }

double max_incidence_residual(const ProjectiveLine& line, std::span<const HomogeneousPoint2> points) {
  double worst = 0.0;
  for (const auto& p : points) worst = std::max(worst, incidence_residual(line, p));
  return worst;
}

}  // namespace plc
