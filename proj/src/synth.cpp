#include "plc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "plc/random.hpp"

namespace plc {
namespace {

constexpr double kRotationTolerance = 1e-12;

double deg2rad(double d) { return d * std::numbers::pi / 180.0; }

}  // namespace

Eigen::Matrix3d PinholeCamera::K() const {
  Eigen::Matrix3d k;
  k << f, 0, cx, 0, f, cy, 0, 0, 1;
  return k;
}

void PinholeCamera::validate() const {
  if (!(f > 0.0) || !std::isfinite(f) || !std::isfinite(cx) || !std::isfinite(cy)) {
    throw Error(ErrorCode::PreconditionViolation, "focal length must be positive and intrinsics finite");
  }
  const Eigen::Matrix3d& R = pose.R;
  const double orth = (R.transpose() * R - Eigen::Matrix3d::Identity()).lpNorm<Eigen::Infinity>();
  if (!(orth <= kRotationTolerance) || !(std::abs(R.determinant() - 1.0) <= kRotationTolerance)) {
    throw Error(ErrorCode::PreconditionViolation, "R is not a proper rotation");
  }
  if (!pose.T.allFinite()) throw Error(ErrorCode::PreconditionViolation, "translation is not finite");
}

std::vector<Eigen::Vector2d> PatternGrid::points() const {
  if (rows < 1 || cols < 1 || !(spacing > 0.0)) {
    throw Error(ErrorCode::PreconditionViolation, "grid needs rows, cols >= 1 and positive spacing");
  }
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(static_cast<std::size_t>(rows * cols));
  const double x0 = 0.5 * (cols - 1) * spacing;
  const double y0 = 0.5 * (rows - 1) * spacing;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) pts.emplace_back(c * spacing - x0, r * spacing - y0);
  }
  return pts;
}

Eigen::Matrix3d rotation_x(double angle) {
  return Eigen::AngleAxisd(angle, Eigen::Vector3d::UnitX()).toRotationMatrix();
}
Eigen::Matrix3d rotation_y(double angle) {
  return Eigen::AngleAxisd(angle, Eigen::Vector3d::UnitY()).toRotationMatrix();
}
Eigen::Matrix3d rotation_z(double angle) {
  return Eigen::AngleAxisd(angle, Eigen::Vector3d::UnitZ()).toRotationMatrix();
}

Homography homography_from_camera(const PinholeCamera& cam) {
  cam.validate();
  Eigen::Matrix3d rt;
  rt.col(0) = cam.pose.R.col(0);
  rt.col(1) = cam.pose.R.col(1);
  rt.col(2) = cam.pose.T;
  const Homography H = Homography::from_matrix(cam.K() * rt);
  H.require_invertible();
  return H.canonical();
}

CorrespondenceSet project_pattern(const PinholeCamera& cam, const PatternGrid& grid, double noise_sigma,
                                  std::uint64_t seed) {
  cam.validate();
  if (!(noise_sigma >= 0.0)) throw Error(ErrorCode::PreconditionViolation, "noise sigma must be >= 0");
  rng::CounterRng rng(seed);
  CorrespondenceSet out;
  out.plane = grid.points();
  out.image.reserve(out.plane.size());
  for (const auto& p : out.plane) {
    const Eigen::Vector3d pc = cam.pose.R * Eigen::Vector3d(p.x(), p.y(), 0.0) + cam.pose.T;
    if (!(pc.z() > 0.0)) {
      std::ostringstream msg;
      msg << "plane point (" << p.x() << ", " << p.y() << ") has depth " << pc.z();
      throw Error(ErrorCode::BehindCamera, msg.str());
    }
    Eigen::Vector2d px(cam.f * pc.x() / pc.z() + cam.cx, cam.f * pc.y() / pc.z() + cam.cy);
    if (noise_sigma > 0.0) {
      const double nu = rng.normal();
      const double nv = rng.normal();
      px += noise_sigma * Eigen::Vector2d(nu, nv);
    }
    out.image.push_back(px);
  }
  return out;
}

Pose random_pose(std::uint64_t seed, const PoseRange& range) {
  if (!(range.tilt_min_deg >= 5.0 && range.tilt_min_deg <= range.tilt_max_deg && range.tilt_max_deg <= 80.0)) {
    throw Error(ErrorCode::PreconditionViolation, "tilt range must satisfy 5 <= min <= max <= 80 degrees");
  }
  if (!(range.distance_min > 0.0 && range.distance_min <= range.distance_max)) {
    throw Error(ErrorCode::PreconditionViolation, "distance range must satisfy 0 < min <= max");
  }
  rng::CounterRng rng(seed);
  const double axis_angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double tilt = deg2rad(rng.uniform(range.tilt_min_deg, range.tilt_max_deg));
  const double spin = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double distance = rng.uniform(range.distance_min, range.distance_max);
  const double lateral = range.lateral_fraction * distance;
  const double tx = rng.uniform(-lateral, lateral);
  const double ty = rng.uniform(-lateral, lateral);

  const Eigen::Vector3d axis(std::cos(axis_angle), std::sin(axis_angle), 0.0);
  Pose pose;
  pose.R = rotation_z(spin) * Eigen::AngleAxisd(tilt, axis).toRotationMatrix();
  pose.T = Eigen::Vector3d(tx, ty, distance);
  return pose;
}

Scenario generate_scenario(const ScenarioSpec& spec) {
  if (spec.poses < 1) throw Error(ErrorCode::PreconditionViolation, "scenario needs at least one pose");
  if (spec.grid.rows < 2 || spec.grid.cols < 2) {
    throw Error(ErrorCode::PreconditionViolation, "grid needs at least 2 x 2 points");
  }
  const double extent = std::max(spec.grid.rows - 1, spec.grid.cols - 1) * spec.grid.spacing * std::sqrt(2.0);
  PoseRange range;
  range.tilt_min_deg = spec.tilt_min_deg;
  range.tilt_max_deg = spec.tilt_max_deg;
  range.distance_min = 2.5 * extent;
  range.distance_max = 5.0 * extent;

  Scenario sc;
  sc.spec = spec;
  for (int i = 0; i < spec.poses; ++i) {
    const auto k = static_cast<std::uint64_t>(i);
    PinholeCamera cam{spec.focal, spec.cx, spec.cy, random_pose(rng::derive_seed(spec.seed, 2 * k), range)};
    sc.views.push_back(project_pattern(cam, spec.grid, spec.noise_sigma, rng::derive_seed(spec.seed, 2 * k + 1)));
    sc.cameras.push_back(cam);
  }
  return sc;
}

}  // namespace plc
