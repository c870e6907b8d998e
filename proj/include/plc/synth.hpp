#pragma once

// Ground-truth generator: pinhole cameras viewing a planar grid on Z = 0.

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "plc/calibration.hpp"
#include "plc/geometry.hpp"

namespace plc {

struct Pose {
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  Eigen::Vector3d T{0.0, 0.0, 1.0};
};

// Square pixels, zero skew: K = [[f, 0, cx], [0, f, cy], [0, 0, 1]].
struct PinholeCamera {
  double f = 1.0;
  double cx = 0.0;
  double cy = 0.0;
  Pose pose{};

  [[nodiscard]] Eigen::Matrix3d K() const;
  // Throws PreconditionViolation unless f > 0 and R is a proper rotation
  // (R^T R = I and det R = +1 within 1e-12).
  void validate() const;
};

// rows x cols points, spacing apart, centred on the pattern origin.
struct PatternGrid {
  int rows = 2;
  int cols = 2;
  double spacing = 1.0;

  [[nodiscard]] std::vector<Eigen::Vector2d> points() const;
};

// Elementary rotations, right-handed.
Eigen::Matrix3d rotation_x(double angle);
Eigen::Matrix3d rotation_y(double angle);
Eigen::Matrix3d rotation_z(double angle);

// Canonical K [r1 r2 T]. Throws DegenerateHomography when the pattern plane
// passes through the optical centre.
Homography homography_from_camera(const PinholeCamera& cam);

// Projects the grid, adding isotropic Gaussian noise of noise_sigma pixels
// per coordinate drawn from the counter-based stream for seed.
// Throws BehindCamera when a grid point has depth <= 0.
CorrespondenceSet project_pattern(const PinholeCamera& cam, const PatternGrid& grid, double noise_sigma,
                                  std::uint64_t seed);

struct PoseRange {
  double tilt_min_deg = 20.0;
  double tilt_max_deg = 60.0;
  double distance_min = 4.0;
  double distance_max = 8.0;
  double lateral_fraction = 0.1;  // |Tx|, |Ty| <= fraction * distance
};

// Tilt about a uniformly drawn in-plane axis, uniform spin about the optical
// axis, translation mostly along the optical axis. Throws
// PreconditionViolation unless 5 <= tilt_min <= tilt_max <= 80 degrees and
// 0 < distance_min <= distance_max.
Pose random_pose(std::uint64_t seed, const PoseRange& range = {});

struct ScenarioSpec {
  int poses = 10;
  std::uint64_t seed = 1;
  double noise_sigma = 0.0;
  double cx = 320.0;
  double cy = 240.0;
  double focal = 800.0;
  PatternGrid grid{10, 10, 1.0};
  double tilt_min_deg = 20.0;
  double tilt_max_deg = 60.0;
};

struct Scenario {
  ScenarioSpec spec;
  std::vector<PinholeCamera> cameras;  // one per pose, shared intrinsics
  std::vector<CorrespondenceSet> views;
};

// Draws spec.poses poses (distances scaled to the grid extent) and projects
// the grid in each. Output depends only on spec.
Scenario generate_scenario(const ScenarioSpec& spec);

}  // namespace plc
