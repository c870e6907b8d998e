#pragma once

// Worked homographies and test-only oracles that do not go through the
// library's principal-line code.

#include <cmath>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "plc/geometry.hpp"
#include "plc/synth.hpp"

namespace plc::test {

template <class F>
void expect_code(ErrorCode code, F&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << error_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// h7 == h8: pv4 = H (-1, 1, 0) is at infinity.
inline Homography H_a() { return Homography({2, 0, 0, 0, 3, 0, 1, 1, 1}); }
// Generic view; every vanishing point finite.
inline Homography H_b() { return Homography({2, 1, 0, 1, 3, 0, 1, 2, 1}); }
// Rotation about the pattern x-axis (sin 0.6), f = 1, principal point (0.5, 0).
inline Homography H_c() { return Homography({1, 0.3, 0.5, 0, 0.8, 0, 0, 0.6, 1}); }
// Rotation about the pattern y-axis (sin 0.6), f = 1, principal point (0.5, 0.7).
inline Homography H_d() { return Homography({0.5, 0, 0.5, -0.42, 1, 0.7, -0.6, 0, 1}); }

inline Eigen::Matrix3d exact_rotation_x(double s, double c) {
  Eigen::Matrix3d R;
  R << 1, 0, 0, 0, c, -s, 0, s, c;
  return R;
}

inline Eigen::Matrix3d exact_rotation_y(double s, double c) {
  Eigen::Matrix3d R;
  R << c, 0, s, 0, 1, 0, -s, 0, c;
  return R;
}

// Principal line from first principles: the vanishing line of the pattern
// plane is K^-T n with n the plane normal in camera coordinates; the
// principal line is the line through (cx, cy) perpendicular to it.
inline ProjectiveLine geometric_principal_line(const PinholeCamera& cam) {
  const Eigen::Vector3d n = cam.pose.R.col(2);
  const Eigen::Vector3d vl = cam.K().inverse().transpose() * n;
  const double dx = -vl.y();  // direction of the vanishing line
  const double dy = vl.x();
  // normal of the principal line = direction of the vanishing line
  return ProjectiveLine(dx, dy, -(dx * cam.cx + dy * cam.cy));
}

// Finite vanishing point of plane direction (a, b) by projecting a point far
// along it; accurate to about 1/t.
inline Eigen::Vector2d far_point_projection(const Homography& H, double a, double b, double t = 1e7) {
  const Eigen::Vector3d x = H.matrix() * Eigen::Vector3d(t * a, t * b, 1.0);
  return x.hnormalized();
}

}  // namespace plc::test
