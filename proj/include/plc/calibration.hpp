#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "plc/geometry.hpp"
#include "plc/principal_line.hpp"
#include "plc/vanishing.hpp"

namespace plc {

// Pattern-plane points (X, Y) on Z = 0 and their observed pixels (u, v).
struct CorrespondenceSet {
  std::vector<Eigen::Vector2d> plane;
  std::vector<Eigen::Vector2d> image;

  [[nodiscard]] std::size_t size() const noexcept { return plane.size(); }
};

struct PPEstimate {
  double u = 0.0;
  double v = 0.0;
  double rms_residual = 0.0;  // pixels, over the lines used
  std::size_t n_lines_used = 0;
  std::vector<std::size_t> rejected;  // input indices of outlier lines
};

struct OutlierSplit {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> rejected;
};

// Normalized DLT with isotropic conditioning of both point sets. Returns the
// canonical H. Throws PreconditionViolation for fewer than four or
// mismatched correspondences and DegenerateConfiguration when the null
// direction of the design matrix is not unique.
Homography estimate_homography(const CorrespondenceSet& c);

// Least-squares point minimizing sum (a_i u + b_i v + c_i)^2 over normalized
// lines. Throws DegenerateLines when the 2x2 normal matrix has condition
// number above 1e8.
PPEstimate estimate_principal_point(std::span<const ProjectiveLine> lines);

// Greedy removal of the worst line while its distance to the current fit
// exceeds threshold_px; refits after each removal and never drops below two
// lines. Fewer than three lines are returned unchanged.
OutlierSplit flag_outliers(std::span<const ProjectiveLine> lines, double threshold_px);

struct CalibrationOptions {
  double outlier_threshold_px = 3.0;
  DirectionPair direction{};
  unsigned workers = 1;  // per-view fan-out
};

struct ViewLine {
  std::size_t view = 0;
  PrincipalLine line;
};

struct SkippedView {
  std::size_t view = 0;
  ErrorCode reason = ErrorCode::DegenerateConfiguration;
  std::string message;
};

struct CalibrationResult {
  PPEstimate estimate;  // rejected holds view indices
  std::vector<ViewLine> lines;
  std::vector<SkippedView> skipped;
};

// estimate_homography -> pl_auto per view, then flag_outliers and
// estimate_principal_point. Views whose homography or principal line cannot
// be formed are skipped. Throws InsufficientViews when fewer than two
// principal lines remain.
CalibrationResult calibrate(std::span<const CorrespondenceSet> views, const CalibrationOptions& opts = {});

}  // namespace plc
