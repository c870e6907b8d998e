#include "plc/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <sstream>

#include <Eigen/Dense>

namespace plc {
namespace {

constexpr double kNullSpaceGap = 1e-9;
constexpr double kMaxConditionNumber = 1e8;

// Similarity moving the centroid to the origin with mean distance sqrt(2).
Eigen::Matrix3d conditioning_transform(const std::vector<Eigen::Vector2d>& pts) {
  Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
  for (const auto& p : pts) centroid += p;
  centroid /= static_cast<double>(pts.size());
  double mean_dist = 0.0;
  for (const auto& p : pts) mean_dist += (p - centroid).norm();
  mean_dist /= static_cast<double>(pts.size());
  if (!(mean_dist > 0.0) || !std::isfinite(mean_dist)) {
    throw Error(ErrorCode::DegenerateConfiguration, "all points coincide");
  }
  const double s = std::sqrt(2.0) / mean_dist;
  Eigen::Matrix3d T;
  T << s, 0, -s * centroid.x(), 0, s, -s * centroid.y(), 0, 0, 1;
  return T;
}

struct LineFit {
  Eigen::Vector2d point;
  std::vector<double> residuals;  // signed distances
};

LineFit fit_point(std::span<const ProjectiveLine> lines, std::span<const std::size_t> subset) {
  Eigen::Matrix2d normal = Eigen::Matrix2d::Zero();
  Eigen::Vector2d rhs = Eigen::Vector2d::Zero();
  std::vector<ProjectiveLine> used;
  used.reserve(subset.size());
  for (std::size_t i : subset) {
    const ProjectiveLine l = normalize_line(lines[i]);
    const Eigen::Vector2d n(l.a, l.b);
    normal += n * n.transpose();
    rhs -= l.c * n;
    used.push_back(l);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(normal);
  const double lo = eig.eigenvalues()(0);
  const double hi = eig.eigenvalues()(1);
  if (!(lo > 0.0) || hi / lo > kMaxConditionNumber) {
    std::ostringstream msg;
    msg << "normal matrix eigenvalues (" << lo << ", " << hi << "); lines are near-parallel";
    throw Error(ErrorCode::DegenerateLines, msg.str());
  }
  LineFit fit{normal.ldlt().solve(rhs), {}};
  fit.residuals.reserve(used.size());
  for (const auto& l : used) fit.residuals.push_back(l.a * fit.point.x() + l.b * fit.point.y() + l.c);
  return fit;
}

std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

}  // namespace

Homography estimate_homography(const CorrespondenceSet& c) {
  if (c.plane.size() != c.image.size()) {
    throw Error(ErrorCode::PreconditionViolation, "plane and image point counts differ");
  }
  if (c.plane.size() < 4) {
    throw Error(ErrorCode::PreconditionViolation, "at least four correspondences are required");
  }
  const Eigen::Matrix3d Tp = conditioning_transform(c.plane);
  const Eigen::Matrix3d Ti = conditioning_transform(c.image);

  const auto n = static_cast<Eigen::Index>(c.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(std::max<Eigen::Index>(2 * n, 9), 9);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Vector3d X = Tp * c.plane[static_cast<std::size_t>(i)].homogeneous();
    const Eigen::Vector3d x = Ti * c.image[static_cast<std::size_t>(i)].homogeneous();
    const double u = x.x() / x.z();
    const double v = x.y() / x.z();
    A.row(2 * i) << -X.x(), -X.y(), -X.z(), 0, 0, 0, u * X.x(), u * X.y(), u * X.z();
    A.row(2 * i + 1) << 0, 0, 0, -X.x(), -X.y(), -X.z(), v * X.x(), v * X.y(), v * X.z();
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  if (!(s(7) > kNullSpaceGap * s(0))) {
    std::ostringstream msg;
    msg << "second-smallest singular value " << s(7) << " vs largest " << s(0)
        << "; the homography is not determined (collinear or repeated points?)";
    throw Error(ErrorCode::DegenerateConfiguration, msg.str());
  }
  const Eigen::VectorXd h = svd.matrixV().col(8);
  Eigen::Matrix3d Hn;
  Hn << h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), h(8);
  return Homography::from_matrix(Ti.inverse() * Hn * Tp).canonical();
}

PPEstimate estimate_principal_point(std::span<const ProjectiveLine> lines) {
  if (lines.size() < 2) {
    throw Error(ErrorCode::PreconditionViolation, "at least two lines are required");
  }
  const auto all = iota_indices(lines.size());
  const LineFit fit = fit_point(lines, all);
  double ss = 0.0;
  for (double r : fit.residuals) ss += r * r;
  PPEstimate est;
  est.u = fit.point.x();
  est.v = fit.point.y();
  est.rms_residual = std::sqrt(ss / static_cast<double>(lines.size()));
  est.n_lines_used = lines.size();
  return est;
}

OutlierSplit flag_outliers(std::span<const ProjectiveLine> lines, double threshold_px) {
  OutlierSplit split{iota_indices(lines.size()), {}};
  if (lines.size() < 3) return split;
  while (split.kept.size() > 2) {
    std::optional<LineFit> fit;
    try {
      fit = fit_point(lines, split.kept);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateLines) throw;
      break;
    }
    std::size_t worst = 0;
    for (std::size_t k = 1; k < fit->residuals.size(); ++k) {
      if (std::abs(fit->residuals[k]) > std::abs(fit->residuals[worst])) worst = k;
    }
    if (!(std::abs(fit->residuals[worst]) > threshold_px)) break;
    split.rejected.push_back(split.kept[worst]);
    split.kept.erase(split.kept.begin() + static_cast<std::ptrdiff_t>(worst));
  }
  return split;
}

CalibrationResult calibrate(std::span<const CorrespondenceSet> views, const CalibrationOptions& opts) {
  if (views.size() < 2) {
    throw Error(ErrorCode::InsufficientViews, "at least two views are required");
  }

  struct Outcome {
    std::optional<PrincipalLine> line;
    std::optional<SkippedView> skipped;
  };
  auto process = [&](std::size_t i) {
    Outcome out;
    try {
      out.line = pl_auto(estimate_homography(views[i]), opts.direction);
    } catch (const Error& e) {
      out.skipped = SkippedView{i, e.code(), e.detail()};
    }
    return out;
  };

  std::vector<Outcome> outcomes(views.size());
  const std::size_t workers = std::clamp<std::size_t>(opts.workers, 1, views.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < views.size(); ++i) outcomes[i] = process(i);
  } else {
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < views.size(); i += workers) outcomes[i] = process(i);
      }));
    }
    for (auto& j : jobs) j.get();
  }

  CalibrationResult result;
  for (auto& o : outcomes) {
    if (o.line) {
      result.lines.push_back(ViewLine{static_cast<std::size_t>(&o - outcomes.data()), *o.line});
    } else {
      result.skipped.push_back(*o.skipped);
    }
  }
  if (result.lines.size() < 2) {
    std::ostringstream msg;
    msg << result.lines.size() << " usable principal line(s) out of " << views.size() << " views";
    throw Error(ErrorCode::InsufficientViews, msg.str());
  }

  std::vector<ProjectiveLine> lines;
  lines.reserve(result.lines.size());
  for (const auto& vl : result.lines) lines.push_back(vl.line.line);

  const OutlierSplit split = flag_outliers(lines, opts.outlier_threshold_px);
  std::vector<ProjectiveLine> kept;
  kept.reserve(split.kept.size());
  for (std::size_t k : split.kept) kept.push_back(lines[k]);

  result.estimate = estimate_principal_point(kept);
  for (std::size_t r : split.rejected) result.estimate.rejected.push_back(result.lines[r].view);
  std::sort(result.estimate.rejected.begin(), result.estimate.rejected.end());
  return result;
}

}  // namespace plc
