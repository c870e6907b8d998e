#pragma once

// Executable check that the homography-route and vanishing-point-route
// principal lines coincide: randomized in double precision, and exactly over
// the rationals.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "plc/geometry.hpp"
#include "plc/vanishing.hpp"

namespace plc {

enum class VerifyMode { Float, ExactRational };

std::string_view mode_name(VerifyMode m) noexcept;  // "float" | "exact"

// Degeneracy classes screened before a trial is compared. The "h7+h8" and
// "h7-h8" classes are the third components of pv3 and pv4 (for a general
// direction, a h7 + b h8 and -b h7 + a h8 with max(|a|, |b|) = 1).
enum class Guard : std::size_t { Det, H7, H8, H7PlusH8, H7MinusH8, DenomM, DenomN };
inline constexpr std::size_t kGuardCount = 7;

std::string_view guard_name(Guard g) noexcept;

struct GuardThresholds {
  double det = 1e-3;    // |det| of canonical H
  double h = 1e-2;      // |h7|, |h8|, |h7 + h8|, |h7 - h8|
  double denom = 1e-2;  // |m1 + m2 - m3 - m4| relative to max |m_i|, same for n

  [[nodiscard]] GuardThresholds scaled(double factor) const { return {det * factor, h * factor, denom * factor}; }
};

// First guard H fails for this direction, if any.
std::optional<Guard> failed_guard(const Homography& H, const DirectionPair& dir, const GuardThresholds& g = {});

struct Failure {
  Homography::Entries h;
  double dir_a;
  double dir_b;
  double discrepancy;
};

struct EquivalenceReport {
  VerifyMode mode = VerifyMode::Float;
  double tolerance = 1e-9;
  std::size_t trials = 0;  // compared; guard rejections are counted separately
  double max_discrepancy = 0.0;
  std::vector<Failure> failures;
  std::array<std::size_t, kGuardCount> guards{};

  [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
  [[nodiscard]] std::size_t rejected() const noexcept;

  // Folds one compared trial in.
  void record(const Homography& H, const DirectionPair& dir, double discrepancy);
  void reject(Guard g) { ++guards[static_cast<std::size_t>(g)]; }
  // Associative and commutative up to the order of failures.
  void merge(const EquivalenceReport& other);
};

// Normalized-line infinity-norm distance between pl_from_homography(H) and
// pl_from_ovps(ovps_from_columns(H, dir)). Throws GuardRejected naming the
// violated guard.
double check_once(const Homography& H, const DirectionPair& dir = {}, const GuardThresholds& g = {});

// Same comparison against the limit form when exactly one of pv1, pv2 is at
// infinity. Throws PreconditionViolation otherwise.
double check_infinite(const Homography& H);

// Screens H against the guards and either records the discrepancy or counts
// the rejection. Returns true when the trial was compared.
bool evaluate_trial(EquivalenceReport& report, const Homography& H, const DirectionPair& dir,
                    const GuardThresholds& g = {});

struct FuzzOptions {
  std::size_t trials = 10000;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  VerifyMode mode = VerifyMode::Float;
  bool random_direction = false;  // otherwise (1, 1) / sqrt(2)
  double direction_min = 0.1;     // |a|, |b| floor for random directions
  GuardThresholds guards{};
  unsigned shards = 1;  // shard k draws from derive_seed(seed, k)
};

// Samples H entries uniformly in [-1, 1] (Float) or as p/q with
// |p| <= 9, 1 <= q <= 9 (ExactRational) until `trials` samples pass the
// guards. Exact mode compares line triples by cross-multiplication and
// records the largest |a1 b2 - a2 b1|-type residual, which is zero iff the
// lines agree.
EquivalenceReport fuzz(const FuzzOptions& opts);

}  // namespace plc
