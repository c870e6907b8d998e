#include "plc/equiv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <string>
#include <thread>

#include <gmpxx.h>

#include "plc/formulas.hpp"
#include "plc/principal_line.hpp"
#include "plc/random.hpp"

namespace plc {
namespace {

using Rational = mpq_class;
using RationalEntries = std::array<Rational, 9>;

constexpr std::size_t kMaxAttemptsPerTrial = 1000;

double max_abs(const formulas::QuadAxis<double>& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2]), std::abs(v[3])});
}

DirectionPair sample_direction(rng::CounterRng& rng, double min_component) {
  for (;;) {
    const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double a = std::cos(t);
    const double b = std::sin(t);
    if (std::abs(a) >= min_component && std::abs(b) >= min_component) return DirectionPair(a, b, min_component);
  }
}

Rational sample_rational(rng::CounterRng& rng) {
  Rational q(static_cast<long>(rng.integer(-9, 9)), static_cast<unsigned long>(rng.integer(1, 9)));
  q.canonicalize();
  return q;
}

struct ExactOutcome {
  std::optional<Guard> guard;
  double discrepancy = 0.0;
};

// Both routes over Q. The second-pair direction (a, b) is an integer vector.
ExactOutcome exact_trial(const RationalEntries& h, const Rational& a, const Rational& b) {
  const Rational &h1 = h[0], &h2 = h[1], &h3 = h[2], &h4 = h[3], &h5 = h[4], &h6 = h[5], &h7 = h[6], &h8 = h[7],
                 &h9 = h[8];
  const Rational det = h1 * (h5 * h9 - h6 * h8) - h2 * (h4 * h9 - h6 * h7) + h3 * (h4 * h8 - h5 * h7);
  if (det == 0) return {Guard::Det};
  if (h7 == 0) return {Guard::H7};
  if (h8 == 0) return {Guard::H8};
  const Rational w3 = a * h7 + b * h8;
  const Rational w4 = -b * h7 + a * h8;
  if (w3 == 0) return {Guard::H7PlusH8};
  if (w4 == 0) return {Guard::H7MinusH8};

  const formulas::QuadAxis<Rational> m{h1 / h7, h2 / h8, (a * h1 + b * h2) / w3, (-b * h1 + a * h2) / w4};
  const formulas::QuadAxis<Rational> n{h4 / h7, h5 / h8, (a * h4 + b * h5) / w3, (-b * h4 + a * h5) / w4};
  if (formulas::ovp_denominator(m) == 0) return {Guard::DenomM};
  if (formulas::ovp_denominator(n) == 0) return {Guard::DenomN};

  const auto lh = formulas::principal_line_from_entries(h);
  const auto lo = formulas::principal_line_from_ovps(m, n);
  const Rational cross[3] = {lh.a * lo.b - lo.a * lh.b, lh.a * lo.c - lo.a * lh.c, lh.b * lo.c - lo.b * lh.c};
  ExactOutcome out;
  for (const auto& r : cross) out.discrepancy = std::max(out.discrepancy, std::abs(r.get_d()));
  // get_d() can round a tiny nonzero residual to 0; keep the verdict exact.
  if (out.discrepancy == 0.0 && (cross[0] != 0 || cross[1] != 0 || cross[2] != 0)) {
    out.discrepancy = std::numeric_limits<double>::denorm_min();
  }
  return out;
}

EquivalenceReport fuzz_shard(const FuzzOptions& opts, std::uint64_t seed, std::size_t trials) {
  EquivalenceReport report;
  report.mode = opts.mode;
  report.tolerance = opts.mode == VerifyMode::ExactRational ? 0.0 : opts.tolerance;
  rng::CounterRng rng(seed);

  const std::size_t max_attempts = std::max<std::size_t>(trials, 1) * kMaxAttemptsPerTrial;
  for (std::size_t attempt = 0; report.trials < trials && attempt < max_attempts; ++attempt) {
    if (opts.mode == VerifyMode::Float) {
      Homography::Entries h;
      for (auto& v : h) v = rng.uniform(-1.0, 1.0);
      const DirectionPair dir =
          opts.random_direction ? sample_direction(rng, opts.direction_min) : DirectionPair{};
      evaluate_trial(report, Homography(h), dir, opts.guards);
      continue;
    }

    RationalEntries h;
    for (auto& v : h) v = sample_rational(rng);
    Rational a(1), b(1);
    if (opts.random_direction) {
      do {
        a = static_cast<long>(rng.integer(-9, 9));
        b = static_cast<long>(rng.integer(-9, 9));
      } while (a == 0 || b == 0);
    }
    if (std::all_of(h.begin(), h.end(), [](const Rational& q) { return q == 0; })) {
      report.reject(Guard::Det);
      continue;
    }
    const ExactOutcome out = exact_trial(h, a, b);
    if (out.guard) {
      report.reject(*out.guard);
      continue;
    }
    Homography::Entries approx;
    std::transform(h.begin(), h.end(), approx.begin(), [](const Rational& q) { return q.get_d(); });
    report.record(Homography(approx), DirectionPair(a.get_d(), b.get_d(), 0.0), out.discrepancy);
  }
  return report;
}

}  // namespace

std::string_view mode_name(VerifyMode m) noexcept {
  return m == VerifyMode::ExactRational ? "exact" : "float";
}

std::string_view guard_name(Guard g) noexcept {
  switch (g) {
    case Guard::Det: return "det";
    case Guard::H7: return "h7";
    case Guard::H8: return "h8";
    case Guard::H7PlusH8: return "h7+h8";
    case Guard::H7MinusH8: return "h7-h8";
    case Guard::DenomM: return "denom_m";
    case Guard::DenomN: return "denom_n";
  }
  return "unknown";
}

std::optional<Guard> failed_guard(const Homography& H, const DirectionPair& dir, const GuardThresholds& g) {
  const Homography canon = H.canonical();
  if (!(std::abs(canon.det()) >= g.det)) return Guard::Det;
  const double h7 = canon[6];
  const double h8 = canon[7];
  if (!(std::abs(h7) >= g.h)) return Guard::H7;
  if (!(std::abs(h8) >= g.h)) return Guard::H8;
  const double s = std::max(std::abs(dir.a()), std::abs(dir.b()));
  if (!(std::abs(dir.a() * h7 + dir.b() * h8) / s >= g.h)) return Guard::H7PlusH8;
  if (!(std::abs(-dir.b() * h7 + dir.a() * h8) / s >= g.h)) return Guard::H7MinusH8;

  const OvpQuad quad = ovps_from_columns(canon, dir);
  formulas::QuadAxis<double> m{};
  formulas::QuadAxis<double> n{};
  for (std::size_t i = 0; i < 4; ++i) {
    m[i] = quad.pv[i].x / quad.pv[i].w;
    n[i] = quad.pv[i].y / quad.pv[i].w;
  }
  if (!(std::abs(formulas::ovp_denominator(m)) >= g.denom * max_abs(m))) return Guard::DenomM;
  if (!(std::abs(formulas::ovp_denominator(n)) >= g.denom * max_abs(n))) return Guard::DenomN;
  return std::nullopt;
}

std::size_t EquivalenceReport::rejected() const noexcept {
  std::size_t total = 0;
  for (std::size_t c : guards) total += c;
  return total;
}

void EquivalenceReport::record(const Homography& H, const DirectionPair& dir, double discrepancy) {
  ++trials;
  max_discrepancy = std::max(max_discrepancy, discrepancy);
  if (discrepancy > tolerance || std::isnan(discrepancy)) {
    failures.push_back(Failure{H.entries(), dir.a(), dir.b(), discrepancy});
  }
}

void EquivalenceReport::merge(const EquivalenceReport& other) {
  trials += other.trials;
  max_discrepancy = std::max(max_discrepancy, other.max_discrepancy);
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (std::size_t i = 0; i < kGuardCount; ++i) guards[i] += other.guards[i];
}

double check_once(const Homography& H, const DirectionPair& dir, const GuardThresholds& g) {
  if (const auto guard = failed_guard(H, dir, g)) {
    throw Error(ErrorCode::GuardRejected, std::string(guard_name(*guard)));
  }
  const PrincipalLine by_h = pl_from_homography(H);
  const PrincipalLine by_ovp = pl_from_ovps(ovps_from_columns(H, dir));
  return line_discrepancy(by_h.line, by_ovp.line);
}

double check_infinite(const Homography& H) {
  const OvpQuad quad = ovps_from_columns(H);
  const PointClass c1 = classify_point(quad.pv1());
  const PointClass c2 = classify_point(quad.pv2());
  const auto* inf1 = std::get_if<PointAtInfinity>(&c1);
  const auto* inf2 = std::get_if<PointAtInfinity>(&c2);
  if ((inf1 == nullptr) == (inf2 == nullptr)) {
    throw Error(ErrorCode::PreconditionViolation, "exactly one of pv1, pv2 must be at infinity");
  }
  const PrincipalLine limit = inf1 != nullptr ? pl_from_ovps_infinite_pv1(inf1->dx, inf1->dy, quad.pv2())
                                              : pl_from_ovps_infinite_pv1(inf2->dx, inf2->dy, quad.pv1());
  return line_discrepancy(pl_from_homography(H).line, limit.line);
}

bool evaluate_trial(EquivalenceReport& report, const Homography& H, const DirectionPair& dir,
                    const GuardThresholds& g) {
  if (const auto guard = failed_guard(H, dir, g)) {
    report.reject(*guard);
    return false;
  }
  report.record(H, dir, check_once(H, dir, g));
  return true;
}

EquivalenceReport fuzz(const FuzzOptions& opts) {
  const unsigned shards = std::max(1U, opts.shards);
  EquivalenceReport merged;
  merged.mode = opts.mode;
  merged.tolerance = opts.mode == VerifyMode::ExactRational ? 0.0 : opts.tolerance;
  if (shards == 1) {
    merged.merge(fuzz_shard(opts, opts.seed, opts.trials));
    return merged;
  }
  std::vector<EquivalenceReport> parts(shards);
  std::vector<std::thread> workers;
  for (unsigned k = 0; k < shards; ++k) {
    const std::size_t n = opts.trials / shards + (k < opts.trials % shards ? 1 : 0);
    workers.emplace_back([&, k, n] { parts[k] = fuzz_shard(opts, rng::derive_seed(opts.seed, k), n); });
  }
  for (auto& w : workers) w.join();
  for (const auto& p : parts) merged.merge(p);
  return merged;
}

}  // namespace plc
