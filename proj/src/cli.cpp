#include "plc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "plc/calibration.hpp"
#include "plc/equiv.hpp"
#include "plc/json_io.hpp"
#include "plc/principal_line.hpp"
#include "plc/synth.hpp"
#include "plc/vanishing.hpp"

namespace plc::cli {
namespace {

constexpr double kDefaultTolerance = 1e-9;

json::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return json::parse(text.str());
}

DirectionPair direction_from(const std::vector<double>& ab) {
  return ab.empty() ? DirectionPair{} : DirectionPair(ab.at(0), ab.at(1));
}

void emit(std::ostream& out, const json::json& j) { out << j.dump(2) << '\n'; }

struct Options {
  std::string homography_file;
  std::string method = "homography";
  std::vector<double> dir;
  std::string route = "columns";

  std::string views_file;
  double outlier_threshold = 3.0;
  unsigned jobs = 1;

  int poses = 10;
  std::uint64_t seed = 1;
  double noise = 0.0;
  std::vector<double> pp{320.0, 240.0};
  double focal = 800.0;
  std::vector<double> grid{10.0, 10.0, 1.0};
  std::vector<double> tilt{20.0, 60.0};
  std::string spec_file;
  std::string out_file;

  std::size_t trials = 10000;
  std::uint64_t verify_seed = 42;
  bool exact = false;
  bool random_dir = false;
  std::optional<double> tolerance;
};

int cmd_pl(const Options& o, std::ostream& out) {
  const Homography H = json::decode_homography(read_json_file(o.homography_file));
  const DirectionPair dir = direction_from(o.dir);
  PrincipalLine pl;
  if (o.method == "homography") {
    pl = pl_from_homography(H);
  } else if (o.method == "ovp") {
    pl = pl_from_ovps(ovps_from_columns(H, dir));
  } else {
    pl = pl_auto(H, dir);
  }
  emit(out, json::encode(pl));
  return kOk;
}

int cmd_vps(const Options& o, std::ostream& out) {
  const Homography H = json::decode_homography(read_json_file(o.homography_file));
  const OvpQuad quad = o.route == "edges" ? ovps_from_square_edges(H) : ovps_from_columns(H, direction_from(o.dir));
  emit(out, json::encode(quad));
  return kOk;
}

int cmd_calibrate(const Options& o, std::ostream& out) {
  const auto views = json::decode_views(read_json_file(o.views_file));
  CalibrationOptions opts;
  opts.outlier_threshold_px = o.outlier_threshold;
  opts.direction = direction_from(o.dir);
  opts.workers = o.jobs;
  emit(out, json::encode(calibrate(views, opts)));
  return kOk;
}

int cmd_synth(const Options& o, std::ostream& out) {
  ScenarioSpec spec;
  if (!o.spec_file.empty()) {
    spec = json::decode_scenario_spec(read_json_file(o.spec_file));
  } else {
    spec.poses = o.poses;
    spec.seed = o.seed;
    spec.noise_sigma = o.noise;
    spec.cx = o.pp.at(0);
    spec.cy = o.pp.at(1);
    spec.focal = o.focal;
    spec.grid = PatternGrid{static_cast<int>(o.grid.at(0)), static_cast<int>(o.grid.at(1)), o.grid.at(2)};
    spec.tilt_min_deg = o.tilt.at(0);
    spec.tilt_max_deg = o.tilt.at(1);
  }
  const Scenario sc = generate_scenario(spec);
  const json::json views = json::encode_views(sc.views);
  if (o.out_file.empty()) {
    emit(out, views);
    return kOk;
  }
  std::ofstream file(o.out_file);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot write '" + o.out_file + "'");
  file << views.dump() << '\n';
  if (!file) throw Error(ErrorCode::InvalidInput, "failed writing '" + o.out_file + "'");
  emit(out, json::json{{"out", o.out_file}, {"views", sc.views.size()}, {"spec", json::encode(spec)}});
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  FuzzOptions opts;
  opts.trials = o.trials;
  opts.seed = o.verify_seed;
  opts.tolerance = o.tolerance.value_or(default_tolerance());
  opts.mode = o.exact ? VerifyMode::ExactRational : VerifyMode::Float;
  opts.random_direction = o.random_dir;
  opts.shards = o.jobs;
  const EquivalenceReport report = fuzz(opts);
  emit(out, json::encode(report));
  return report.passed() ? kOk : kVerificationFailed;
}

}  // namespace

double default_tolerance() {
  const char* env = std::getenv("PLC_TOLERANCE");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v >= 0.0)) {
    throw Error(ErrorCode::InvalidInput, std::string("PLC_TOLERANCE='") + env + "' is not a non-negative number");
  }
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Principal-line toolkit: principal lines, vanishing points, calibration, synthetic data, verification",
               "plc"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 domain error, 2 usage error, 3 input error, 4 verification failed.\n"
      "PLC_TOLERANCE overrides the default verify tolerance (1e-9).");

  const auto add_dir = [&](CLI::App* sub) {
    sub->add_option("--dir", o.dir, "Second-pair direction A,B (default 1,1)")->delimiter(',')->expected(2);
  };

  auto* pl = app.add_subcommand("pl", "Principal line of a homography");
  pl->add_option("--homography", o.homography_file, "JSON file {\"h\": [h1..h9]}")->required();
  pl->add_option("--method", o.method, "homography | ovp | auto")
      ->check(CLI::IsMember({"homography", "ovp", "auto"}))
      ->capture_default_str();
  add_dir(pl);

  auto* vps = app.add_subcommand("vps", "Orthogonal vanishing points of a homography");
  vps->add_option("--homography", o.homography_file, "JSON file {\"h\": [h1..h9]}")->required();
  vps->add_option("--route", o.route, "columns | edges")
      ->check(CLI::IsMember({"columns", "edges"}))
      ->capture_default_str();
  add_dir(vps);

  auto* cal = app.add_subcommand("calibrate", "Principal point from multiple views");
  cal->add_option("--views", o.views_file, "JSON file {\"views\": [...]}")->required();
  cal->add_option("--outlier-threshold", o.outlier_threshold, "Outlier distance in pixels")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cal->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  add_dir(cal);

  auto* syn = app.add_subcommand("synth", "Synthetic calibration views");
  syn->add_option("--spec", o.spec_file, "Scenario spec JSON (replaces the flags below)");
  syn->add_option("--poses", o.poses, "Number of views")->check(CLI::PositiveNumber)->capture_default_str();
  syn->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  syn->add_option("--noise", o.noise, "Pixel noise sigma")->check(CLI::NonNegativeNumber)->capture_default_str();
  syn->add_option("--pp", o.pp, "Principal point CX,CY")->delimiter(',')->expected(2)->capture_default_str();
  syn->add_option("--focal", o.focal, "Focal length in pixels")->check(CLI::PositiveNumber)->capture_default_str();
  syn->add_option("--grid", o.grid, "Pattern grid ROWS,COLS,SPACING")->delimiter(',')->expected(3)->capture_default_str();
  syn->add_option("--tilt", o.tilt, "Tilt range MIN,MAX degrees")->delimiter(',')->expected(2)->capture_default_str();
  syn->add_option("--out", o.out_file, "Write the views JSON here (stdout when omitted)");

  auto* ver = app.add_subcommand("verify", "Randomized check that both principal-line routes agree");
  ver->add_option("--trials", o.trials, "Guarded trials")->check(CLI::PositiveNumber)->capture_default_str();
  ver->add_option("--seed", o.verify_seed, "RNG seed")->capture_default_str();
  ver->add_flag("--exact", o.exact, "Exact rational arithmetic");
  ver->add_flag("--random-dir", o.random_dir, "Random second-pair directions (|a|, |b| >= 0.1)");
  ver->add_option("--tolerance", o.tolerance, "Float-mode tolerance (default 1e-9 or PLC_TOLERANCE)")
      ->check(CLI::NonNegativeNumber);
  ver->add_option("--jobs", o.jobs, "Worker threads (shards)")->check(CLI::PositiveNumber)->capture_default_str();

  std::vector<std::string> argv_store{"plc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (pl->parsed()) return cmd_pl(o, out);
    if (vps->parsed()) return cmd_vps(o, out);
    if (cal->parsed()) return cmd_calibrate(o, out);
    if (syn->parsed()) return cmd_synth(o, out);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidInput ? kInputError : kDomainError;
  }
}

}  // namespace plc::cli
