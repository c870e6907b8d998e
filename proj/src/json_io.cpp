#include "plc/json_io.hpp"

#include <string>

namespace plc::json {
namespace {

// Runs a decoder, mapping nlohmann's exceptions onto InvalidInput.
template <class F>
auto decoding(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed ") + what + ": " + e.what());
  }
}

json pair(double a, double b) { return json::array({a, b}); }

std::vector<Eigen::Vector2d> decode_pairs(const json& j) {
  std::vector<Eigen::Vector2d> out;
  out.reserve(j.size());
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::InvalidInput, "expected [x, y] pairs");
    out.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  }
  return out;
}

}  // namespace

json encode(const Homography& H) { return json{{"h", H.entries()}}; }

Homography decode_homography(const json& j) {
  return decoding("homography", [&] {
    const auto& h = j.at("h");
    if (!h.is_array() || h.size() != 9) throw Error(ErrorCode::InvalidInput, "\"h\" must hold 9 numbers");
    Homography::Entries e;
    for (std::size_t i = 0; i < 9; ++i) e[i] = h.at(i).get<double>();
    return Homography(e);
  });
}

json encode(const HomogeneousPoint2& p) { return json{{"x", p.x}, {"y", p.y}, {"w", p.w}}; }

HomogeneousPoint2 decode_point(const json& j) {
  return decoding("point", [&] {
    return HomogeneousPoint2(j.at("x").get<double>(), j.at("y").get<double>(), j.at("w").get<double>());
  });
}

json encode(const ProjectiveLine& l) {
  const ProjectiveLine n = normalize_line(l);
  return json{{"a", n.a}, {"b", n.b}, {"c", n.c}};
}

ProjectiveLine decode_line(const json& j) {
  return decoding("line", [&] {
    return ProjectiveLine(j.at("a").get<double>(), j.at("b").get<double>(), j.at("c").get<double>());
  });
}

json encode(const OvpQuad& q) {
  json pv = json::array();
  for (const auto& p : q.pv) pv.push_back(json::array({p.x, p.y, p.w}));
  return json{{"pv", pv}, {"dir", pair(q.orientation.a(), q.orientation.b())}};
}

OvpQuad decode_quad(const json& j) {
  return decoding("vanishing-point quad", [&] {
    const auto& pv = j.at("pv");
    if (!pv.is_array() || pv.size() != 4) throw Error(ErrorCode::InvalidInput, "\"pv\" must hold 4 points");
    OvpQuad q;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& p = pv.at(i);
      if (!p.is_array() || p.size() != 3) throw Error(ErrorCode::InvalidInput, "each point is [x, y, w]");
      q.pv[i] = HomogeneousPoint2(p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>());
    }
    if (j.contains("dir")) {
      const auto& d = j.at("dir");
      q.orientation = DirectionPair(d.at(0).get<double>(), d.at(1).get<double>());
    }
    return q;
  });
}

json encode(const PrincipalLine& pl) {
  json j = encode(pl.line);
  j["method"] = std::string(method_name(pl.method));
  return j;
}

json encode_views(const std::vector<CorrespondenceSet>& views) {
  json arr = json::array();
  for (const auto& v : views) {
    json plane = json::array();
    json image = json::array();
    for (const auto& p : v.plane) plane.push_back(pair(p.x(), p.y()));
    for (const auto& p : v.image) image.push_back(pair(p.x(), p.y()));
    arr.push_back(json{{"plane", plane}, {"image", image}});
  }
  return json{{"views", arr}};
}

std::vector<CorrespondenceSet> decode_views(const json& j) {
  return decoding("views document", [&] {
    std::vector<CorrespondenceSet> views;
    for (const auto& v : j.at("views")) {
      CorrespondenceSet c{decode_pairs(v.at("plane")), decode_pairs(v.at("image"))};
      if (c.plane.size() != c.image.size()) {
        throw Error(ErrorCode::InvalidInput, "view " + std::to_string(views.size()) + ": plane/image lengths differ");
      }
      views.push_back(std::move(c));
    }
    return views;
  });
}

json encode(const CalibrationResult& r) {
  json lines = json::array();
  for (const auto& vl : r.lines) {
    json l = encode(vl.line);
    l["view"] = vl.view;
    lines.push_back(l);
  }
  json skipped = json::array();
  for (const auto& s : r.skipped) {
    skipped.push_back(json{{"view", s.view}, {"error", std::string(error_name(s.reason))}, {"message", s.message}});
  }
  return json{{"pp", {{"u", r.estimate.u}, {"v", r.estimate.v}}},
              {"rms_residual", r.estimate.rms_residual},
              {"n_lines_used", r.estimate.n_lines_used},
              {"rejected", r.estimate.rejected},
              {"lines", lines},
              {"skipped", skipped}};
}

json encode(const ScenarioSpec& s) {
  return json{{"poses", s.poses},
              {"seed", s.seed},
              {"noise", s.noise_sigma},
              {"pp", pair(s.cx, s.cy)},
              {"focal", s.focal},
              {"grid", json::array({s.grid.rows, s.grid.cols, s.grid.spacing})},
              {"tilt", pair(s.tilt_min_deg, s.tilt_max_deg)}};
}

ScenarioSpec decode_scenario_spec(const json& j) {
  return decoding("scenario spec", [&] {
    ScenarioSpec s;
    s.poses = j.value("poses", s.poses);
    s.seed = j.value("seed", s.seed);
    s.noise_sigma = j.value("noise", s.noise_sigma);
    s.focal = j.value("focal", s.focal);
    if (j.contains("pp")) {
      s.cx = j.at("pp").at(0).get<double>();
      s.cy = j.at("pp").at(1).get<double>();
    }
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      s.grid = PatternGrid{g.at(0).get<int>(), g.at(1).get<int>(), g.at(2).get<double>()};
    }
    if (j.contains("tilt")) {
      s.tilt_min_deg = j.at("tilt").at(0).get<double>();
      s.tilt_max_deg = j.at("tilt").at(1).get<double>();
    }
    return s;
  });
}

json encode(const EquivalenceReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back(json{{"h", f.h}, {"dir", pair(f.dir_a, f.dir_b)}, {"discrepancy", f.discrepancy}});
  }
  json guards = json::object();
  for (std::size_t i = 0; i < kGuardCount; ++i) guards[std::string(guard_name(static_cast<Guard>(i)))] = r.guards[i];
  return json{{"trials", r.trials},
              {"max_discrepancy", r.max_discrepancy},
              {"failures", failures},
              {"guards", guards},
              {"mode", std::string(mode_name(r.mode))},
              {"tolerance", r.tolerance}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace plc::json
