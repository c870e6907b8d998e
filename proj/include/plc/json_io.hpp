#pragma once

// JSON encodings of the library types. Decoders throw Error(InvalidInput)
// on malformed documents.

#include <string>
#include <vector>

#include <json.hpp>

#include "plc/calibration.hpp"
#include "plc/equiv.hpp"
#include "plc/geometry.hpp"
#include "plc/principal_line.hpp"
#include "plc/synth.hpp"
#include "plc/vanishing.hpp"

namespace plc::json {

using nlohmann::json;

json encode(const Homography& H);  // {"h": [h1, ..., h9]}
Homography decode_homography(const json& j);

json encode(const HomogeneousPoint2& p);  // {"x":, "y":, "w":}
HomogeneousPoint2 decode_point(const json& j);

json encode(const ProjectiveLine& l);  // {"a":, "b":, "c":}, normalized
ProjectiveLine decode_line(const json& j);

json encode(const OvpQuad& q);  // {"pv": [[x, y, w] x 4], "dir": [a, b]}
OvpQuad decode_quad(const json& j);

json encode(const PrincipalLine& pl);  // {"a":, "b":, "c":, "method":}

// {"views": [{"plane": [[X, Y], ...], "image": [[u, v], ...]}, ...]}
json encode_views(const std::vector<CorrespondenceSet>& views);
std::vector<CorrespondenceSet> decode_views(const json& j);

// {"pp": {"u":, "v":}, "rms_residual":, "n_lines_used":, "rejected": [...],
//  "lines": [{"view":, "a":, "b":, "c":, "method":}, ...], "skipped": [...]}
json encode(const CalibrationResult& r);

// {"poses":, "seed":, "noise":, "pp": [cx, cy], "focal":, "grid": [rows, cols, spacing]}
// plus optional "tilt": [min_deg, max_deg].
json encode(const ScenarioSpec& s);
ScenarioSpec decode_scenario_spec(const json& j);

// {"trials":, "max_discrepancy":, "failures": [...], "guards": {...}, "mode":, "tolerance":}
json encode(const EquivalenceReport& r);

// Parses text; throws InvalidInput with the parser's message.
json parse(const std::string& text);

}  // namespace plc::json
