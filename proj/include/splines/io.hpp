#pragma once

// JSON forms of graphs, splines, generating sets, pinwheels and reports.

#include <json.hpp>

#include "splines/classical.hpp"
#include "splines/oracle.hpp"

namespace splines::io {

using nlohmann::json;

/// {"vertices": [...], "edges": [{"u", "v", "label", "factors"?}], "nvars"?}.
/// Without "nvars" the ring has as many variables as the labels mention.
GraphPtr graph_from_json(const json& j);
json graph_to_json(const EdgeLabeledGraph& g);

/// {"entries": {"<vertex>": "<poly>"}}; raw entries, GKM not checked.
std::vector<Poly> entries_from_json(const EdgeLabeledGraph& g, const json& j);
json spline_to_json(const Spline& s);

GeneratingSet generating_set_from_json(const GraphPtr& g, const json& j);
json generating_set_to_json(const GeneratingSet& b);

/// {"center": [qx, qy], "rays": [["<linear form>"], ...], "r": 1}.
Pinwheel pinwheel_from_json(const json& j);

json certification_to_json(const std::vector<CertificationRow>& rows);
json pinwheel_report_to_json(const PinwheelReport& r);

json read_file(const std::string& path);

}  // namespace splines::io
