#pragma once

#include "segrec/parse_error.hpp"
#include "segrec/realizer.hpp"
#include "segrec/reduction.hpp"

#include <optional>
#include <string>

namespace segrec {

// Text formats. Rationals travel as "num/den" strings; every writer emits
// sorted keys and a trailing newline, so equal values give identical bytes.

/// { "n": 3, "swaps": [1,2,1] }
std::string wiring_to_json(const WiringDiagram& w);
WiringDiagram wiring_from_json(const std::string& text);

/// { "lines": [{"slope":"1/1","intercept":"0/1"}, ...] }
std::string lines_to_json(const LineArrangement& L);
LineArrangement lines_from_json(const std::string& text);

/// { "vertices": [{"label":"pl:1"}, ...], "edges": [["pl:1","pl:2"], ...] }
std::string graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const std::string& text);

/// Graph format plus "kind", "n", "k", "wiring", a "roles" table keyed by
/// label, "cycleOrder", "leftBoundaryOrder" and "rightBoundaryOrder".
std::string artifact_to_json(const ReductionArtifact& art);

/// Rebuilds the reduction from the embedded wiring when the file carries one;
/// throws ParseError if the stored graph disagrees with the rebuilt one.
std::optional<ReductionArtifact> artifact_from_json(const std::string& text);

/// { "kind": "unit_segments", "objects": [{"vertex":..,"anchor":[x,y],"direction":[x,y]}] }
/// or { "kind": "polylines", "k": 2, "objects": [{"vertex":..,"points":[[x,y],...]}] }
std::string realization_to_json(const Realization& r);
Realization realization_from_json(const std::string& text);

/// SVG 1.1 drawing; the viewBox is the bounding box padded by 5% on each side.
std::string render_svg(const Realization& r, double scale = 400);

}  // namespace segrec
