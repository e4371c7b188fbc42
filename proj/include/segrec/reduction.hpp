#pragma once

#include "segrec/arrangement.hpp"
#include "segrec/graph.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace segrec {

class InvalidK : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ReductionKind { Unit, Polyline };

struct Roles {
    std::vector<VertexLabel> important;  // pseudolines and twins
    std::vector<VertexLabel> probes;
    std::vector<VertexLabel> connectors_left;
    std::vector<VertexLabel> connectors_right;
    std::vector<VertexLabel> cycle;  // unit case only
    std::vector<VertexLabel> frame;  // polyline case only
};

struct ReductionArtifact {
    ReductionKind kind = ReductionKind::Unit;
    int n = 0;
    int k = 0;
    WiringDiagram wiring;
    LabeledGraph graph;
    Roles roles;
    /// Unit case: the enclosing cycle. Polyline case: the outer frame cycle.
    std::vector<VertexLabel> cycle_order;
    /// Connector hosts, top to bottom, at the left and right boundary.
    std::vector<VertexLabel> left_boundary_order;
    std::vector<VertexLabel> right_boundary_order;

    /// Polyline case: number of arcs in chain i (1-based).
    [[nodiscard]] int chain_length(int i) const;
    /// Polyline case: lane index used by pseudoline i (its top-to-bottom position at the right end).
    [[nodiscard]] int lane_of(int pseudoline) const;
};

/// Top-to-bottom position (1-based) of each pseudoline at the right end; index 0 = pseudoline 1.
std::vector<int> right_positions(const WiringDiagram& w);

ReductionArtifact build_unit_reduction(const WiringDiagram& w);

ReductionArtifact build_polyline_reduction(const WiringDiagram& w, int k);

/// Graph distance between consecutive chain tops along the top chain.
inline constexpr int kTopChainDistance = 3;

/// Polyline case: the connectors of the outer frame cycle (left and right
/// connectors plus the outermost arcs of the inner chains).
std::set<VertexLabel> outer_frame_connectors(const ReductionArtifact& art);

/// Polyline case: the cycle bounding the region between chains i and i+1.
std::vector<VertexLabel> region_cycle(const ReductionArtifact& art, int i);

/// Vertices outside the frame that touch the given cycle.
std::set<VertexLabel> attached_non_frame(const ReductionArtifact& art, const std::vector<VertexLabel>& cycle);

}  // namespace segrec
