#pragma once

#include "segrec/geom.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace segrec {

enum class Kind {
    Pseudoline,
    Twin,
    Probe,
    ConnectorLeft,
    ConnectorRight,
    CycleArc,
    ChainArc,
    TopChainArc,
    BottomChainArc,
    Vertex,  // plain numbered vertex for hand-written graphs
};

enum class Side { None, Above, Below };

/// Role label of a vertex. Canonical text form:
///   pl:i  twin:i  probe:i:above|below:t  conL:<host>  conR:<host>
///   cyc:i  chain:i:j  top:j  bot:j  v:i
/// where <host> is a pl, twin or probe label. All indices are 1-based.
struct VertexLabel {
    Kind kind = Kind::Vertex;
    Kind host = Kind::Vertex;  // connectors only
    int a = 0;
    int b = 0;
    Side side = Side::None;

    static VertexLabel pseudoline(int i) { return {Kind::Pseudoline, Kind::Vertex, i}; }
    static VertexLabel twin(int i) { return {Kind::Twin, Kind::Vertex, i}; }
    static VertexLabel probe(int i, Side s, int depth) { return {Kind::Probe, Kind::Vertex, i, depth, s}; }
    static VertexLabel connector_left(const VertexLabel& h) { return {Kind::ConnectorLeft, h.kind, h.a, h.b, h.side}; }
    static VertexLabel connector_right(const VertexLabel& h) { return {Kind::ConnectorRight, h.kind, h.a, h.b, h.side}; }
    static VertexLabel cycle_arc(int i) { return {Kind::CycleArc, Kind::Vertex, i}; }
    static VertexLabel chain_arc(int chain, int j) { return {Kind::ChainArc, Kind::Vertex, chain, j}; }
    static VertexLabel top_arc(int j) { return {Kind::TopChainArc, Kind::Vertex, j}; }
    static VertexLabel bottom_arc(int j) { return {Kind::BottomChainArc, Kind::Vertex, j}; }
    static VertexLabel vertex(int i) { return {Kind::Vertex, Kind::Vertex, i}; }

    [[nodiscard]] bool is_connector() const {
        return kind == Kind::ConnectorLeft || kind == Kind::ConnectorRight;
    }
    /// Host label of a connector.
    [[nodiscard]] VertexLabel host_label() const { return {host, Kind::Vertex, a, b, side}; }

    [[nodiscard]] std::string str() const;
    static VertexLabel parse(const std::string& text);

    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

using Edge = std::pair<VertexLabel, VertexLabel>;

/// Simple undirected graph on labeled vertices. Edges are stored with the
/// smaller label first.
class LabeledGraph {
public:
    void add_vertex(const VertexLabel& v);
    /// Adds both endpoints if missing. Throws on loops.
    void add_edge(const VertexLabel& u, const VertexLabel& v);
    void remove_edge(const VertexLabel& u, const VertexLabel& v);
    void remove_vertex(const VertexLabel& v);

    [[nodiscard]] bool has_vertex(const VertexLabel& v) const { return adj_.count(v) != 0; }
    [[nodiscard]] bool has_edge(const VertexLabel& u, const VertexLabel& v) const;
    [[nodiscard]] const std::set<VertexLabel>& neighbors(const VertexLabel& v) const;
    [[nodiscard]] std::vector<VertexLabel> vertices() const;
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] std::size_t vertex_count() const { return adj_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edge_count_; }

    friend bool operator==(const LabeledGraph& g, const LabeledGraph& h) { return g.adj_ == h.adj_; }

private:
    std::map<VertexLabel, std::set<VertexLabel>> adj_;
    std::size_t edge_count_ = 0;
};

struct GraphDiff {
    std::vector<VertexLabel> missing_vertices;  // in expected, not in actual
    std::vector<VertexLabel> extra_vertices;
    std::vector<Edge> missing_edges;
    std::vector<Edge> extra_edges;

    [[nodiscard]] bool empty() const {
        return missing_vertices.empty() && extra_vertices.empty() && missing_edges.empty() &&
               extra_edges.empty();
    }
    [[nodiscard]] std::string str() const;
};

using ObjectMap = std::map<VertexLabel, Shape>;

LabeledGraph intersection_graph(const ObjectMap& objects);

/// Label-respecting equality. The diff is phrased relative to `expected`.
bool graphs_equal(const LabeledGraph& expected, const LabeledGraph& actual, GraphDiff* diff = nullptr);

bool is_induced_cycle(const LabeledGraph& g, const std::vector<VertexLabel>& cycle);

/// Connected components of the subgraph induced by `keep`.
std::vector<std::set<VertexLabel>> components(const LabeledGraph& g, const std::set<VertexLabel>& keep);

}  // namespace segrec
