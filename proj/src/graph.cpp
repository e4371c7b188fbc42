#include "segrec/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace segrec {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_index(const std::string& s, const std::string& whole) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), ::isdigit))
        throw std::invalid_argument("bad vertex label: " + whole);
    int v = std::stoi(s);
    if (v < 1) throw std::invalid_argument("bad vertex label: " + whole);
    return v;
}

VertexLabel parse_simple(const std::vector<std::string>& t, const std::string& whole) {
    auto need = [&](std::size_t n) {
        if (t.size() != n) throw std::invalid_argument("bad vertex label: " + whole);
    };
    const std::string& k = t[0];
    if (k == "pl") return need(2), VertexLabel::pseudoline(parse_index(t[1], whole));
    if (k == "twin") return need(2), VertexLabel::twin(parse_index(t[1], whole));
    if (k == "cyc") return need(2), VertexLabel::cycle_arc(parse_index(t[1], whole));
    if (k == "top") return need(2), VertexLabel::top_arc(parse_index(t[1], whole));
    if (k == "bot") return need(2), VertexLabel::bottom_arc(parse_index(t[1], whole));
    if (k == "v") return need(2), VertexLabel::vertex(parse_index(t[1], whole));
    if (k == "chain")
        return need(3), VertexLabel::chain_arc(parse_index(t[1], whole), parse_index(t[2], whole));
    if (k == "probe") {
        need(4);
        Side s = t[2] == "above" ? Side::Above : t[2] == "below" ? Side::Below : Side::None;
        if (s == Side::None) throw std::invalid_argument("bad vertex label: " + whole);
        return VertexLabel::probe(parse_index(t[1], whole), s, parse_index(t[3], whole));
    }
    throw std::invalid_argument("bad vertex label: " + whole);
}

}  // namespace

std::string VertexLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Pseudoline: os << "pl:" << a; break;
        case Kind::Twin: os << "twin:" << a; break;
        case Kind::Probe: os << "probe:" << a << ':' << (side == Side::Above ? "above" : "below") << ':' << b; break;
        case Kind::ConnectorLeft: os << "conL:" << host_label().str(); break;
        case Kind::ConnectorRight: os << "conR:" << host_label().str(); break;
        case Kind::CycleArc: os << "cyc:" << a; break;
        case Kind::ChainArc: os << "chain:" << a << ':' << b; break;
        case Kind::TopChainArc: os << "top:" << a; break;
        case Kind::BottomChainArc: os << "bot:" << a; break;
        case Kind::Vertex: os << "v:" << a; break;
    }
    return os.str();
}

VertexLabel VertexLabel::parse(const std::string& text) {
    auto t = split(text, ':');
    if (t[0] == "conL" || t[0] == "conR") {
        std::vector<std::string> rest(t.begin() + 1, t.end());
        if (rest.empty()) throw std::invalid_argument("bad vertex label: " + text);
        VertexLabel h = parse_simple(rest, text);
        if (h.kind != Kind::Pseudoline && h.kind != Kind::Twin && h.kind != Kind::Probe)
            throw std::invalid_argument("connector host must be pl, twin or probe: " + text);
        return t[0] == "conL" ? connector_left(h) : connector_right(h);
    }
    return parse_simple(t, text);
}

void LabeledGraph::add_vertex(const VertexLabel& v) { adj_.try_emplace(v); }

void LabeledGraph::add_edge(const VertexLabel& u, const VertexLabel& v) {
    if (u == v) throw std::invalid_argument("loop at " + u.str());
    auto& nu = adj_[u];
    auto& nv = adj_[v];
    if (nu.insert(v).second) ++edge_count_;
    nv.insert(u);
}

void LabeledGraph::remove_edge(const VertexLabel& u, const VertexLabel& v) {
    auto it = adj_.find(u);
    if (it == adj_.end() || !it->second.erase(v)) return;
    adj_[v].erase(u);
    --edge_count_;
}

void LabeledGraph::remove_vertex(const VertexLabel& v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) return;
    for (const auto& w : it->second) adj_[w].erase(v);
    edge_count_ -= it->second.size();
    adj_.erase(it);
}

bool LabeledGraph::has_edge(const VertexLabel& u, const VertexLabel& v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<VertexLabel>& LabeledGraph::neighbors(const VertexLabel& v) const {
    static const std::set<VertexLabel> none;
    auto it = adj_.find(v);
    return it == adj_.end() ? none : it->second;
}

std::vector<VertexLabel> LabeledGraph::vertices() const {
    std::vector<VertexLabel> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
}

std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    for (const auto& [v, ns] : adj_)
        for (const auto& w : ns)
            if (v < w) out.emplace_back(v, w);
    return out;
}

std::string GraphDiff::str() const {
    std::ostringstream os;
    for (const auto& v : missing_vertices) os << "missing vertex " << v.str() << '\n';
    for (const auto& v : extra_vertices) os << "extra vertex " << v.str() << '\n';
    for (const auto& [u, v] : missing_edges) os << "missing edge " << u.str() << " -- " << v.str() << '\n';
    for (const auto& [u, v] : extra_edges) os << "extra edge " << u.str() << " -- " << v.str() << '\n';
    return os.str();
}

LabeledGraph intersection_graph(const ObjectMap& objects) {
    struct Item {
        const VertexLabel* label;
        const Shape* shape;
        Box box;
    };
    std::vector<Item> items;
    items.reserve(objects.size());
    for (const auto& [label, shape] : objects) items.push_back({&label, &shape, bounding_box(shape)});

    LabeledGraph g;
    for (const auto& it : items) g.add_vertex(*it.label);
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j)
            if (items[i].box.overlaps(items[j].box) && shapes_intersect(*items[i].shape, *items[j].shape))
                g.add_edge(*items[i].label, *items[j].label);
    return g;
}

bool graphs_equal(const LabeledGraph& expected, const LabeledGraph& actual, GraphDiff* diff) {
    if (diff == nullptr) return expected == actual;
    *diff = {};
    for (const auto& v : expected.vertices())
        if (!actual.has_vertex(v)) diff->missing_vertices.push_back(v);
    for (const auto& v : actual.vertices())
        if (!expected.has_vertex(v)) diff->extra_vertices.push_back(v);
    for (const auto& [u, v] : expected.edges())
        if (!actual.has_edge(u, v)) diff->missing_edges.emplace_back(u, v);
    for (const auto& [u, v] : actual.edges())
        if (!expected.has_edge(u, v)) diff->extra_edges.emplace_back(u, v);
    return diff->empty();
}

bool is_induced_cycle(const LabeledGraph& g, const std::vector<VertexLabel>& cycle) {
    const std::size_t n = cycle.size();
    if (n < 3) return false;
    std::set<VertexLabel> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.has_vertex(cycle[i])) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    }
    return true;
}

std::vector<std::set<VertexLabel>> components(const LabeledGraph& g, const std::set<VertexLabel>& keep) {
    std::vector<std::set<VertexLabel>> out;
    std::set<VertexLabel> seen;
    for (const auto& s : keep) {
        if (seen.count(s)) continue;
        std::set<VertexLabel> comp{s};
        std::deque<VertexLabel> queue{s};
        seen.insert(s);
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (const auto& w : g.neighbors(v))
                if (keep.count(w) && seen.insert(w).second) {
                    comp.insert(w);
                    queue.push_back(w);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace segrec
