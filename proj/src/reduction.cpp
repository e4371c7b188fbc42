#include "segrec/reduction.hpp"

#include <numeric>

namespace segrec {

namespace {

using VL = VertexLabel;

// rank[l][m] = 1-based position of m in l's crossing order (0 for m == l).
std::vector<std::vector<int>> ranks(const CrossingOrders& co) {
    const int n = static_cast<int>(co.size());
    std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 1, 0));
    for (int l = 1; l <= n; ++l)
        for (int i = 0; i < static_cast<int>(co[l - 1].size()); ++i) r[l][co[l - 1][i]] = i + 1;
    return r;
}

std::vector<VL> left_hosts(int n, bool twins) {
    std::vector<VL> out;
    for (int l = 1; l <= n; ++l) {
        for (int t = n - 1; t >= 1; --t) out.push_back(VL::probe(l, Side::Above, t));
        out.push_back(VL::pseudoline(l));
        if (twins) out.push_back(VL::twin(l));
        for (int t = 1; t <= n - 1; ++t) out.push_back(VL::probe(l, Side::Below, t));
    }
    return out;
}

// Probe edges shared by both reductions. `members(m)` lists the curves of pair m.
template <class Members>
void add_probes(LabeledGraph& g, Roles& roles, int n, const std::vector<std::vector<int>>& rank,
                Members members) {
    for (int l = 1; l <= n; ++l)
        for (Side s : {Side::Above, Side::Below})
            for (int t = 1; t <= n - 1; ++t) {
                VL p = VL::probe(l, s, t);
                g.add_vertex(p);
                roles.probes.push_back(p);
                for (int m = 1; m <= n; ++m)
                    if (m != l && rank[l][m] <= t)
                        for (const auto& v : members(m)) g.add_edge(p, v);
            }
    for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m)
            for (Side s : {Side::Above, Side::Below})
                for (Side s2 : {Side::Above, Side::Below})
                    for (int t = rank[l][m]; t <= n - 1; ++t)
                        for (int t2 = rank[m][l]; t2 <= n - 1; ++t2)
                            g.add_edge(VL::probe(l, s, t), VL::probe(m, s2, t2));
}

}  // namespace

std::vector<int> right_positions(const WiringDiagram& w) {
    require_valid(w);
    std::vector<int> order(w.n);
    std::iota(order.begin(), order.end(), 1);
    for (int p : w.swaps) std::swap(order[p - 1], order[p]);
    std::vector<int> pos(w.n);
    for (int i = 0; i < w.n; ++i) pos[order[i] - 1] = i + 1;
    return pos;
}

int ReductionArtifact::chain_length(int i) const {
    return i == 1 ? 4 * n * n + 1 : 4 * n + 1;
}

int ReductionArtifact::lane_of(int pseudoline) const {
    return right_positions(wiring)[pseudoline - 1];
}

ReductionArtifact build_unit_reduction(const WiringDiagram& w) {
    require_valid(w);
    ReductionArtifact art;
    art.kind = ReductionKind::Unit;
    art.n = w.n;
    art.wiring = w;
    const int n = w.n;
    auto rank = ranks(crossing_orders(w));
    LabeledGraph& g = art.graph;

    for (int l = 1; l <= n; ++l) {
        g.add_vertex(VL::pseudoline(l));
        art.roles.important.push_back(VL::pseudoline(l));
    }
    for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m) g.add_edge(VL::pseudoline(l), VL::pseudoline(m));
    add_probes(g, art.roles, n, rank, [](int m) { return std::vector<VL>{VL::pseudoline(m)}; });

    art.left_boundary_order = left_hosts(n, false);
    auto rpos = right_positions(w);
    art.right_boundary_order.resize(n);
    for (int l = 1; l <= n; ++l) art.right_boundary_order[rpos[l - 1] - 1] = VL::pseudoline(l);

    const int dl = static_cast<int>(art.left_boundary_order.size());
    const int len = 2 * (dl + n) + 6;
    for (int i = 1; i <= len; ++i) {
        art.cycle_order.push_back(VL::cycle_arc(i));
        art.roles.cycle.push_back(VL::cycle_arc(i));
    }
    for (int i = 1; i <= len; ++i) g.add_edge(VL::cycle_arc(i), VL::cycle_arc(i % len + 1));

    for (int s = 0; s < dl; ++s) {
        const VL& h = art.left_boundary_order[s];
        VL c = VL::connector_left(h);
        art.roles.connectors_left.push_back(c);
        g.add_edge(c, h);
        g.add_edge(c, VL::cycle_arc(2 * s + 1));
    }
    // Right block runs bottom to top after the four bottom arcs.
    const int r0 = 2 * dl + 4;
    for (int q = 0; q < n; ++q) {
        const VL& h = art.right_boundary_order[n - 1 - q];
        VL c = VL::connector_right(h);
        art.roles.connectors_right.push_back(c);
        g.add_edge(c, h);
        g.add_edge(c, VL::cycle_arc(r0 + 2 * q));
    }
    return art;
}

ReductionArtifact build_polyline_reduction(const WiringDiagram& w, int k) {
    if (k < 1) throw InvalidK("k must be at least 1, got " + std::to_string(k));
    require_valid(w);
    ReductionArtifact art;
    art.kind = ReductionKind::Polyline;
    art.n = w.n;
    art.k = k;
    art.wiring = w;
    const int n = w.n;
    const int chains = 2 * k + 2;
    auto rank = ranks(crossing_orders(w));
    auto rpos = right_positions(w);
    LabeledGraph& g = art.graph;

    for (int l = 1; l <= n; ++l) {
        art.roles.important.push_back(VL::pseudoline(l));
        art.roles.important.push_back(VL::twin(l));
        g.add_edge(VL::pseudoline(l), VL::twin(l));
    }
    for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m)
            for (const VL& a : {VL::pseudoline(l), VL::twin(l)})
                for (const VL& b : {VL::pseudoline(m), VL::twin(m)}) g.add_edge(a, b);
    add_probes(g, art.roles, n, rank,
               [](int m) { return std::vector<VL>{VL::pseudoline(m), VL::twin(m)}; });

    // Frame: vertical chains, then the top and bottom chains.
    for (int i = 1; i <= chains; ++i) {
        const int len = art.chain_length(i);
        for (int j = 1; j <= len; ++j) {
            art.roles.frame.push_back(VL::chain_arc(i, j));
            g.add_vertex(VL::chain_arc(i, j));
            if (j > 1) g.add_edge(VL::chain_arc(i, j - 1), VL::chain_arc(i, j));
        }
    }
    for (int i = 1; i < chains; ++i) {
        const int last = art.chain_length(i), next_last = art.chain_length(i + 1);
        VL t1 = VL::top_arc(2 * i - 1), t2 = VL::top_arc(2 * i);
        VL b1 = VL::bottom_arc(2 * i - 1), b2 = VL::bottom_arc(2 * i);
        for (const VL& v : {t1, t2, b1, b2}) art.roles.frame.push_back(v);
        g.add_edge(VL::chain_arc(i, 1), t1);
        g.add_edge(t1, t2);
        g.add_edge(t2, VL::chain_arc(i + 1, 1));
        g.add_edge(VL::chain_arc(i, last), b1);
        g.add_edge(b1, b2);
        g.add_edge(b2, VL::chain_arc(i + 1, next_last));
    }

    // Threading through the inner chains.
    for (int l = 1; l <= n; ++l) {
        const int q = rpos[l - 1];
        for (int i = 2; i <= chains - 1; ++i) {
            const int top = 4 * q - 2, bottom = 4 * q;
            g.add_edge(VL::pseudoline(l), VL::chain_arc(i, i % 2 == 0 ? top : bottom));
            g.add_edge(VL::twin(l), VL::chain_arc(i, i % 2 == 0 ? bottom : top));
        }
    }

    art.left_boundary_order = left_hosts(n, true);
    for (std::size_t s = 0; s < art.left_boundary_order.size(); ++s) {
        const VL& h = art.left_boundary_order[s];
        VL c = VL::connector_left(h);
        art.roles.connectors_left.push_back(c);
        g.add_edge(c, h);
        g.add_edge(c, VL::chain_arc(1, 2 * static_cast<int>(s) + 2));
    }
    art.right_boundary_order.resize(2 * n);
    for (int l = 1; l <= n; ++l) {
        const int q = rpos[l - 1];
        art.right_boundary_order[2 * q - 2] = VL::pseudoline(l);
        art.right_boundary_order[2 * q - 1] = VL::twin(l);
    }
    for (int q = 1; q <= n; ++q)
        for (int half = 0; half < 2; ++half) {
            const VL& h = art.right_boundary_order[2 * q - 2 + half];
            VL c = VL::connector_right(h);
            art.roles.connectors_right.push_back(c);
            g.add_edge(c, h);
            g.add_edge(c, VL::chain_arc(chains, half == 0 ? 4 * q - 2 : 4 * q));
        }

    // Outer cycle: down C1, along the bottom, up the last chain, back along the top.
    auto& cyc = art.cycle_order;
    for (int j = 1; j <= art.chain_length(1); ++j) cyc.push_back(VL::chain_arc(1, j));
    for (int i = 1; i < chains; ++i) {
        cyc.push_back(VL::bottom_arc(2 * i - 1));
        cyc.push_back(VL::bottom_arc(2 * i));
        if (i + 1 < chains) cyc.push_back(VL::chain_arc(i + 1, art.chain_length(i + 1)));
    }
    for (int j = art.chain_length(chains); j >= 1; --j) cyc.push_back(VL::chain_arc(chains, j));
    for (int i = chains - 1; i >= 1; --i) {
        cyc.push_back(VL::top_arc(2 * i));
        cyc.push_back(VL::top_arc(2 * i - 1));
        if (i > 1) cyc.push_back(VL::chain_arc(i, 1));
    }
    return art;
}

std::set<VertexLabel> outer_frame_connectors(const ReductionArtifact& art) {
    std::set<VL> d(art.roles.connectors_left.begin(), art.roles.connectors_left.end());
    d.insert(art.roles.connectors_right.begin(), art.roles.connectors_right.end());
    for (int i = 2; i <= 2 * art.k + 1; ++i) {
        d.insert(VL::chain_arc(i, 2));
        d.insert(VL::chain_arc(i, art.chain_length(i) - 1));
    }
    return d;
}

std::vector<VertexLabel> region_cycle(const ReductionArtifact& art, int i) {
    std::vector<VL> cyc;
    for (int j = 1; j <= art.chain_length(i); ++j) cyc.push_back(VL::chain_arc(i, j));
    cyc.push_back(VL::bottom_arc(2 * i - 1));
    cyc.push_back(VL::bottom_arc(2 * i));
    for (int j = art.chain_length(i + 1); j >= 1; --j) cyc.push_back(VL::chain_arc(i + 1, j));
    cyc.push_back(VL::top_arc(2 * i));
    cyc.push_back(VL::top_arc(2 * i - 1));
    return cyc;
}

std::set<VertexLabel> attached_non_frame(const ReductionArtifact& art, const std::vector<VertexLabel>& cycle) {
    std::set<VL> on(cycle.begin(), cycle.end());
    std::set<VL> frame(art.roles.frame.begin(), art.roles.frame.end());
    frame.insert(art.roles.cycle.begin(), art.roles.cycle.end());
    std::set<VL> out;
    for (const auto& c : cycle)
        for (const auto& u : art.graph.neighbors(c))
            if (!on.count(u) && !frame.count(u)) out.insert(u);
    return out;
}

}  // namespace segrec
