#include "segrec/structure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace segrec {

namespace {

std::map<VertexLabel, std::size_t> index_of(const std::vector<VertexLabel>& cycle) {
    std::map<VertexLabel, std::size_t> idx;
    for (std::size_t i = 0; i < cycle.size(); ++i) idx[cycle[i]] = i;
    return idx;
}

bool cyclically_adjacent(std::size_t i, std::size_t j, std::size_t n) {
    return (i + 1) % n == j || (j + 1) % n == i;
}

std::vector<VertexLabel> cycle_neighbors(const LabeledGraph& g, const VertexLabel& d,
                                         const std::map<VertexLabel, std::size_t>& idx) {
    std::vector<VertexLabel> out;
    for (const auto& u : g.neighbors(d))
        if (idx.count(u)) out.push_back(u);
    return out;
}

// Shared third condition: neighbors of distinct members are distinct and non-adjacent.
void check_pairwise_neighbors(const LabeledGraph& g, const std::set<VertexLabel>& D,
                              const std::map<VertexLabel, std::size_t>& idx, CheckReport& rep) {
    std::map<VertexLabel, VertexLabel> owner;
    for (const auto& d : D) {
        if (!g.has_vertex(d)) continue;
        for (const auto& c : cycle_neighbors(g, d, idx)) {
            auto [it, fresh] = owner.emplace(c, d);
            if (!fresh && it->second != d)
                rep.fail(it->second.str() + " and " + d.str() + " share cycle neighbor " + c.str());
        }
    }
    const auto n = idx.size();
    for (const auto& [c1, d1] : owner)
        for (const auto& [c2, d2] : owner)
            if (c1 < c2 && d1 != d2 && cyclically_adjacent(idx.at(c1), idx.at(c2), n))
                rep.fail(d1.str() + " and " + d2.str() + " attach to adjacent cycle vertices " +
                         c1.str() + ", " + c2.str());
}

}  // namespace

CheckReport validate_connectors(const LabeledGraph& g, const std::vector<VertexLabel>& cycle,
                                const std::set<VertexLabel>& D) {
    CheckReport rep;
    if (!is_induced_cycle(g, cycle)) rep.fail("cycle is not induced");
    const auto idx = index_of(cycle);

    std::set<VertexLabel> neighborhood;
    for (const auto& c : cycle)
        for (const auto& u : g.neighbors(c))
            if (!idx.count(u)) neighborhood.insert(u);
    if (neighborhood != D) rep.fail("connector set differs from the cycle's neighborhood");

    for (const auto& d : D)
        for (const auto& e : D)
            if (d < e && g.has_edge(d, e)) rep.fail("connectors " + d.str() + " and " + e.str() + " adjacent");

    std::set<VertexLabel> cyc(cycle.begin(), cycle.end());
    std::set<VertexLabel> rest;
    for (const auto& v : g.vertices())
        if (!cyc.count(v) && !D.count(v)) rest.insert(v);
    std::set<VertexLabel> not_d = rest;
    not_d.insert(cyc.begin(), cyc.end());
    auto comps = components(g, not_d);
    bool split_ok = comps.size() == (rest.empty() ? 1u : 2u);
    if (split_ok)
        for (const auto& comp : comps) split_ok = split_ok && (comp == cyc || comp == rest);
    if (!split_ok) rep.fail("removing connectors does not leave exactly the cycle and one other component");

    for (const auto& d : D) {
        if (!g.has_vertex(d)) continue;
        auto nb = cycle_neighbors(g, d, idx);
        if (nb.size() != 1)
            rep.fail(d.str() + " has " + std::to_string(nb.size()) + " cycle neighbors");
    }
    check_pairwise_neighbors(g, D, idx, rep);
    return rep;
}

CheckReport validate_intersectors(const LabeledGraph& g, const std::vector<VertexLabel>& cycle,
                                  const std::set<VertexLabel>& D) {
    CheckReport rep;
    if (!is_induced_cycle(g, cycle)) rep.fail("cycle is not induced");
    const auto idx = index_of(cycle);
    for (const auto& d : D) {
        if (idx.count(d)) {
            rep.fail(d.str() + " lies on the cycle");
            continue;
        }
        if (!g.has_vertex(d)) {
            rep.fail(d.str() + " missing from graph");
            continue;
        }
        auto nb = cycle_neighbors(g, d, idx);
        if (nb.empty() || nb.size() > 2)
            rep.fail(d.str() + " has " + std::to_string(nb.size()) + " cycle neighbors");
        if (nb.size() == 2 && cyclically_adjacent(idx.at(nb[0]), idx.at(nb[1]), cycle.size()))
            rep.fail(d.str() + " attaches to two adjacent cycle vertices");
    }
    check_pairwise_neighbors(g, D, idx, rep);
    return rep;
}

AttachmentOrder graph_order(const LabeledGraph& g, const std::vector<VertexLabel>& cycle,
                            const std::set<VertexLabel>& D) {
    AttachmentOrder out;
    for (const auto& c : cycle)
        for (const auto& u : g.neighbors(c))
            if (D.count(u)) out.items.emplace_back(c, u);
    return out;
}

namespace {

struct Contact {
    std::vector<Point> points;
    bool overlap = false;
};

Contact contacts(const Shape& a, const Shape& b) {
    Contact out;
    for (const auto& s : shape_segments(a))
        for (const auto& t : shape_segments(b)) {
            if (!segments_intersect(s, t)) continue;
            if (auto p = crossing_point(s, t)) {
                if (std::find(out.points.begin(), out.points.end(), *p) == out.points.end())
                    out.points.push_back(*p);
            } else {
                out.overlap = true;
            }
        }
    return out;
}

Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

const Shape& object_of(const ObjectMap& objects, const VertexLabel& v) {
    auto it = objects.find(v);
    if (it == objects.end()) throw DegenerateRealization("no object for " + v.str());
    return it->second;
}

struct WalkPos {
    std::size_t piece;
    Rational t;
    auto operator<=>(const WalkPos&) const = default;
};

// Position of q along the core piece of cycle object i, clamped to the piece.
WalkPos walk_position(const CoreCurve& core, std::size_t i, const Point& q) {
    const auto n = core.corners.size();
    const Point& a = core.corners[(i + n - 1) % n];
    const Point& b = core.corners[i];
    if (q == a || q == b) throw DegenerateRealization("crossing at a core corner");
    Point ab = b - a;
    Rational len2 = norm2(ab);
    if (len2.is_zero()) throw DegenerateRealization("core piece has zero length");
    Rational t = dot(q - a, ab) / len2;
    return {i, max(Rational(0), min(Rational(1), t))};
}

}  // namespace

CoreCurve core_curve(const ObjectMap& objects, const std::vector<VertexLabel>& cycle) {
    CoreCurve core;
    const auto n = cycle.size();
    if (n < 3) throw DegenerateRealization("cycle shorter than three");
    for (std::size_t i = 0; i < n; ++i) {
        const auto& u = cycle[i];
        const auto& v = cycle[(i + 1) % n];
        auto c = contacts(object_of(objects, u), object_of(objects, v));
        if (c.overlap) throw DegenerateRealization(u.str() + " and " + v.str() + " overlap collinearly");
        if (c.points.size() != 1)
            throw DegenerateRealization(u.str() + " and " + v.str() + " meet in " +
                                        std::to_string(c.points.size()) + " points");
        core.corners.push_back(c.points.front());
    }
    return core;
}

AttachmentOrder geometric_order(const ObjectMap& objects, const std::vector<VertexLabel>& cycle,
                                const std::set<VertexLabel>& D) {
    CoreCurve core = core_curve(objects, cycle);
    // cycle[i]'s piece runs from corner i-1 to corner i; index pieces by i.
    std::vector<std::pair<WalkPos, Attachment>> hits;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Shape& c = object_of(objects, cycle[i]);
        for (const auto& d : D) {
            auto cs = contacts(object_of(objects, d), c);
            if (cs.overlap) throw DegenerateRealization(d.str() + " overlaps " + cycle[i].str());
            for (const auto& q : cs.points) hits.emplace_back(walk_position(core, i, q), Attachment{cycle[i], d});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    AttachmentOrder out;
    for (const auto& [pos, pair] : hits)
        if (out.items.empty() || out.items.back() != pair) out.items.push_back(pair);
    if (out.items.size() > 1 && out.items.front() == out.items.back()) out.items.pop_back();
    return out;
}

bool check_order_lemma(const LabeledGraph& g, const std::vector<VertexLabel>& cycle,
                       const std::set<VertexLabel>& D, const ObjectMap& objects) {
    auto expected = graph_order(g, cycle, D);
    auto actual = geometric_order(objects, cycle, D);
    return expected.same_as(actual);
}

std::vector<int> core_trace(const ObjectMap& objects, const std::vector<VertexLabel>& cycle) {
    CoreCurve core = core_curve(objects, cycle);
    const auto n = cycle.size();
    std::vector<int> trace;
    for (std::size_t i = 0; i < n; ++i) {
        Segment piece(core.corners[(i + n - 1) % n], core.corners[i]);
        std::vector<std::pair<Rational, int>> extra;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || cyclically_adjacent(i, j, n)) continue;
            for (const auto& s : shape_segments(object_of(objects, cycle[j])))
                if (segments_intersect(piece, s)) {
                    auto q = crossing_point(piece, s).value_or(s.p);
                    extra.emplace_back(dot(q - piece.p, piece.q - piece.p), static_cast<int>(j) + 1);
                }
        }
        std::sort(extra.begin(), extra.end());
        trace.push_back(static_cast<int>(i) + 1);
        for (const auto& e : extra) {
            trace.push_back(e.second);
            trace.push_back(static_cast<int>(i) + 1);
        }
    }
    return trace;
}

namespace {

void check_symbols(const std::vector<int>& trace, int n) {
    for (int s : trace)
        if (s < 1 || s > n) throw SymbolOutOfRange("symbol " + std::to_string(s) + " outside 1.." + std::to_string(n));
}

bool in_block(int sym, int block, int n) { return sym == block || sym == block % n + 1; }

std::vector<std::vector<int>> rotations_and_reflections(const std::vector<int>& trace) {
    std::vector<std::vector<int>> out;
    const auto m = trace.size();
    for (bool rev : {false, true}) {
        std::vector<int> base = trace;
        if (rev) std::reverse(base.begin(), base.end());
        for (std::size_t s = 0; s < m; ++s) {
            std::vector<int> r(m);
            for (std::size_t i = 0; i < m; ++i) r[i] = base[(s + i) % m];
            out.push_back(std::move(r));
        }
    }
    return out;
}

// Left-to-right sweep over the open blocks: at each symbol either stay in the
// current block or open the next one.
bool splits_linear(const std::vector<int>& s, int n) {
    if (s.empty() || !in_block(s[0], 1, n)) return false;
    std::vector<char> cur(n + 1, 0), next(n + 1, 0);
    cur[1] = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (int b = 1; b <= n; ++b) {
            if (!cur[b]) continue;
            if (in_block(s[i], b, n)) next[b] = any = true;
            if (b < n && in_block(s[i], b + 1, n)) next[b + 1] = any = true;
        }
        if (!any) return false;
        std::swap(cur, next);
    }
    return cur[n] != 0;
}

bool splits_from(const std::vector<int>& s, std::size_t pos, int block, int n) {
    if (block > n) return pos == s.size();
    // Block `block` takes s[pos..end) for every end; the last block must take the rest.
    for (std::size_t end = pos + 1; end <= s.size(); ++end) {
        if (!in_block(s[end - 1], block, n)) return false;
        if (block == n && end != s.size()) continue;
        if (splits_from(s, end, block + 1, n)) return true;
    }
    return false;
}

}  // namespace

bool trace_partition_check(const std::vector<int>& trace, int n) {
    check_symbols(trace, n);
    if (static_cast<int>(trace.size()) < n) return false;
    for (const auto& r : rotations_and_reflections(trace))
        if (splits_linear(r, n)) return true;
    return false;
}

bool trace_partition_exhaustive(const std::vector<int>& trace, int n) {
    check_symbols(trace, n);
    for (const auto& r : rotations_and_reflections(trace))
        if (splits_from(r, 0, 1, n)) return true;
    return false;
}

bool point_in_polygon(const Point& p, const std::vector<Point>& poly) {
    const auto m = poly.size();
    bool inside = false;
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % m];
        if (orientation(a, b, p) == 0 && min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) &&
            min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y))
            return false;  // on the boundary
        if ((a.y > p.y) != (b.y > p.y)) {
            Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) inside = !inside;
        }
    }
    return inside;
}

CheckReport check_cell_containment(const ObjectMap& objects, const std::vector<VertexLabel>& cycle,
                                   const std::set<VertexLabel>& inside) {
    CheckReport rep;
    CoreCurve core = core_curve(objects, cycle);
    const auto& poly = core.polygon();
    std::vector<Segment> edges;
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (poly[i] != poly[(i + 1) % poly.size()]) edges.emplace_back(poly[i], poly[(i + 1) % poly.size()]);
    for (const auto& v : inside) {
        const Shape& s = object_of(objects, v);
        auto segs = shape_segments(s);
        bool crosses = false;
        for (const auto& a : segs)
            for (const auto& e : edges) crosses = crosses || segments_intersect(a, e);
        if (crosses) {
            rep.fail(v.str() + " meets the cycle boundary");
        } else if (!point_in_polygon(segs.front().p, poly)) {
            rep.fail(v.str() + " lies outside the cycle");
        }
    }
    return rep;
}

}  // namespace segrec
