#pragma once

#include "segrec/graph.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segrec {

class DegenerateRealization : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SymbolOutOfRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sequence read up to rotation and reflection.
template <class T>
struct CyclicSequence {
    std::vector<T> items;

    /// Equality up to cyclic shift and reversal.
    [[nodiscard]] bool same_as(const CyclicSequence& o) const {
        const auto n = items.size();
        if (n != o.items.size()) return false;
        if (n == 0) return true;
        for (int dir : {1, -1}) {
            for (std::size_t s = 0; s < n; ++s) {
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i) {
                    std::size_t j = dir == 1 ? (s + i) % n : (s + n - i) % n;
                    ok = items[i] == o.items[j];
                }
                if (ok) return true;
            }
        }
        return false;
    }
};

using Attachment = std::pair<VertexLabel, VertexLabel>;  // (cycle vertex, intersector)
using AttachmentOrder = CyclicSequence<Attachment>;

struct CheckReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
};

/// The three conditions on a set of connectors of an induced cycle.
CheckReport validate_connectors(const LabeledGraph& g, const std::vector<VertexLabel>& cycle,
                                const std::set<VertexLabel>& connectors);

/// The three conditions on a set of intersectors of an induced cycle.
CheckReport validate_intersectors(const LabeledGraph& g, const std::vector<VertexLabel>& cycle,
                                  const std::set<VertexLabel>& intersectors);

/// Pairs (c, d) with cd an edge, listed while walking the cycle once.
AttachmentOrder graph_order(const LabeledGraph& g, const std::vector<VertexLabel>& cycle,
                            const std::set<VertexLabel>& intersectors);

/// Closed walk through the realized cycle: consecutive crossing points and
/// the piece of each cycle object between them.
struct CoreCurve {
    std::vector<Point> corners;  // corners[i] = crossing of cycle[i] and cycle[i+1]
    /// Polygon with one vertex per corner, in walk order.
    [[nodiscard]] const std::vector<Point>& polygon() const { return corners; }
};

CoreCurve core_curve(const ObjectMap& objects, const std::vector<VertexLabel>& cycle);

/// Intersector crossings ordered along the core curve, consecutive
/// duplicates collapsed. Crossings on a part of r(c) outside its core piece
/// are attributed to the nearest point of that piece.
AttachmentOrder geometric_order(const ObjectMap& objects, const std::vector<VertexLabel>& cycle,
                                const std::set<VertexLabel>& intersectors);

/// Graph order and geometric order agree up to rotation and reflection.
bool check_order_lemma(const LabeledGraph& g, const std::vector<VertexLabel>& cycle,
                       const std::set<VertexLabel>& intersectors, const ObjectMap& objects);

/// Symbols 1..n along the core curve, one entry per visited cycle piece plus
/// any cycle object touching a piece it is not consecutive to.
std::vector<int> core_trace(const ObjectMap& objects, const std::vector<VertexLabel>& cycle);

/// Some rotation or reflection of the cyclic trace splits into n nonempty
/// blocks with block i over {i, i+1 mod n}. Linear-time scan per rotation.
bool trace_partition_check(const std::vector<int>& trace, int n);

/// Same question by trying every split. Exponential; small traces only.
bool trace_partition_exhaustive(const std::vector<int>& trace, int n);

/// Exact point-in-polygon (strict interior).
bool point_in_polygon(const Point& p, const std::vector<Point>& polygon);

/// Every listed object lies strictly inside the core polygon and misses its boundary.
CheckReport check_cell_containment(const ObjectMap& objects, const std::vector<VertexLabel>& cycle,
                                   const std::set<VertexLabel>& inside);

}  // namespace segrec
