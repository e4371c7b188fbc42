#include "segrec/graph.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace segrec;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }
VertexLabel V(int i) { return VertexLabel::vertex(i); }
Shape seg(Point a, Point b) { return Polyline({a, b}); }

}  // namespace

TEST(Label, RoundTrip) {
    std::vector<VertexLabel> ls = {
        VertexLabel::pseudoline(3),
        VertexLabel::twin(1),
        VertexLabel::probe(2, Side::Below, 4),
        VertexLabel::connector_left(VertexLabel::probe(1, Side::Above, 2)),
        VertexLabel::connector_right(VertexLabel::twin(5)),
        VertexLabel::cycle_arc(17),
        VertexLabel::chain_arc(2, 9),
        VertexLabel::top_arc(4),
        VertexLabel::bottom_arc(1),
        V(8),
    };
    for (const auto& l : ls) EXPECT_EQ(VertexLabel::parse(l.str()), l) << l.str();
    EXPECT_EQ(VertexLabel::probe(2, Side::Below, 4).str(), "probe:2:below:4");
    EXPECT_EQ(VertexLabel::connector_left(VertexLabel::pseudoline(1)).str(), "conL:pl:1");
    EXPECT_EQ(VertexLabel::chain_arc(2, 9).str(), "chain:2:9");
    EXPECT_THROW(VertexLabel::parse("probe:1:sideways:2"), std::invalid_argument);
    EXPECT_THROW(VertexLabel::parse("pl:"), std::invalid_argument);
}

TEST(Graph, IntersectionGraphOfSegments) {
    ObjectMap m;
    m.emplace(V(1), seg(P(0, 0), P(2, 0)));
    m.emplace(V(2), seg(P(1, -1), P(1, 1)));
    m.emplace(V(3), seg(P(5, 5), P(6, 6)));
    m.emplace(V(4), Polyline({P(2, 0), P(3, 1), P(4, 0)}));  // touches V(1) at an endpoint
    auto g = intersection_graph(m);
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_TRUE(g.has_edge(V(1), V(2)));
    EXPECT_TRUE(g.has_edge(V(4), V(1)));
    EXPECT_FALSE(g.has_edge(V(3), V(1)));
}

TEST(Graph, DiffReportsBothDirections) {
    LabeledGraph e, a;
    e.add_edge(V(1), V(2));
    e.add_edge(V(2), V(3));
    a.add_edge(V(1), V(2));
    a.add_edge(V(1), V(3));
    a.add_vertex(V(4));
    GraphDiff d;
    EXPECT_FALSE(graphs_equal(e, a, &d));
    ASSERT_EQ(d.missing_edges.size(), 1u);
    EXPECT_EQ(d.missing_edges[0], (Edge{V(2), V(3)}));
    ASSERT_EQ(d.extra_edges.size(), 1u);
    EXPECT_EQ(d.extra_vertices, std::vector<VertexLabel>{V(4)});
    EXPECT_TRUE(d.missing_vertices.empty());
    EXPECT_TRUE(graphs_equal(e, e, &d));
    EXPECT_TRUE(d.empty());
}

TEST(Graph, InducedCycle) {
    LabeledGraph g;
    for (int i = 1; i <= 5; ++i) g.add_edge(V(i), V(i % 5 + 1));
    std::vector<VertexLabel> c{V(1), V(2), V(3), V(4), V(5)};
    EXPECT_TRUE(is_induced_cycle(g, c));
    g.add_edge(V(1), V(3));
    EXPECT_FALSE(is_induced_cycle(g, c));
    EXPECT_FALSE(is_induced_cycle(g, {V(1), V(2)}));
}

TEST(Graph, Components) {
    LabeledGraph g;
    g.add_edge(V(1), V(2));
    g.add_edge(V(2), V(3));
    g.add_edge(V(4), V(5));
    auto cs = components(g, {V(1), V(3), V(4), V(5)});
    EXPECT_EQ(cs.size(), 3u);
}

// Property: the intersection graph of random segments is symmetric and matches
// pairwise segment tests.
TEST(Graph, IntersectionGraphMatchesPairwise) {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int it = 0; it < 30; ++it) {
        ObjectMap m;
        std::vector<Segment> segs;
        for (int i = 1; i <= 12; ++i) {
            Point a = P(c(rng), c(rng)), b = P(c(rng), c(rng));
            if (a == b) b = b + P(1, 0);
            segs.emplace_back(a, b);
            m.emplace(V(i), seg(a, b));
        }
        auto g = intersection_graph(m);
        for (int i = 1; i <= 12; ++i)
            for (int j = i + 1; j <= 12; ++j)
                EXPECT_EQ(g.has_edge(V(i), V(j)), segments_intersect(segs[i - 1], segs[j - 1]));
    }
}
