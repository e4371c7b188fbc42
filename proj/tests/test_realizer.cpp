#include "segrec/realizer.hpp"
#include "segrec/lemmas.hpp"
#include "segrec/structure.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace segrec;

namespace {

using VL = VertexLabel;

LineArrangement random_arrangement(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 7);
    for (;;) {
        LineArrangement L;
        for (int i = 0; i < n; ++i) L.lines.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
        try {
            wiring_from_lines(L);
            return L;
        } catch (const DegenerateArrangement&) {
        }
    }
}

std::set<VL> as_set(const std::vector<VL>& a, const std::vector<VL>& b = {}) {
    std::set<VL> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return s;
}

const std::vector<Point>& pts(const Realization& r, const VL& v) { return std::get<Polyline>(r.objects.at(v)).points(); }

// x-coordinates of the non-degenerate bends of a polyline.
std::vector<Rational> bends(const std::vector<Point>& p) {
    std::vector<Rational> xs;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (orientation(p[i - 1], p[i], p[i + 1]) != 0) xs.push_back(p[i].x);
    return xs;
}

// Proper crossings of two polylines.
std::vector<Point> crossings(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::vector<Point> out;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (std::size_t j = 0; j + 1 < b.size(); ++j)
            if (auto q = oracle::crossing(a[i], a[i + 1], b[j], b[j + 1])) out.push_back(*q);
    return out;
}

}  // namespace

TEST(UnitRealizer, TwoLines) {
    auto L = catalog("generic2");
    auto art = build_unit_reduction(wiring_from_lines(L));
    auto r = realize_unit(L, art);
    EXPECT_EQ(r.kind, RealizationKind::UnitSegments);
    EXPECT_EQ(r.objects.size(), 36u);
    EXPECT_TRUE(graphs_equal(art.graph, oracle::graph_of(r.objects)));
}

TEST(UnitRealizer, InvariantsForCatalog) {
    const Rational a(1, 20);
    for (int n = 2; n <= 5; ++n) {
        auto L = catalog("generic" + std::to_string(n));
        auto art = build_unit_reduction(wiring_from_lines(L));
        auto r = realize_unit(L, art);
        GraphDiff diff;
        ASSERT_TRUE(graphs_equal(art.graph, oracle::graph_of(r.objects), &diff)) << diff.str();
        for (const auto& [v, s] : r.objects) EXPECT_EQ(norm2(std::get<UnitSegment>(s).direction()), Rational(1));
        std::vector<UnitSegment> imp;
        for (int l = 1; l <= n; ++l) imp.push_back(std::get<UnitSegment>(r.objects.at(VL::pseudoline(l))));
        for (const auto& s : imp) EXPECT_LE((s.direction().y / s.direction().x).abs(), a);
        for (std::size_t i = 0; i < imp.size(); ++i)
            for (std::size_t j = i + 1; j < imp.size(); ++j) {
                auto q = oracle::crossing(imp[i].anchor(), imp[i].tip(), imp[j].anchor(), imp[j].tip());
                ASSERT_TRUE(q.has_value());
                EXPECT_LT(q->x.abs(), a);
                EXPECT_LT(q->y.abs(), a);
            }
    }
}

TEST(UnitRealizer, CycleStructureLemmas) {
    for (int n = 2; n <= 4; ++n) {
        auto L = catalog("generic" + std::to_string(n));
        auto art = build_unit_reduction(wiring_from_lines(L));
        auto r = realize_unit(L, art);
        auto D = as_set(art.roles.connectors_left, art.roles.connectors_right);
        EXPECT_TRUE(check_order_lemma(art.graph, art.cycle_order, D, r.objects));
        auto inside = as_set(art.roles.important, art.roles.probes);
        auto rep = check_cell_containment(r.objects, art.cycle_order, inside);
        EXPECT_TRUE(rep.ok) << (rep.violations.empty() ? "" : rep.violations[0]);
    }
}

TEST(UnitRealizer, RandomArrangements) {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 12; ++it) {
        auto L = random_arrangement(rng, 2 + it % 4);
        auto art = build_unit_reduction(wiring_from_lines(L));
        auto r = realize_unit(L, art);
        EXPECT_TRUE(graphs_equal(art.graph, oracle::graph_of(r.objects))) << it;
    }
}

TEST(UnitRealizer, Deterministic) {
    auto L = catalog("generic3");
    auto art = build_unit_reduction(wiring_from_lines(L));
    EXPECT_EQ(realize_unit(L, art).objects, realize_unit(L, art).objects);
}

TEST(UnitRealizer, Errors) {
    auto L = catalog("generic3");
    auto wrong = build_unit_reduction({3, {1, 2, 1}});
    EXPECT_THROW(realize_unit(L, wrong), WiringMismatch);
    auto art = build_unit_reduction(wiring_from_lines(L));
    RealizerParams p;
    p.rho = Rational(1, 10);
    EXPECT_THROW(realize_unit(L, art, p), std::invalid_argument);
    p = {};
    p.maxRefine = 0;
    EXPECT_THROW(realize_unit(L, art, p), std::invalid_argument);
    EXPECT_THROW(realize_unit(L, build_polyline_reduction(wiring_from_lines(L), 1)), std::invalid_argument);
}

TEST(PolylineRealizer, TwoLinesOneBend) {
    auto L = catalog("generic2");
    auto art = build_polyline_reduction(wiring_from_lines(L), 1);
    auto r = realize_polyline(L, art, 1);
    EXPECT_EQ(r.kind, RealizationKind::Polylines);
    for (const auto& [v, s] : r.objects) EXPECT_EQ(std::get<Polyline>(s).bends(), 1u) << v.str();
    EXPECT_TRUE(graphs_equal(art.graph, oracle::graph_of(r.objects)));
}

TEST(PolylineRealizer, WeavingWitnesses) {
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto L = catalog("generic" + std::to_string(n));
            auto art = build_polyline_reduction(wiring_from_lines(L), k);
            auto r = realize_polyline(L, art, k);
            ASSERT_TRUE(graphs_equal(art.graph, oracle::graph_of(r.objects))) << n << " " << k;
            for (const auto& [v, s] : r.objects) ASSERT_EQ(std::get<Polyline>(s).bends(), std::size_t(k));

            std::vector<Rational> X(2 * k + 3);
            for (int i = 1; i <= 2 * k + 2; ++i) X[i] = pts(r, VL::chain_arc(i, 1)).front().x;
            for (int l = 1; l <= n; ++l) {
                const auto& p = pts(r, VL::pseudoline(l));
                const auto& t = pts(r, VL::twin(l));
                auto bp = bends(p), bt = bends(t);
                EXPECT_LE(bp.size() + bt.size(), std::size_t(2 * k));
                for (const auto& x : bp) EXPECT_GT(x, X[2]);
                for (const auto& x : bt) EXPECT_GT(x, X[2]);
                auto cs = crossings(p, t);
                EXPECT_GE(cs.size(), std::size_t(2 * k));
                for (int i = 2; i <= 2 * k + 1; ++i) {
                    bool hit = false;
                    for (const auto& q : cs) hit = hit || (X[i] < q.x && q.x < X[i + 1]);
                    EXPECT_TRUE(hit) << "pair " << l << " region " << i;
                }
            }
        }
}

TEST(PolylineRealizer, FrameLemmas) {
    auto L = catalog("generic3");
    for (int k = 1; k <= 2; ++k) {
        auto art = build_polyline_reduction(wiring_from_lines(L), k);
        auto r = realize_polyline(L, art, k);
        EXPECT_TRUE(check_order_lemma(art.graph, art.cycle_order, outer_frame_connectors(art), r.objects));
        for (int i = 2; i <= 2 * k + 1; ++i) {
            auto cyc = region_cycle(art, i);
            EXPECT_TRUE(check_order_lemma(art.graph, cyc, attached_non_frame(art, cyc), r.objects)) << i;
        }
    }
}

TEST(PolylineRealizer, RandomArrangements) {
    std::mt19937_64 rng(202);
    for (int it = 0; it < 8; ++it) {
        auto L = random_arrangement(rng, 2 + it % 3);
        int k = 1 + it % 2;
        auto art = build_polyline_reduction(wiring_from_lines(L), k);
        auto r = realize_polyline(L, art, k);
        EXPECT_TRUE(graphs_equal(art.graph, oracle::graph_of(r.objects))) << it;
    }
}

TEST(PolylineRealizer, Errors) {
    auto L = catalog("generic3");
    auto art = build_polyline_reduction(wiring_from_lines(L), 2);
    EXPECT_THROW(realize_polyline(L, art, 1), InvalidK);
    EXPECT_THROW(realize_polyline(L, build_polyline_reduction({3, {1, 2, 1}}, 1), 1), WiringMismatch);
}

TEST(Lemmas, PassOnRealizerOutputs) {
    std::mt19937_64 rng(303);
    for (int it = 0; it < 6; ++it) {
        auto L = random_arrangement(rng, 2 + it % 3);
        auto w = wiring_from_lines(L);
        auto unit = build_unit_reduction(w);
        auto rep = check_lemmas(unit, realize_unit(L, unit).objects);
        EXPECT_TRUE(rep.ok) << (rep.violations.empty() ? "" : rep.violations[0]);
        auto poly = build_polyline_reduction(w, 1 + it % 2);
        rep = check_lemmas(poly, realize_polyline(L, poly, poly.k).objects);
        EXPECT_TRUE(rep.ok) << (rep.violations.empty() ? "" : rep.violations[0]);
    }
}

TEST(Lemmas, DetectMovedConnector) {
    auto L = catalog("generic3");
    auto art = build_unit_reduction(wiring_from_lines(L));
    auto obj = realize_unit(L, art).objects;
    // Swap two left connectors: graph order no longer matches the drawing.
    const auto& c = art.roles.connectors_left;
    auto a = obj.at(c[0]), b = obj.at(c[1]);
    obj.erase(c[0]);
    obj.erase(c[1]);
    obj.emplace(c[0], b);
    obj.emplace(c[1], a);
    EXPECT_FALSE(check_lemmas(art, obj).ok);
}
