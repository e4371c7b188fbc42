#include "segrec/io.hpp"
#include "segrec/search.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

using namespace segrec;

namespace {

using VL = VertexLabel;

LabeledGraph cycle_graph(int n) {
    LabeledGraph g;
    for (int i = 1; i <= n; ++i) g.add_edge(VL::vertex(i), VL::vertex(i % n + 1));
    return g;
}

LabeledGraph complete_graph(int n) {
    LabeledGraph g;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(VL::vertex(i), VL::vertex(j));
    return g;
}

Realization fixture(const std::string& name) {
    std::ifstream in(std::string(SEGREC_FIXTURES) + "/" + name + ".json");
    std::stringstream ss;
    ss << in.rdbuf();
    return realization_from_json(ss.str());
}

Placement unit_square_placement() {
    // Sides of a square of side 4/5, each extended to length one.
    Placement p;
    p[VL::vertex(1)] = {0.4, 0.0, 0.0};
    p[VL::vertex(2)] = {0.8, 0.4, M_PI / 2};
    p[VL::vertex(3)] = {0.4, 0.8, M_PI};
    p[VL::vertex(4)] = {0.0, 0.4, -M_PI / 2};
    return p;
}

double norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

TEST(Penalty, Examples) {
    Placement cross;
    cross[VL::vertex(1)] = {0, 0, 0.3};
    cross[VL::vertex(2)] = {0, 0, 1.9};
    LabeledGraph k2 = complete_graph(2);
    EXPECT_EQ(penalty(k2, cross, 0.1).value, 0.0);

    LabeledGraph two;
    two.add_vertex(VL::vertex(1));
    two.add_vertex(VL::vertex(2));
    EXPECT_NEAR(penalty(two, cross, 0.1).value, 0.01, 1e-15);

    // Parallel at distance 0.05 < margin: (0.1 - 0.05)^2.
    Placement par;
    par[VL::vertex(1)] = {0, 0, 0};
    par[VL::vertex(2)] = {0, 0.05, 0};
    EXPECT_NEAR(penalty(two, par, 0.1).value, 0.0025, 1e-12);
    EXPECT_NEAR(penalty(k2, par, 0.1).value, 0.0025, 1e-12);
}

TEST(Penalty, GradientMatchesFiniteDifferences) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> pos(0, 1.6), ang(0, M_PI);
    std::uniform_int_distribution<int> coin(0, 1);
    int accepted = 0, tries = 0;
    while (accepted < 100 && ++tries < 2000) {
        LabeledGraph g;
        Placement p;
        for (int i = 1; i <= 4; ++i) {
            g.add_vertex(VL::vertex(i));
            p[VL::vertex(i)] = {pos(rng), pos(rng), ang(rng)};
        }
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                if (coin(rng)) g.add_edge(VL::vertex(i), VL::vertex(j));
        const double margin = 0.3;
        auto pv = penalty(g, p, margin);
        auto fd = [&](double h) {
            std::vector<double> out;
            for (auto& [v, pose] : p)
                for (double* c : {&pose.cx, &pose.cy, &pose.angle}) {
                    const double keep = *c;
                    *c = keep + h;
                    double up = penalty(g, p, margin).value;
                    *c = keep - h;
                    double down = penalty(g, p, margin).value;
                    *c = keep;
                    out.push_back((up - down) / (2 * h));
                }
            return out;
        };
        auto a = fd(1e-6), b = fd(5e-7);
        std::vector<double> diff_ab(a.size()), diff(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) diff_ab[i] = a[i] - b[i], diff[i] = pv.gradient[i] - a[i];
        const double scale = std::max(norm(a), 1e-3);
        // A closest-feature change inside the probe step shows up as FD instability.
        if (norm(diff_ab) > 1e-7 * scale) continue;
        ++accepted;
        EXPECT_LT(norm(diff) / scale, 1e-5);
    }
    EXPECT_EQ(accepted, 100);
}

TEST(Search, FixturesAreWitnesses) {
    for (int n : {4, 5, 6}) {
        auto r = fixture("c" + std::to_string(n));
        EXPECT_EQ(oracle::graph_of(r.objects), cycle_graph(n)) << n;
        EXPECT_EQ(intersection_graph(r.objects), cycle_graph(n)) << n;
    }
    auto k4 = fixture("k4");
    EXPECT_EQ(oracle::graph_of(k4.objects), complete_graph(4));
}

TEST(Certify, SquareAndChord) {
    auto c = certify(cycle_graph(4), unit_square_placement());
    ASSERT_TRUE(c.certified) << c.diff.str();
    EXPECT_EQ(oracle::graph_of(c.realization.objects), cycle_graph(4));
    for (const auto& [v, s] : c.realization.objects) EXPECT_EQ(norm2(std::get<UnitSegment>(s).direction()), Rational(1));

    LabeledGraph chord = cycle_graph(4);
    chord.add_edge(VL::vertex(1), VL::vertex(3));
    auto r = certify(chord, unit_square_placement());
    EXPECT_FALSE(r.certified);
    ASSERT_EQ(r.diff.missing_edges.size(), 1u);
    EXPECT_EQ(r.diff.missing_edges[0], (Edge{VL::vertex(1), VL::vertex(3)}));
}

TEST(Certify, SnappingIsNotCompletion) {
    // Floats keep a 1e-10 gap; the snapped endpoint lands on the other segment.
    Placement p;
    p[VL::vertex(1)] = {0, 0, 0};
    p[VL::vertex(2)] = {0.25, 0.5 + 1e-10, M_PI / 2};
    LabeledGraph two;
    two.add_vertex(VL::vertex(1));
    two.add_vertex(VL::vertex(2));
    EXPECT_GT(penalty(complete_graph(2), p, 0.01).value, 0.0);
    auto c = certify(two, p);
    EXPECT_FALSE(c.certified);
    EXPECT_EQ(c.diff.extra_edges.size(), 1u);
}

TEST(Search, FindsSmallGraphs) {
    SearchConfig cfg;
    cfg.seed = 42;
    for (const auto& g : {cycle_graph(4), cycle_graph(5), cycle_graph(6), complete_graph(4)}) {
        auto res = search_unit(g, cfg);
        EXPECT_EQ(oracle::graph_of(res.realization.objects), g);
        EXPECT_LT(penalty(g, res.placement, cfg.margin).value, 1e-12);
        EXPECT_EQ(res.transcript.back().restart, res.restart);
        EXPECT_TRUE(res.transcript.back().certified);
    }
}

TEST(Search, BudgetExhaustion) {
    SearchConfig cfg;
    cfg.restarts = 1;
    cfg.iterations = 1;
    Placement far;
    far[VL::vertex(1)] = {0, 0, 0};
    far[VL::vertex(2)] = {100, 100, 0};
    cfg.initial = far;
    EXPECT_THROW(search_unit(complete_graph(2), cfg), NotFound);
}

TEST(Search, Deterministic) {
    SearchConfig cfg;
    cfg.seed = 7;
    auto a = search_unit(cycle_graph(5), cfg);
    auto b = search_unit(cycle_graph(5), cfg);
    EXPECT_EQ(a.transcript, b.transcript);
    EXPECT_EQ(a.placement, b.placement);
    EXPECT_EQ(realization_to_json(a.realization), realization_to_json(b.realization));
    EXPECT_NE(restart_seed(7, 0), restart_seed(7, 1));
    EXPECT_NE(restart_seed(7, 0), restart_seed(8, 0));
}

TEST(Search, ConfigValidation) {
    SearchConfig cfg;
    cfg.restarts = 0;
    EXPECT_THROW(search_unit(complete_graph(2), cfg), std::invalid_argument);
    cfg = {};
    cfg.margin = 0;
    EXPECT_THROW(search_unit(complete_graph(2), cfg), std::invalid_argument);
}
