#include "segrec/encoder.hpp"
#include "segrec/realizer.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace segrec;

namespace {

using VL = VertexLabel;

int count_op(const Formula& f, Formula::Op op) {
    int c = f.op == op ? 1 : 0;
    for (const auto& g : f.args) c += count_op(g, op);
    return c;
}

int count_tagged(const PolySystem& s, const std::string& prefix) {
    int c = 0;
    for (const auto& k : s.constraints) c += k.tag.rfind(prefix, 0) == 0;
    return c;
}

LabeledGraph k2() {
    LabeledGraph g;
    g.add_edge(VL::vertex(1), VL::vertex(2));
    return g;
}

ObjectMap crossing_pair() {
    ObjectMap o;
    o.emplace(VL::vertex(1), UnitSegment({Rational(0), Rational(0)}, {Rational(3, 5), Rational(4, 5)}));
    o.emplace(VL::vertex(2), UnitSegment({Rational(0), Rational(1, 2)}, {Rational(1), Rational(0)}));
    return o;
}

PolySystem x_positive() {
    PolySystem s;
    s.variables = {"x"};
    s.constraints.push_back({"", Formula::atom(Polynomial::variable(0), Relation::Positive)});
    return s;
}

// Small grid of anchors and a handful of rational directions, so touching
// and collinear placements occur often.
ObjectMap random_units(std::mt19937_64& rng, int n) {
    static const std::vector<Point> dirs{{1, 0}, {0, 1}, {Rational(3, 5), Rational(4, 5)},
                                         {Rational(4, 5), Rational(-3, 5)}, {-1, 0}, {Rational(-5, 13), Rational(12, 13)}};
    std::uniform_int_distribution<int> c(0, 6), d(0, static_cast<int>(dirs.size()) - 1);
    ObjectMap o;
    for (int i = 1; i <= n; ++i)
        o.emplace(VL::vertex(i), UnitSegment({Rational(c(rng), 5), Rational(c(rng), 5)}, dirs[d(rng)]));
    return o;
}

}  // namespace

TEST(Encoder, UnitK2Structure) {
    auto s = encode_unit(k2());
    EXPECT_EQ(s.variables.size(), 8u);
    EXPECT_EQ(count_tagged(s, "unit "), 2);
    EXPECT_EQ(count_tagged(s, "edge "), 1);
    EXPECT_EQ(count_tagged(s, "nonedge "), 0);
    int negations = 0;
    for (const auto& c : s.constraints) negations += count_op(c.formula, Formula::Op::Not);
    EXPECT_EQ(negations, 0);
    for (const auto& c : s.constraints) EXPECT_LE(c.formula.poly.max_variable(), 7);
}

TEST(Encoder, UnitEvaluation) {
    auto o = crossing_pair();
    EXPECT_TRUE(evaluate(encode_unit(k2()), flatten(o)));
    LabeledGraph empty;
    empty.add_vertex(VL::vertex(1));
    empty.add_vertex(VL::vertex(2));
    auto s = encode_unit(empty);
    EXPECT_FALSE(evaluate(s, flatten(o)));
    EXPECT_EQ(violated(s, flatten(o)), std::vector<std::string>{"nonedge v:1 v:2"});
}

TEST(Encoder, UnitAtom) {
    LabeledGraph g;
    g.add_vertex(VL::vertex(1));
    auto s = encode_unit(g);
    ObjectMap snapped;
    snapped.emplace(VL::vertex(1), UnitSegment({Rational(1, 3), Rational(2)}, snap_slope_to_unit_direction(Rational(7, 3), Rational(1, 100))));
    auto vs = flatten(snapped);
    EXPECT_TRUE(evaluate(s, vs));
    std::vector<Rational> values;
    for (const auto& v : s.variables) values.push_back(vs.at(v));
    EXPECT_TRUE(s.constraints[0].formula.poly.evaluate(values).is_zero());

    ObjectMap longer;
    longer.emplace(VL::vertex(1), Polyline({{0, 0}, {2, 0}}));
    EXPECT_FALSE(evaluate(s, flatten(longer)));
}

TEST(Encoder, TrivialSystem) {
    auto s = x_positive();
    EXPECT_TRUE(evaluate(s, {{"x", Rational(1)}}));
    EXPECT_FALSE(evaluate(s, {{"x", Rational(0)}}));
    EXPECT_THROW(evaluate(s, {{"y", Rational(1)}}), MissingVariable);
}

TEST(Encoder, PolylineStructure) {
    auto s = encode_polyline(k2(), 1);
    EXPECT_EQ(s.variables.size(), 12u);
    ASSERT_EQ(s.constraints.size(), 1u);
    EXPECT_EQ(s.constraints[0].formula.op, Formula::Op::Or);
    EXPECT_EQ(s.constraints[0].formula.args.size(), 4u);

    auto s0 = encode_polyline(k2(), 0);
    EXPECT_EQ(s0.variables.size(), 8u);
    EXPECT_EQ(count_tagged(s0, "unit "), 0);
    auto u = encode_unit(k2());
    EXPECT_EQ(s0.variables, u.variables);
    EXPECT_EQ(s0.constraints.back(), u.constraints.back());
    EXPECT_THROW(encode_polyline(k2(), -1), std::invalid_argument);
}

TEST(Encoder, PolylineNonEdgeIsConjunctionOfNegations) {
    LabeledGraph g;
    g.add_vertex(VL::vertex(1));
    g.add_vertex(VL::vertex(2));
    auto s = encode_polyline(g, 2);
    ASSERT_EQ(s.constraints.size(), 1u);
    const auto& f = s.constraints[0].formula;
    EXPECT_EQ(f.op, Formula::Op::And);
    ASSERT_EQ(f.args.size(), 9u);
    for (const auto& a : f.args) EXPECT_EQ(a.op, Formula::Op::Not);
}

TEST(Encoder, PolylineOnRealizerOutput) {
    auto L = catalog("generic2");
    auto w = wiring_from_lines(L);
    auto art = build_polyline_reduction(w, 1);
    auto r = realize_polyline(L, art, 1);
    int checked = 0;
    for (const auto& [u, v] : art.graph.edges()) {
        if (++checked > 20) break;
        LabeledGraph g;
        g.add_edge(u, v);
        ObjectMap sub;
        sub.emplace(u, r.objects.at(u));
        sub.emplace(v, r.objects.at(v));
        EXPECT_TRUE(evaluate(encode_polyline(g, 1), flatten(sub))) << u.str() << " " << v.str();
    }
}

TEST(Encoder, SoundnessBridge) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> size(2, 4), coin(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        auto o = random_units(rng, size(rng));
        LabeledGraph truth = oracle::graph_of(o);
        EXPECT_TRUE(evaluate(encode_unit(truth), flatten(o)));
        LabeledGraph g;
        for (const auto& [v, s] : o) g.add_vertex(v);
        for (auto a = o.begin(); a != o.end(); ++a)
            for (auto b = std::next(a); b != o.end(); ++b)
                if (coin(rng)) g.add_edge(a->first, b->first);
        EXPECT_EQ(evaluate(encode_unit(g), flatten(o)), g == truth);
    }
}

TEST(Encoder, IntersectionPredicateMatchesOracle) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-2, 2);
    std::vector<Polynomial> v;
    for (int i = 0; i < 8; ++i) v.push_back(Polynomial::variable(i));
    Formula f = intersection_formula(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]);
    for (int trial = 0; trial < 4000; ++trial) {
        std::vector<Rational> xs;
        for (int i = 0; i < 8; ++i) xs.push_back(c(rng));
        Point p{xs[0], xs[1]}, q{xs[2], xs[3]}, r{xs[4], xs[5]}, s{xs[6], xs[7]};
        if (p == q || r == s) continue;
        EXPECT_EQ(evaluate(f, xs), oracle::intersect(p, q, r, s));
    }
}

TEST(Encoder, MutationSensitivity) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto o = random_units(rng, 4);
        LabeledGraph g = oracle::graph_of(o);
        auto vs = flatten(o);
        ASSERT_TRUE(evaluate(encode_unit(g), vs));
        const auto labels = g.vertices();
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j) {
                LabeledGraph h = g;
                const bool had = h.has_edge(labels[i], labels[j]);
                if (had) h.remove_edge(labels[i], labels[j]);
                else h.add_edge(labels[i], labels[j]);
                auto bad = violated(encode_unit(h), vs);
                const std::string tag = (had ? "nonedge " : "edge ") + labels[i].str() + " " + labels[j].str();
                EXPECT_EQ(bad, std::vector<std::string>{tag});
            }
    }
}

TEST(Encoder, StretchabilitySmall) {
    EXPECT_TRUE(encode_stretchability(WiringDiagram{1, {}}).constraints.empty());
    auto L2 = catalog("generic2");
    auto s2 = encode_stretchability(wiring_from_lines(L2));
    EXPECT_TRUE(evaluate(s2, flatten(L2)));
    EXPECT_EQ(s2.variables, (std::vector<std::string>{"m1", "b1", "m2", "b2"}));
    EXPECT_THROW(encode_stretchability(WiringDiagram{3, {1, 1}}), InvalidWiring);
}

TEST(Encoder, StretchabilityOverCatalog) {
    for (int n = 2; n <= 8; ++n) {
        auto L = catalog("generic" + std::to_string(n));
        auto w = wiring_from_lines(L);
        EXPECT_TRUE(evaluate(encode_stretchability(w), flatten(L))) << n;
        for (const auto& img : dihedral_images(w)) {
            bool same = crossing_orders(img) == crossing_orders(w);
            EXPECT_EQ(evaluate(encode_stretchability(img), flatten(L)), same) << n;
        }
    }
}

TEST(Encoder, StretchabilityRandomLines) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        LineArrangement L;
        for (int i = 0; i < 5; ++i) L.lines.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
        bool simple = true;
        try {
            require_generic(L);
        } catch (const DegenerateArrangement&) {
            simple = false;
        }
        if (!simple) continue;
        auto w = wiring_from_lines(L);
        EXPECT_TRUE(evaluate(encode_stretchability(w), flatten(L)));
        const auto other = wiring_from_lines(catalog("generic5"));
        EXPECT_EQ(evaluate(encode_stretchability(other), flatten(L)), crossing_orders(other) == crossing_orders(w));
    }
}

TEST(EncoderIo, SmtlibFormat) {
    auto text = emit_smtlib(x_positive());
    EXPECT_NE(text.find("(set-logic QF_NRA)"), std::string::npos);
    EXPECT_NE(text.find("(declare-fun x () Real)"), std::string::npos);
    EXPECT_NE(text.find("(assert (> x 0))"), std::string::npos);
    EXPECT_NE(text.find("(check-sat)"), std::string::npos);
    EXPECT_NE(text.find("(get-model)"), std::string::npos);

    auto empty = emit_smtlib(PolySystem{});
    EXPECT_NE(empty.find("(check-sat)"), std::string::npos);
    EXPECT_EQ(empty.find("assert"), std::string::npos);
}

TEST(EncoderIo, SmtlibRoundTrip) {
    for (const auto& s : {x_positive(), encode_unit(k2()), encode_polyline(k2(), 2), PolySystem{},
                          encode_stretchability(wiring_from_lines(catalog("generic4")))}) {
        auto text = emit_smtlib(s);
        EXPECT_EQ(parse_smtlib(text), s);
        EXPECT_EQ(emit_smtlib(parse_smtlib(text)), text);
    }
    // A single untagged conjunction stays one constraint.
    PolySystem s = x_positive();
    s.constraints[0].formula = Formula::all({s.constraints[0].formula, s.constraints[0].formula});
    EXPECT_EQ(parse_smtlib(emit_smtlib(s)), s);
}

TEST(EncoderIo, SmtlibReaderNormalizes) {
    auto s = parse_smtlib("(declare-const x Real)(declare-fun y () Real)\n(assert (< (* 2 x) (- y 3)))");
    ASSERT_EQ(s.constraints.size(), 1u);
    std::vector<Rational> at{Rational(1), Rational(6)};
    EXPECT_TRUE(evaluate(s.constraints[0].formula, at));
    at[1] = Rational(5);
    EXPECT_FALSE(evaluate(s.constraints[0].formula, at));
}

TEST(EncoderIo, SmtlibErrors) {
    EXPECT_THROW(parse_smtlib("(assert (> x 0))"), ParseError);
    EXPECT_THROW(parse_smtlib("(declare-fun x () Real) (assert (> x 0)"), ParseError);
    try {
        parse_smtlib("(declare-fun x () Real)\n(assert (>> x 0))");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.where, "byte 32");
    }
}

TEST(EncoderIo, JsonRoundTrip) {
    for (const auto& s : {x_positive(), encode_unit(k2()), encode_polyline(k2(), 1), PolySystem{},
                          encode_stretchability(wiring_from_lines(catalog("generic3")))}) {
        auto text = emit_json(s);
        EXPECT_EQ(text, emit_json(s));
        EXPECT_EQ(parse_json(text), s);
        EXPECT_EQ(emit_json(parse_json(text)), text);
    }
    auto text = emit_json(x_positive());
    EXPECT_LT(text.find("\"constraints\""), text.find("\"variables\""));
}

TEST(EncoderIo, JsonErrors) {
    try {
        parse_json("{\"variables\": [\"x\"], ");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(e.where.find("byte"), std::string::npos);
    }
    try {
        parse_json(R"({"variables":["x"],"constraints":[{"tag":"","formula":{"op":"atom","rel":">0","poly":[{"coef":"1","monomial":[["z",1]]}]}}]})");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.where, "/constraints/0/formula/poly/0/monomial/0/0");
    }
    EXPECT_THROW(parse_json(R"({"variables":["x"]})"), ParseError);
}
