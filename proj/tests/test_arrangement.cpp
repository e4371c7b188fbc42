#include "segrec/arrangement.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace segrec;

namespace {

LineArrangement lines(std::initializer_list<std::pair<Rational, Rational>> ls) {
    LineArrangement L;
    for (auto& [m, b] : ls) L.lines.push_back({m, b});
    return L;
}

// Random generic arrangement; retries until no degeneracy.
LineArrangement random_arrangement(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> num(-60, 60), den(1, 9);
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

}  // namespace

TEST(Wiring, Validate) {
    EXPECT_TRUE(validate_wiring({2, {1}}).empty());
    EXPECT_TRUE(validate_wiring({3, {1, 2, 1}}).empty());
    auto v = validate_wiring({3, {1, 1, 2}});
    ASSERT_FALSE(v.empty());
    auto has = [&](const std::string& s) {
        return std::any_of(v.begin(), v.end(), [&](const std::string& x) { return x.find(s) != std::string::npos; });
    };
    EXPECT_TRUE(has("{1,2}"));
    EXPECT_TRUE(has("{1,3}"));
    EXPECT_FALSE(validate_wiring({3, {1, 2}}).empty());
    EXPECT_FALSE(validate_wiring({3, {1, 3, 1}}).empty());
}

TEST(Wiring, CrossingOrdersBySimulation) {
    EXPECT_EQ(crossing_orders({2, {1}}), (CrossingOrders{{2}, {1}}));
    // Positions (1,2) then (2,3) then (1,2): 1 meets 2 then 3; 2 meets 1 then 3; 3 meets 1 then 2.
    EXPECT_EQ(crossing_orders({3, {1, 2, 1}}), (CrossingOrders{{2, 3}, {1, 3}, {1, 2}}));
    EXPECT_EQ(crossing_orders({3, {2, 1, 2}}), (CrossingOrders{{3, 2}, {3, 1}, {2, 1}}));
    EXPECT_THROW(crossing_orders({3, {1, 1, 2}}), InvalidWiring);
}

TEST(Wiring, FromLines) {
    EXPECT_EQ(wiring_from_lines(lines({{1, 0}, {-1, 1}})), (WiringDiagram{2, {1}}));
    // generic3 crossings at x = -(i+j): {2,3} at -5, {1,3} at -4, {1,2} at -3.
    auto w = wiring_from_lines(catalog("generic3"));
    EXPECT_EQ(w, (WiringDiagram{3, {2, 1, 2}}));
    EXPECT_EQ(crossing_orders(w)[0], (std::vector<int>{3, 2}));
    EXPECT_THROW(wiring_from_lines(lines({{1, 0}, {1, 1}})), DegenerateArrangement);
    EXPECT_THROW(wiring_from_lines(lines({{0, 0}, {1, 0}, {-1, 0}})), DegenerateArrangement);
}

TEST(Wiring, RoundTripAgainstDirectCrossingOrders) {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 100; ++it) {
        auto L = random_arrangement(rng, 2 + it % 6);
        auto w = wiring_from_lines(L);
        EXPECT_TRUE(validate_wiring(w).empty());
        EXPECT_EQ(crossing_orders(w), crossing_orders_of_lines(L));
    }
}

TEST(Wiring, Equivalence) {
    WiringDiagram a{3, {1, 2, 1}}, b{3, {2, 1, 2}};
    EXPECT_TRUE(equivalent(a, a, false));
    EXPECT_TRUE(equivalent(a, b, true));
    EXPECT_FALSE(equivalent(a, b, false));
    std::vector<WiringDiagram> all;
    for (int n = 2; n <= 6; ++n) all.push_back(wiring_from_lines(catalog("generic" + std::to_string(n))));
    all.push_back(a);
    all.push_back(b);
    for (const auto& x : all)
        for (const auto& y : all) {
            EXPECT_EQ(equivalent(x, y, true), equivalent(y, x, true));
            for (const auto& z : all)
                if (equivalent(x, y, true) && equivalent(y, z, true)) EXPECT_TRUE(equivalent(x, z, true));
        }
}

TEST(Squeeze, BoundsAndWiringPreserved) {
    const Rational a(1, 20);
    auto pm = lines({{1, 0}, {-1, 1}, {Rational(1, 2), 3}});
    auto s = squeeze(pm, a);
    for (const auto& l : s.lines) EXPECT_LE(l.slope.abs(), a);
    EXPECT_TRUE(is_squeezed(s, a));
    EXPECT_EQ(wiring_from_lines(s), wiring_from_lines(pm));
    EXPECT_EQ(squeeze(s, a), s);

    std::mt19937_64 rng(23);
    for (int it = 0; it < 40; ++it) {
        auto L = random_arrangement(rng, 2 + it % 5);
        auto S = squeeze(L, a);
        EXPECT_TRUE(is_squeezed(S, a));
        EXPECT_EQ(wiring_from_lines(S), wiring_from_lines(L));
        const auto n = S.lines.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Rational x = crossing_x(S.lines[i], S.lines[j]);
                EXPECT_LT(x.abs(), a);
                EXPECT_LT(S.lines[i].at(x).abs(), a);
            }
    }
}

TEST(Catalog, Entries) {
    EXPECT_EQ(catalog("generic2"), lines({{1, 1}, {2, 4}}));
    auto g3 = catalog("generic3");
    Rational x = crossing_x(g3.lines[0], g3.lines[1]);
    EXPECT_EQ(x, Rational(-3));
    EXPECT_EQ(g3.lines[0].at(x), Rational(-2));
    EXPECT_THROW(catalog("generic9"), UnknownCatalogEntry);
    EXPECT_EQ(catalog("generic8").lines.size(), 8u);
}
