#include "segrec/realizer.hpp"

#include "realizer_detail.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace segrec {

namespace {

using VL = VertexLabel;
using detail::Canvas;

const Rational kHalf(1, 2);

// Slopes moved onto rational unit directions, intercepts kept. The result is
// accepted only if every crossing order, the left order and the squeeze bounds survive.
std::vector<Line> snap_lines(const std::vector<Line>& base, const CrossingOrders& want, const Rational& a,
                             std::vector<Point>& dirs) {
    Rational gap;
    for (std::size_t i = 0; i + 1 < base.size(); ++i) {
        Rational d = base[i + 1].slope - base[i].slope;
        gap = i == 0 ? d : min(gap, d);
    }
    Rational dev = gap / Rational(100);
    for (int attempt = 0; attempt < 60; ++attempt, dev = dev / Rational(2)) {
        LineArrangement s;
        dirs.clear();
        for (const auto& l : base) {
            Point d = snap_slope_to_unit_direction(l.slope, dev);
            dirs.push_back(d);
            s.lines.push_back({d.y / d.x, l.intercept});
        }
        bool ok = true;
        for (const auto& l : s.lines) ok = ok && l.slope.abs() <= a;
        auto order = left_order(s);
        for (std::size_t i = 0; i < order.size(); ++i) ok = ok && order[i] == static_cast<int>(i);
        if (!ok) continue;
        try {
            if (crossing_orders_of_lines(s) != want) continue;
        } catch (const DegenerateArrangement&) {
            continue;
        }
        for (std::size_t i = 0; i < s.lines.size() && ok; ++i)
            for (std::size_t j = i + 1; j < s.lines.size() && ok; ++j) {
                Rational x = crossing_x(s.lines[i], s.lines[j]);
                ok = x.abs() < a && s.lines[i].at(x).abs() < a;
            }
        if (ok) return s.lines;
    }
    throw RefinementExhausted("could not snap slopes to unit directions", {});
}

// Unit direction whose rise is close to h (used for nearly horizontal arcs).
Point direction_with_rise(const Rational& h, const Rational& tol) {
    Rational target = h;
    Point d = snap_slope_to_unit_direction(target, tol / Rational(4));
    for (int i = 0; i < 6 && (d.y - h).abs() > tol; ++i) {
        target = target * h / d.y;
        d = snap_slope_to_unit_direction(target, tol / Rational(4));
    }
    return d;
}

// Horizontal unit arcs A_i spanning [x0, x0+1] at heights ys (top to bottom)
// joined by rising arcs B_i that meet only A_i and A_{i+1}. Output A_1, B_1, ..., A_D.
std::vector<Shape> sawtooth(const Rational& x0, const std::vector<Rational>& ys) {
    const std::size_t D = ys.size();
    std::vector<Rational> gap(D - 1);
    for (std::size_t i = 0; i + 1 < D; ++i) gap[i] = ys[i] - ys[i + 1];
    std::vector<Shape> out;
    for (std::size_t i = 0; i < D; ++i) {
        out.emplace_back(UnitSegment({x0, ys[i]}, {Rational(1), Rational(0)}));
        if (i + 1 == D) break;
        Rational m = gap[i];
        if (i > 0) m = min(m, gap[i - 1]);
        if (i + 2 < D) m = min(m, gap[i + 1]);
        Rational ov = m / Rational(16);
        Point d = direction_with_rise(gap[i] + Rational(2) * ov, ov / Rational(4));
        out.emplace_back(UnitSegment({x0 + kHalf - d.x * kHalf, ys[i + 1] - ov}, d));
    }
    return out;
}

// Four unit arcs from S to T. side = -1 routes below the content, +1 above.
// E1 leaves S steeply, E2 and E3 are shallow and cross once, E4 lands on T.
std::array<Shape, 4> closing_router(const Point& S, const Point& T, int side) {
    const Rational sd(side);
    Point d1{Rational(4, 5), sd * Rational(3, 5)};
    Point d4{Rational(4, 5), -sd * Rational(3, 5)};
    Point p1 = S + kHalf * d1;
    Point p4 = T - kHalf * d4;
    Rational H = p4.x - p1.x;
    Rational m = (p4.y - p1.y) / H;
    const Rational dip(1, 50);
    Point d2 = snap_slope_to_unit_direction(m + sd * dip, dip / Rational(40));
    Point d3 = snap_slope_to_unit_direction(m - sd * dip, dip / Rational(40));
    return {UnitSegment(S, d1), UnitSegment(p1, d2), UnitSegment(p4 - d3, d3), UnitSegment(T - d4, d4)};
}

Point on_line(const Line& l, const Rational& x) { return {x, l.at(x)}; }

// One attempt at fixed rho and eta; empty when the layout is not separable.
std::optional<ObjectMap> unit_attempt(const std::vector<Line>& base, const std::vector<Point>& dirs,
                                      const ReductionArtifact& art, const Rational& rho, const Rational& eta,
                                      const Rational& a) {
    const int n = art.n;
    auto canvas = detail::build_canvas(base, crossing_orders(art.wiring), rho, eta, false);
    if (!canvas) return std::nullopt;
    const Canvas& c = *canvas;
    auto dir_of = [&](const VL& v) { return dirs[v.a - 1]; };

    ObjectMap obj;
    for (int l = 1; l <= n; ++l) {
        VL p = VL::pseudoline(l);
        Point d = dir_of(p);
        obj.emplace(p, UnitSegment(Point{Rational(0), base[l - 1].intercept} - kHalf * d, d));
    }
    for (const auto& [p, r] : c.probe_right_end) {
        Point d = dir_of(p);
        obj.emplace(p, UnitSegment(on_line(c.lines.at(p), r - d.x), d));
    }

    const Rational xl = c.x_min - a / Rational(2) - Rational(1);
    const Rational xr = c.x_max + a / Rational(2) + Rational(1);
    for (const auto& h : art.left_boundary_order)
        obj.emplace(VL::connector_left(h), UnitSegment(on_line(c.lines.at(h), xl), dir_of(h)));
    for (const auto& h : art.right_boundary_order) {
        Point d = dir_of(h);
        obj.emplace(VL::connector_right(h), UnitSegment(on_line(c.lines.at(h), xr - d.x), d));
    }

    auto left_y = detail::heights_at(c, art.left_boundary_order, xl);
    auto right_y = detail::heights_at(c, art.right_boundary_order, xr);
    if (left_y.empty() || right_y.empty()) return std::nullopt;

    std::vector<Shape> cyc = sawtooth(xl - Rational(1), left_y);
    auto bottom = closing_router({xl - Rational(1, 20), left_y.back()}, {xr + Rational(3, 10), right_y.back()}, -1);
    cyc.insert(cyc.end(), bottom.begin(), bottom.end());
    auto right = sawtooth(xr, right_y);
    cyc.insert(cyc.end(), right.rbegin(), right.rend());
    auto top = closing_router({xl - Rational(3, 10), left_y.front()}, {xr + Rational(1, 20), right_y.front()}, 1);
    cyc.insert(cyc.end(), top.rbegin(), top.rend());
    if (cyc.size() != art.cycle_order.size()) throw std::logic_error("cycle length disagrees with the reduction");
    for (std::size_t i = 0; i < cyc.size(); ++i) obj.emplace(art.cycle_order[i], cyc[i]);
    return obj;
}

}  // namespace

Realization realize_unit(const LineArrangement& L, const ReductionArtifact& art, const RealizerParams& params) {
    if (art.kind != ReductionKind::Unit) throw std::invalid_argument("realize_unit needs a unit reduction");
    params.validate(art.n);
    LineArrangement ordered = labeled_lines(L, art.wiring);
    LineArrangement sq = squeeze(ordered, params.a * Rational(9, 10));
    const CrossingOrders want = crossing_orders(art.wiring);
    std::vector<Point> dirs;
    std::vector<Line> base = snap_lines(sq.lines, want, params.a, dirs);

    Rational rho = detail::starting_rho(base, params.rho, art.n);
    Rational eta = min(params.eta, params.a / Rational(8));

    GraphDiff diff;
    for (int round = 0; round < params.maxRefine; ++round, rho = rho / Rational(2), eta = eta / Rational(2)) {
        auto obj = unit_attempt(base, dirs, art, rho, eta, params.a);
        if (!obj) continue;
        diff = {};
        if (graphs_equal(art.graph, intersection_graph(*obj), &diff))
            return {RealizationKind::UnitSegments, 0, std::move(*obj)};
    }
    throw RefinementExhausted("no exact realization after " + std::to_string(params.maxRefine) + " rounds", diff);
}

}  // namespace segrec
