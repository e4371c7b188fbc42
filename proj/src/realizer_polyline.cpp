#include "segrec/realizer.hpp"

#include "realizer_detail.hpp"

namespace segrec {

namespace {

using VL = VertexLabel;
using detail::Canvas;

// Straight piece padded with k evenly spaced collinear interior points.
Polyline padded(const Point& p, const Point& q, int k) {
    std::vector<Point> pts;
    for (int j = 0; j <= k + 1; ++j) pts.push_back(p + Rational(j, k + 1) * (q - p));
    return Polyline(std::move(pts));
}

// Vertical chain at x through breakpoints z[0] > z[1] > ...; arc j joins z[j-1] and z[j].
void add_chain(ObjectMap& obj, int chain, const Rational& x, const std::vector<Rational>& z, int k) {
    for (std::size_t j = 1; j < z.size(); ++j)
        obj.emplace(VL::chain_arc(chain, static_cast<int>(j)), padded({x, z[j - 1]}, {x, z[j]}, k));
}

// Breakpoints around crossing heights hs (top to bottom): each height gets its own
// arc, with one spare arc between consecutive heights and at both ends.
std::optional<std::vector<Rational>> breakpoints(const std::vector<Rational>& hs, const Rational& top,
                                                 const Rational& bottom) {
    Rational e = top - hs.front();
    e = min(e, hs.back() - bottom);
    for (std::size_t i = 0; i + 1 < hs.size(); ++i) e = min(e, hs[i] - hs[i + 1]);
    if (e.sign() <= 0) return std::nullopt;
    e = e / Rational(4);
    std::vector<Rational> z{top};
    for (const auto& h : hs) {
        z.push_back(h + e);
        z.push_back(h - e);
    }
    z.push_back(bottom);
    return z;
}

struct PairPath {
    std::vector<Point> pl, twin;
};

// Weaving of one pair. X[i] is the x of chain i (1-based, X[0] unused), W the chain spacing.
// The pseudoline bends just right of chains 2..k+1, the twin right of chains k+2..2k+1;
// the pair changes sides once between consecutive inner chains.
PairPath weave(const Line& base, const Rational& tau, const Rational& x_start, const std::vector<Rational>& X,
               const Rational& W, int k) {
    const Rational A = Rational(2) * tau;
    auto m = [&](int i) { return X[2] + Rational(i - 2) * W + W / Rational(4); };
    // Relative offset twin - pseudoline at each bend: sign matches the side needed at chain i.
    auto delta = [&](int i) { return i == 2 ? -tau : (i % 2 == 0 ? -A : A); };

    std::vector<std::pair<Rational, Rational>> up{{x_start, 0}, {m(2), 0}};
    for (int i = 3; i <= k + 1; ++i) up.emplace_back(m(i), -tau - delta(i));
    // Last piece of the pseudoline, aimed through the twin's first bend.
    const Rational u_from = up.back().second, x_from = up.back().first;
    const Rational slope = (-tau - delta(k + 2) - u_from) / (m(k + 2) - x_from);
    auto up_at = [&](const Rational& x) { return u_from + slope * (x - x_from); };

    const Rational x_end = X[2 * k + 2] - W / Rational(16);
    std::vector<std::pair<Rational, Rational>> ut{{x_start, -tau}};
    for (int i = k + 2; i <= 2 * k + 1; ++i) ut.emplace_back(m(i), up_at(m(i)) + delta(i));
    {
        const auto [xa, ua] = ut.back();
        const Rational xb = m(2 * k + 2), ub = up_at(xb) + (-A);
        ut.emplace_back(x_end, ua + (ub - ua) / (xb - xa) * (x_end - xa));
    }
    up.emplace_back(x_end, up_at(x_end));

    PairPath out;
    for (const auto& [x, u] : up) out.pl.push_back({x, base.at(x) + u});
    for (const auto& [x, u] : ut) out.twin.push_back({x, base.at(x) + u});
    return out;
}

// Height at x of an x-monotone polyline.
Rational height_at(const std::vector<Point>& pts, const Rational& x) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i].x <= x && x <= pts[i + 1].x)
            return pts[i].y + (pts[i + 1].y - pts[i].y) * (x - pts[i].x) / (pts[i + 1].x - pts[i].x);
    // Past the right end: extend the last piece.
    const auto& a = pts[pts.size() - 2];
    const auto& b = pts.back();
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

std::optional<ObjectMap> polyline_attempt(const std::vector<Line>& base, const ReductionArtifact& art, int k,
                                          const Rational& rho, const Rational& eta, const Rational& a) {
    const int n = art.n;
    auto canvas = detail::build_canvas(base, crossing_orders(art.wiring), rho, eta, true);
    if (!canvas) return std::nullopt;
    const Canvas& c = *canvas;
    const Rational mu = a / Rational(2), W(1), tau = rho / Rational(2);
    const int chains = 2 * k + 2;
    std::vector<Rational> X(chains + 1);
    X[1] = c.x_min - Rational(2) * mu;
    for (int i = 2; i <= chains; ++i) X[i] = c.x_max + Rational(2) * mu + Rational(i - 2) * W;
    const Rational x_start = c.x_min - mu;

    ObjectMap obj;
    std::map<VL, std::vector<Point>> path;
    for (int l = 1; l <= n; ++l) {
        auto pp = weave(base[l - 1], tau, x_start, X, W, k);
        path[VL::pseudoline(l)] = pp.pl;
        path[VL::twin(l)] = pp.twin;
        obj.emplace(VL::pseudoline(l), Polyline(pp.pl));
        obj.emplace(VL::twin(l), Polyline(pp.twin));
    }
    for (const auto& [p, r] : c.probe_right_end) {
        const Line& ln = c.lines.at(p);
        obj.emplace(p, padded({x_start, ln.at(x_start)}, {r, ln.at(r)}, k));
    }
    for (const auto& h : art.left_boundary_order) {
        const Line& ln = c.lines.at(h);
        const Rational xe = c.x_min - mu / Rational(2);
        obj.emplace(VL::connector_left(h), padded({X[1], ln.at(X[1])}, {xe, ln.at(xe)}, k));
    }
    const Rational xr0 = X[chains] - W / Rational(8);
    for (const auto& h : art.right_boundary_order) {
        const auto& pts = path.at(h);
        obj.emplace(VL::connector_right(h),
                    padded({xr0, height_at(pts, xr0)}, {X[chains], height_at(pts, X[chains])}, k));
    }

    // Crossing heights per chain; everything must sit in lane order.
    std::vector<std::vector<Rational>> hs(chains + 1);
    auto left = detail::heights_at(c, art.left_boundary_order, X[1]);
    if (left.empty()) return std::nullopt;
    hs[1] = left;
    Rational ymax = left.front(), ymin = left.back();
    for (int i = 2; i <= chains; ++i) {
        for (const auto& h : art.right_boundary_order) {
            // Inner chains swap the pair on odd chains.
            const VL& v = i % 2 == 1 ? VL{h.kind == Kind::Pseudoline ? Kind::Twin : Kind::Pseudoline,
                                           Kind::Vertex, h.a}
                                      : h;
            hs[i].push_back(height_at(path.at(v), X[i]));
        }
        for (std::size_t j = 0; j + 1 < hs[i].size(); ++j)
            if (!(hs[i][j] > hs[i][j + 1])) return std::nullopt;
        ymax = max(ymax, hs[i].front());
        ymin = min(ymin, hs[i].back());
    }
    for (const auto& [v, pts] : path)
        for (const auto& p : pts) ymax = max(ymax, p.y), ymin = min(ymin, p.y);
    const Rational top = ymax + Rational(1, 2), bottom = ymin - Rational(1, 2);

    std::vector<std::vector<Rational>> z(chains + 1);
    for (int i = 1; i <= chains; ++i) {
        auto b = breakpoints(hs[i], top, bottom);
        if (!b) return std::nullopt;
        z[i] = *b;
        if (static_cast<int>(z[i].size()) != art.chain_length(i) + 1)
            throw std::logic_error("chain length disagrees with the reduction");
        add_chain(obj, i, X[i], z[i], k);
    }
    // Links leave chain i from the middle of its end arc and land on the end point of chain i+1.
    for (int i = 1; i < chains; ++i) {
        const Rational xm = (X[i] + X[i + 1]) / Rational(2);
        const Point mt{xm, top + Rational(1, 2)}, mb{xm, bottom - Rational(1, 2)};
        const int L = art.chain_length(i);
        const Point st{X[i], (z[i][0] + z[i][1]) / Rational(2)};
        const Point sb{X[i], (z[i][L - 1] + z[i][L]) / Rational(2)};
        obj.emplace(VL::top_arc(2 * i - 1), padded(st, mt, k));
        obj.emplace(VL::top_arc(2 * i), padded(mt, {X[i + 1], z[i + 1].front()}, k));
        obj.emplace(VL::bottom_arc(2 * i - 1), padded(sb, mb, k));
        obj.emplace(VL::bottom_arc(2 * i), padded(mb, {X[i + 1], z[i + 1].back()}, k));
    }
    return obj;
}

}  // namespace

Realization realize_polyline(const LineArrangement& L, const ReductionArtifact& art, int k,
                             const RealizerParams& params) {
    if (art.kind != ReductionKind::Polyline) throw std::invalid_argument("realize_polyline needs a polyline reduction");
    if (k != art.k) throw InvalidK("k = " + std::to_string(k) + " but the reduction was built for k = " +
                                   std::to_string(art.k));
    params.validate(art.n);
    LineArrangement ordered = labeled_lines(L, art.wiring);
    std::vector<Line> base = squeeze(ordered, params.a * Rational(9, 10)).lines;

    Rational rho = detail::starting_rho(base, params.rho, art.n), eta = min(params.eta, params.a / Rational(8));
    GraphDiff diff;
    for (int round = 0; round < params.maxRefine; ++round, rho = rho / Rational(2), eta = eta / Rational(2)) {
        auto obj = polyline_attempt(base, art, k, rho, eta, params.a);
        if (!obj) continue;
        diff = {};
        if (graphs_equal(art.graph, intersection_graph(*obj), &diff))
            return {RealizationKind::Polylines, k, std::move(*obj)};
    }
    throw RefinementExhausted("no exact realization after " + std::to_string(params.maxRefine) + " rounds", diff);
}

}  // namespace segrec
