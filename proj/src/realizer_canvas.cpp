#include "realizer_detail.hpp"

#include <algorithm>
#include <numeric>

namespace segrec {

void RealizerParams::validate(int n) const {
    if (a.sign() <= 0 || rho.sign() <= 0 || eta.sign() <= 0)
        throw std::invalid_argument("realizer parameters must be positive");
    if (rho * Rational(n - 1) >= a / Rational(4)) throw std::invalid_argument("rho*(n-1) must be below a/4");
    if (maxRefine < 1) throw std::invalid_argument("maxRefine must be at least 1");
}

LineArrangement labeled_lines(const LineArrangement& L, const WiringDiagram& w) {
    require_valid(w);
    if (static_cast<int>(L.lines.size()) != w.n)
        throw WiringMismatch("arrangement has " + std::to_string(L.lines.size()) + " lines, wiring has " +
                             std::to_string(w.n));
    CrossingOrders got;
    try {
        got = crossing_orders_of_lines(L);
    } catch (const DegenerateArrangement& e) {
        throw WiringMismatch(std::string("arrangement is not simple: ") + e.what());
    }
    if (got != crossing_orders(w)) throw WiringMismatch("arrangement crossing orders differ from the wiring diagram");
    LineArrangement out;
    for (int i : left_order(L)) out.lines.push_back(L.lines[i]);
    return out;
}

namespace detail {

using VL = VertexLabel;

Rational tube_offset(const VL& v, const Rational& rho, bool twins) {
    const Rational half = twins ? rho / Rational(2) : Rational(0);
    switch (v.kind) {
        case Kind::Pseudoline:
            return 0;
        case Kind::Twin:
            return -half;
        case Kind::Probe:
            return v.side == Side::Above ? Rational(v.b) * rho : -half - Rational(v.b) * rho;
        default:
            throw std::invalid_argument("not a tube curve: " + v.str());
    }
}

namespace {

Rational crossing_of(const Line& p, const Line& q) { return (q.intercept - p.intercept) / (p.slope - q.slope); }

}  // namespace

std::optional<Canvas> build_canvas(const std::vector<Line>& base, const CrossingOrders& orders,
                                   const Rational& rho, const Rational& eta, bool twins) {
    const int n = static_cast<int>(base.size());
    Canvas c;
    std::vector<std::vector<VL>> tube(n + 1);
    for (int l = 1; l <= n; ++l) {
        tube[l].push_back(VL::pseudoline(l));
        if (twins) tube[l].push_back(VL::twin(l));
        for (Side s : {Side::Above, Side::Below})
            for (int t = 1; t < n; ++t) tube[l].push_back(VL::probe(l, s, t));
        for (const auto& v : tube[l]) {
            const Line& b = base[l - 1];
            c.lines[v] = {b.slope, b.intercept + tube_offset(v, rho, twins)};
        }
    }

    bool first = true;
    for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m)
            for (const auto& u : tube[l])
                for (const auto& v : tube[m]) {
                    Rational x = crossing_of(c.lines[u], c.lines[v]);
                    if (first) c.x_min = c.x_max = x, first = false;
                    c.x_min = min(c.x_min, x);
                    c.x_max = max(c.x_max, x);
                }

    // Along each probe, the crossings with pair m form a cluster; clusters must
    // appear in crossing order and the probe stops between cluster t and t+1.
    for (int l = 1; l <= n; ++l)
        for (const auto& p : tube[l]) {
            if (p.kind != Kind::Probe) continue;
            std::vector<std::pair<Rational, Rational>> clusters;  // by rank
            for (int m : orders[l - 1]) {
                Rational lo, hi;
                bool f = true;
                for (const auto& v : tube[m]) {
                    Rational x = crossing_of(c.lines[p], c.lines[v]);
                    if (f) lo = hi = x, f = false;
                    lo = min(lo, x);
                    hi = max(hi, x);
                }
                clusters.emplace_back(lo, hi);
            }
            for (std::size_t j = 0; j + 1 < clusters.size(); ++j)
                if (!(clusters[j].second < clusters[j + 1].first)) return std::nullopt;
            const int t = p.b;
            c.probe_right_end[p] = t == n - 1 ? clusters[t - 1].second + eta
                                              : (clusters[t - 1].second + clusters[t].first) / Rational(2);
        }
    return c;
}

Rational starting_rho(const std::vector<Line>& base, const Rational& rho, int n) {
    Rational dx, ds;
    bool first = true;
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::vector<Rational> xs;
        for (std::size_t j = 0; j < base.size(); ++j)
            if (j != i) xs.push_back(crossing_of(base[i], base[j]));
        std::sort(xs.begin(), xs.end());
        for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
            dx = first ? xs[j + 1] - xs[j] : min(dx, xs[j + 1] - xs[j]);
            first = false;
        }
        if (i + 1 < base.size()) {
            Rational d = (base[i + 1].slope - base[i].slope).abs();
            ds = i == 0 ? d : min(ds, d);
        }
    }
    if (base.size() < 2) return rho;
    return min(rho, (first ? ds : dx * ds) / Rational(16 * n));
}

std::vector<Rational> heights_at(const Canvas& c, const std::vector<VL>& hosts, const Rational& x) {
    std::vector<Rational> ys;
    for (const auto& h : hosts) {
        ys.push_back(c.lines.at(h).at(x));
        if (ys.size() > 1 && !(ys[ys.size() - 1] < ys[ys.size() - 2])) return {};
    }
    return ys;
}

}  // namespace detail
}  // namespace segrec
