#include "segrec/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace segrec {

void SearchConfig::validate() const {
    if (restarts < 1 || iterations < 1) throw std::invalid_argument("restarts and iterations must be at least 1");
    if (!(margin > 0)) throw std::invalid_argument("margin must be positive");
    if (!(step > 0) || !(shrink > 0 && shrink < 1) || !(grow >= 1))
        throw std::invalid_argument("step schedule needs step > 0, 0 < shrink < 1, grow >= 1");
}

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
    // splitmix64 finalizer over the pair.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(restart) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

struct V2 {
    double x = 0, y = 0;
};
V2 operator+(V2 a, V2 b) { return {a.x + b.x, a.y + b.y}; }
V2 operator-(V2 a, V2 b) { return {a.x - b.x, a.y - b.y}; }
V2 operator*(double s, V2 a) { return {s * a.x, s * a.y}; }
double dot(V2 a, V2 b) { return a.x * b.x + a.y * b.y; }
double cross(V2 a, V2 b) { return a.x * b.y - a.y * b.x; }

// Endpoints of the two segments: e[0], e[1] first segment, e[2], e[3] second.
using Ends = std::array<V2, 4>;

// Signed separation: distance when disjoint, minus the penetration depth when
// they meet. Depth is the smallest distance from an endpoint to the other
// segment's line, which vanishes exactly when the segments only touch.
struct Separation {
    double sd = 0;
    bool meet = false;
    Ends grad{};  // d sd / d endpoint
};

int side(V2 a, V2 b, V2 c) {
    double o = cross(b - a, c - a);
    return (o > 0) - (o < 0);
}

bool meet(const Ends& e) {
    int o1 = side(e[0], e[1], e[2]), o2 = side(e[0], e[1], e[3]);
    int o3 = side(e[2], e[3], e[0]), o4 = side(e[2], e[3], e[1]);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    auto on = [](V2 a, V2 b, V2 c) { return dot(a - c, b - c) <= 0; };
    return (o1 == 0 && on(e[0], e[1], e[2])) || (o2 == 0 && on(e[0], e[1], e[3])) ||
           (o3 == 0 && on(e[2], e[3], e[0])) || (o4 == 0 && on(e[2], e[3], e[1]));
}

Separation separation(const Ends& e) {
    Separation s;
    s.meet = meet(e);
    double best = INFINITY;
    // Endpoint i against the segment (a, b) of the other object.
    for (int i = 0; i < 4; ++i) {
        const int a = i < 2 ? 2 : 0, b = a + 1;
        V2 p = e[i], u = e[b] - e[a], w = p - e[a];
        if (!s.meet) {
            double t = std::clamp(dot(w, u) / dot(u, u), 0.0, 1.0);
            V2 r = p - (e[a] + t * u);
            double d2 = dot(r, r);
            if (d2 < best) {
                best = d2;
                s.grad = {};
                s.grad[i] = 2 * r;
                s.grad[a] = -2 * (1 - t) * r;
                s.grad[b] = -2 * t * r;
            }
        } else {
            const double len = std::sqrt(dot(u, u));
            const double c = cross(u, w), h = c / len;
            if (std::abs(h) < best) {
                best = std::abs(h);
                const double sg = h < 0 ? -1 : 1;
                V2 dc_dw{-u.y, u.x}, dc_du{w.y, -w.x};
                V2 dlen_du = (1 / len) * u;
                V2 dh_du = (1 / len) * dc_du - (c / (len * len)) * dlen_du;
                V2 dh_dw = (1 / len) * dc_dw;
                s.grad = {};
                // sd = -|h|
                s.grad[i] = -sg * dh_dw;
                s.grad[b] = -sg * dh_du;
                s.grad[a] = -sg * (-1.0 * dh_du - dh_dw);
            }
        }
    }
    if (s.meet) {
        s.sd = -best;
    } else {
        s.sd = std::sqrt(best);
        const double k = best > 0 ? 1 / (2 * s.sd) : 0;
        for (auto& g : s.grad) g = k * g;
    }
    return s;
}

struct Geometry {
    std::vector<VertexLabel> order;
    std::vector<std::pair<int, int>> pairs;
    std::vector<bool> adjacent;
};

Geometry geometry(const LabeledGraph& g) {
    Geometry out;
    out.order = g.vertices();
    for (std::size_t i = 0; i < out.order.size(); ++i)
        for (std::size_t j = i + 1; j < out.order.size(); ++j) {
            out.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
            out.adjacent.push_back(g.has_edge(out.order[i], out.order[j]));
        }
    return out;
}

// Parameters x = (cx, cy, angle) per vertex. `robust` switches from the
// reported penalty to the search objective, which also asks edges to cross
// at depth >= margin and pushes overlapping non-edges apart.
double evaluate(const Geometry& geo, const std::vector<double>& x, double margin, bool robust,
                std::vector<double>* grad) {
    const std::size_t n = geo.order.size();
    std::vector<std::array<V2, 2>> ends(n);
    for (std::size_t v = 0; v < n; ++v) {
        V2 c{x[3 * v], x[3 * v + 1]}, d{0.5 * std::cos(x[3 * v + 2]), 0.5 * std::sin(x[3 * v + 2])};
        ends[v] = {c - d, c + d};
    }
    if (grad) grad->assign(3 * n, 0.0);
    double total = 0;
    for (std::size_t k = 0; k < geo.pairs.size(); ++k) {
        const auto [u, v] = geo.pairs[k];
        Separation s = separation({ends[u][0], ends[u][1], ends[v][0], ends[v][1]});
        double value = 0, slope = 0;  // term and d term / d sd
        if (geo.adjacent[k]) {
            const double gap = robust ? s.sd + margin : (s.meet ? 0 : s.sd);
            if (gap > 0) value = gap * gap, slope = 2 * gap;
        } else {
            const double gap = margin - (robust || !s.meet ? s.sd : 0);
            if (gap > 0) value = gap * gap, slope = robust || !s.meet ? -2 * gap : 0;
        }
        total += value;
        if (!grad || slope == 0) continue;
        const int who[4] = {u, u, v, v};
        for (int i = 0; i < 4; ++i) {
            const int o = who[i];
            const double th = x[3 * o + 2];
            // d endpoint / d angle: -+ (1/2)(-sin, cos)
            V2 dth{-0.5 * std::sin(th), 0.5 * std::cos(th)};
            if (i % 2 == 0) dth = -1.0 * dth;
            (*grad)[3 * o] += slope * s.grad[i].x;
            (*grad)[3 * o + 1] += slope * s.grad[i].y;
            (*grad)[3 * o + 2] += slope * dot(s.grad[i], dth);
        }
    }
    return total;
}

std::vector<double> flatten(const Geometry& geo, const Placement& p) {
    std::vector<double> x;
    for (const auto& v : geo.order) {
        auto it = p.find(v);
        if (it == p.end()) throw std::invalid_argument("placement has no pose for " + v.str());
        x.insert(x.end(), {it->second.cx, it->second.cy, it->second.angle});
    }
    return x;
}

Placement unflatten(const Geometry& geo, const std::vector<double>& x) {
    Placement p;
    for (std::size_t v = 0; v < geo.order.size(); ++v) p[geo.order[v]] = {x[3 * v], x[3 * v + 1], x[3 * v + 2]};
    return p;
}

// Exact unit direction close to angle: the shallower of slope and inverse
// slope is snapped, so the target never exceeds 1 in magnitude.
Point snap_angle(double angle) {
    const Rational dev(1, 1000000000);
    const double c = std::cos(angle), s = std::sin(angle);
    if (std::abs(c) >= std::abs(s)) {
        Point d = snap_slope_to_unit_direction(Rational::from_double(s / c, 1000000000000L), dev);
        return c < 0 ? Point{-d.x, -d.y} : d;
    }
    Point d = snap_slope_to_unit_direction(Rational::from_double(c / s, 1000000000000L), dev);
    Point r{d.y, d.x};
    return s < 0 ? Point{-r.x, -r.y} : r;
}

}  // namespace

PenaltyValue penalty(const LabeledGraph& g, const Placement& p, double margin) {
    Geometry geo = geometry(g);
    PenaltyValue out;
    out.value = evaluate(geo, flatten(geo, p), margin, false, &out.gradient);
    return out;
}

Certificate certify(const LabeledGraph& g, const Placement& p) {
    Certificate out;
    out.realization.kind = RealizationKind::UnitSegments;
    for (const auto& v : g.vertices()) {
        auto it = p.find(v);
        if (it == p.end()) throw std::invalid_argument("placement has no pose for " + v.str());
        const Pose& pose = it->second;
        Point d = snap_angle(pose.angle);
        Point c{Rational::from_double(pose.cx, 1000000000L), Rational::from_double(pose.cy, 1000000000L)};
        out.realization.objects.emplace(v, UnitSegment(c - Rational(1, 2) * d, d));
    }
    out.certified = graphs_equal(g, intersection_graph(out.realization.objects), &out.diff);
    return out;
}

SearchResult search_unit(const LabeledGraph& g, const SearchConfig& cfg) {
    cfg.validate();
    const Geometry geo = geometry(g);
    const std::size_t n = geo.order.size();
    const double spread = 0.5 + 0.5 * std::sqrt(static_cast<double>(n));
    SearchResult result;
    for (int r = 0; r < cfg.restarts; ++r) {
        std::vector<double> x;
        if (r == 0 && cfg.initial) {
            x = flatten(geo, *cfg.initial);
        } else {
            std::mt19937_64 rng(restart_seed(cfg.seed, r));
            std::uniform_real_distribution<double> pos(0, spread), ang(0, M_PI);
            for (std::size_t v = 0; v < n; ++v) {
                x.push_back(pos(rng));
                x.push_back(pos(rng));
                x.push_back(ang(rng));
            }
        }
        std::vector<double> grad, trial_grad;
        double f = evaluate(geo, x, cfg.margin, true, &grad);
        double step = cfg.step;
        int it = 0;
        for (; it < cfg.iterations && f >= 1e-12; ++it) {
            double g2 = 0;
            for (double v : grad) g2 += v * v;
            if (g2 == 0) break;
            bool moved = false;
            std::vector<double> y(x.size());
            while (step > 1e-14) {
                for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - step * grad[i];
                double fy = evaluate(geo, y, cfg.margin, true, &trial_grad);
                if (fy <= f - 1e-4 * step * g2) {
                    x.swap(y);
                    grad.swap(trial_grad);
                    f = fy;
                    step = std::min(step * cfg.grow, 1e4);
                    moved = true;
                    break;
                }
                step *= cfg.shrink;
            }
            if (!moved) break;
        }
        RestartLog log{r, it, evaluate(geo, x, cfg.margin, false, nullptr), false};
        if (f < 1e-12 && log.penalty < 1e-12) {
            Placement p = unflatten(geo, x);
            Certificate c = certify(g, p);
            log.certified = c.certified;
            result.transcript.push_back(log);
            if (c.certified) {
                result.placement = std::move(p);
                result.realization = std::move(c.realization);
                result.restart = r;
                return result;
            }
            continue;
        }
        result.transcript.push_back(log);
    }
    throw NotFound("no certified placement after " + std::to_string(result.transcript.size()) + " restarts");
}

}  // namespace segrec
