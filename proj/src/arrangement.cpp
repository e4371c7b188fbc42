#include "segrec/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace segrec {

std::vector<std::string> validate_wiring(const WiringDiagram& w) {
    std::vector<std::string> out;
    if (w.n < 1) {
        out.push_back("n must be at least 1");
        return out;
    }
    const std::size_t expected = static_cast<std::size_t>(w.n) * (w.n - 1) / 2;
    if (w.swaps.size() != expected) {
        std::ostringstream os;
        os << "expected " << expected << " swaps, got " << w.swaps.size();
        out.push_back(os.str());
    }
    std::vector<int> order(w.n);
    std::iota(order.begin(), order.end(), 1);
    std::map<std::pair<int, int>, int> count;
    for (std::size_t s = 0; s < w.swaps.size(); ++s) {
        int p = w.swaps[s];
        if (p < 1 || p > w.n - 1) {
            std::ostringstream os;
            os << "swap #" << s + 1 << " has position " << p << " outside 1.." << w.n - 1;
            out.push_back(os.str());
            continue;
        }
        int a = order[p - 1], b = order[p];
        ++count[{std::min(a, b), std::max(a, b)}];
        std::swap(order[p - 1], order[p]);
    }
    for (int a = 1; a <= w.n; ++a)
        for (int b = a + 1; b <= w.n; ++b) {
            auto it = count.find({a, b});
            int c = it == count.end() ? 0 : it->second;
            if (c != 1) {
                std::ostringstream os;
                os << "pair {" << a << "," << b << "} swaps " << c << " times";
                out.push_back(os.str());
            }
        }
    for (int i = 0; i < w.n; ++i)
        if (order[i] != w.n - i) {
            out.push_back("final order is not the reversal");
            break;
        }
    return out;
}

void require_valid(const WiringDiagram& w) {
    auto v = validate_wiring(w);
    if (!v.empty()) throw InvalidWiring("invalid wiring diagram: " + v.front());
}

CrossingOrders crossing_orders(const WiringDiagram& w) {
    require_valid(w);
    CrossingOrders out(w.n);
    std::vector<int> order(w.n);
    std::iota(order.begin(), order.end(), 1);
    for (int p : w.swaps) {
        int a = order[p - 1], b = order[p];
        out[a - 1].push_back(b);
        out[b - 1].push_back(a);
        std::swap(order[p - 1], order[p]);
    }
    return out;
}

std::vector<int> left_order(const LineArrangement& L) {
    std::vector<int> idx(L.lines.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return L.lines[a].slope < L.lines[b].slope; });
    return idx;
}

Rational crossing_x(const Line& a, const Line& b) {
    if (a.slope == b.slope) throw DegenerateArrangement("parallel lines have no crossing");
    return (b.intercept - a.intercept) / (a.slope - b.slope);
}

void require_generic(const LineArrangement& L) {
    const auto n = L.lines.size();
    std::set<Rational> slopes;
    for (const auto& l : L.lines)
        if (!slopes.insert(l.slope).second) throw DegenerateArrangement("repeated slope");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational x = crossing_x(L.lines[i], L.lines[j]);
            Rational y = L.lines[i].at(x);
            for (std::size_t k = j + 1; k < n; ++k)
                if (L.lines[k].at(x) == y)
                    throw DegenerateArrangement("three lines are concurrent");
        }
}

namespace {

struct Crossing {
    Rational x;
    int a;  // pseudoline labels (1-based)
    int b;
};

std::vector<Crossing> sorted_crossings(const LineArrangement& L, const std::vector<int>& label_of) {
    std::vector<Crossing> cs;
    const int n = static_cast<int>(L.lines.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            cs.push_back({crossing_x(L.lines[i], L.lines[j]), label_of[i], label_of[j]});
    std::stable_sort(cs.begin(), cs.end(), [](const Crossing& u, const Crossing& v) { return u.x < v.x; });
    return cs;
}

std::vector<int> labels_by_index(const LineArrangement& L) {
    auto lo = left_order(L);
    std::vector<int> label_of(L.lines.size());
    for (std::size_t pos = 0; pos < lo.size(); ++pos) label_of[lo[pos]] = static_cast<int>(pos) + 1;
    return label_of;
}

}  // namespace

WiringDiagram wiring_from_lines(const LineArrangement& L) {
    require_generic(L);
    const int n = static_cast<int>(L.lines.size());
    auto cs = sorted_crossings(L, labels_by_index(L));
    std::vector<int> order(n), pos(n + 1);
    std::iota(order.begin(), order.end(), 1);
    for (int i = 0; i < n; ++i) pos[order[i]] = i + 1;

    WiringDiagram w{n, {}};
    for (std::size_t g = 0; g < cs.size();) {
        std::size_t h = g;
        while (h < cs.size() && cs[h].x == cs[g].x) ++h;
        // Simultaneous crossings must involve disjoint adjacent pairs.
        std::vector<int> group;
        std::set<int> touched;
        for (std::size_t c = g; c < h; ++c) {
            int pa = pos[cs[c].a], pb = pos[cs[c].b];
            if (!touched.insert(cs[c].a).second || !touched.insert(cs[c].b).second)
                throw DegenerateArrangement("crossings coincide");
            if (std::abs(pa - pb) != 1) throw DegenerateArrangement("non-adjacent simultaneous crossing");
            group.push_back(std::min(pa, pb));
        }
        std::sort(group.begin(), group.end());
        for (int p : group) {
            w.swaps.push_back(p);
            int a = order[p - 1], b = order[p];
            std::swap(order[p - 1], order[p]);
            pos[a] = p + 1;
            pos[b] = p;
        }
        g = h;
    }
    return w;
}

CrossingOrders crossing_orders_of_lines(const LineArrangement& L) {
    require_generic(L);
    const int n = static_cast<int>(L.lines.size());
    auto label_of = labels_by_index(L);
    CrossingOrders out(n);
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<Rational, int>> xs;
        for (int j = 0; j < n; ++j)
            if (j != i) xs.emplace_back(crossing_x(L.lines[i], L.lines[j]), label_of[j]);
        std::sort(xs.begin(), xs.end());
        for (auto& [x, lab] : xs) out[label_of[i] - 1].push_back(lab);
    }
    return out;
}

std::vector<WiringDiagram> dihedral_images(const WiringDiagram& w) {
    WiringDiagram v{w.n, {}}, h{w.n, {w.swaps.rbegin(), w.swaps.rend()}}, vh{w.n, {}};
    for (int p : w.swaps) v.swaps.push_back(w.n - p);
    for (int p : h.swaps) vh.swaps.push_back(w.n - p);
    return {w, v, h, vh};
}

bool equivalent(const WiringDiagram& w1, const WiringDiagram& w2, bool allow_reflection) {
    if (w1.n != w2.n) return false;
    auto target = crossing_orders(w2);
    if (!allow_reflection) return crossing_orders(w1) == target;
    for (const auto& img : dihedral_images(w1))
        if (crossing_orders(img) == target) return true;
    return false;
}

bool is_squeezed(const LineArrangement& L, const Rational& a) {
    for (const auto& l : L.lines)
        if (l.slope.abs() > a) return false;
    for (std::size_t i = 0; i < L.lines.size(); ++i)
        for (std::size_t j = i + 1; j < L.lines.size(); ++j) {
            Rational x = crossing_x(L.lines[i], L.lines[j]);
            Rational y = L.lines[i].at(x);
            if (x.abs() >= a || y.abs() >= a) return false;
        }
    return true;
}

LineArrangement squeeze(const LineArrangement& L, const Rational& a) {
    if (a.sign() <= 0) throw std::invalid_argument("squeeze: a must be positive");
    require_generic(L);
    if (is_squeezed(L, a)) return L;

    // Vertical scaling y -> s*y brings every slope into [-a, a].
    Rational max_slope(0);
    for (const auto& l : L.lines) max_slope = max(max_slope, l.slope.abs());
    Rational s = max_slope > a ? a / max_slope : Rational(1);
    LineArrangement out;
    for (const auto& l : L.lines) out.lines.push_back({s * l.slope, s * l.intercept});
    if (is_squeezed(out, a) || out.lines.size() < 2) return out;

    // Uniform scaling by c about the crossing bounding-box center, then
    // translate that center to the origin. Slopes are unchanged.
    Rational xmin, xmax, ymin, ymax;
    bool first = true;
    for (std::size_t i = 0; i < out.lines.size(); ++i)
        for (std::size_t j = i + 1; j < out.lines.size(); ++j) {
            Rational x = crossing_x(out.lines[i], out.lines[j]);
            Rational y = out.lines[i].at(x);
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            } else {
                xmin = min(xmin, x), xmax = max(xmax, x);
                ymin = min(ymin, y), ymax = max(ymax, y);
            }
        }
    Rational cx = (xmin + xmax) / Rational(2), cy = (ymin + ymax) / Rational(2);
    Rational half = max(xmax - cx, ymax - cy);
    Rational c = half.is_zero() || Rational(2) * half <= a ? Rational(1) : a / (Rational(2) * half);
    // Line y = m x + b maps to Y = m X + c*(b + m*cx - cy) under (x,y) -> (c(x-cx), c(y-cy)).
    for (auto& l : out.lines) l.intercept = c * (l.intercept + l.slope * cx - cy);
    return out;
}

LineArrangement catalog(const std::string& name) {
    static const std::string prefix = "generic";
    if (name.rfind(prefix, 0) != 0 || name.size() != prefix.size() + 1)
        throw UnknownCatalogEntry("unknown catalog entry: " + name);
    int n = name.back() - '0';
    if (n < 2 || n > 8) throw UnknownCatalogEntry("unknown catalog entry: " + name);
    LineArrangement L;
    for (int i = 1; i <= n; ++i) L.lines.push_back({Rational(i), Rational(i * i)});
    return L;
}

}  // namespace segrec
