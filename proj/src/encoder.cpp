#include "segrec/encoder.hpp"

#include <algorithm>

namespace segrec {

Polynomial::Polynomial(long c) {
    if (c != 0) terms_[{}] = c;
}

Polynomial Polynomial::variable(int index) {
    Polynomial p;
    p.terms_[{{index, 1}}] = 1;
    return p;
}

Polynomial Polynomial::constant(const mpz_class& c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

namespace {

Monomial times(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(times(ma, mb), ca * cb);
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational t(c, mpz_class(1));
        for (const auto& [v, e] : m)
            for (int i = 0; i < e; ++i) t *= values.at(v);
        sum += t;
    }
    return sum;
}

int Polynomial::max_variable() const {
    int hi = -1;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) hi = std::max(hi, v);
    return hi;
}

Formula Formula::atom(Polynomial p, Relation r) {
    Formula f;
    f.op = Op::Atom;
    f.poly = std::move(p);
    f.rel = r;
    return f;
}

Formula Formula::all(std::vector<Formula> fs) {
    Formula f;
    f.op = Op::And;
    f.args = std::move(fs);
    return f;
}

Formula Formula::any(std::vector<Formula> fs) {
    Formula f;
    f.op = Op::Or;
    f.args = std::move(fs);
    return f;
}

Formula Formula::negate(Formula g) {
    Formula f;
    f.op = Op::Not;
    f.args.push_back(std::move(g));
    return f;
}

int PolySystem::index_of(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    return it == variables.end() ? -1 : static_cast<int>(it - variables.begin());
}

bool evaluate(const Formula& f, const std::vector<Rational>& values) {
    switch (f.op) {
        case Formula::Op::Atom: {
            int s = f.poly.evaluate(values).sign();
            switch (f.rel) {
                case Relation::Zero: return s == 0;
                case Relation::Positive: return s > 0;
                case Relation::NonNegative: return s >= 0;
                case Relation::NonZero: return s != 0;
            }
            return false;
        }
        case Formula::Op::And:
            return std::all_of(f.args.begin(), f.args.end(), [&](const Formula& g) { return evaluate(g, values); });
        case Formula::Op::Or:
            return std::any_of(f.args.begin(), f.args.end(), [&](const Formula& g) { return evaluate(g, values); });
        case Formula::Op::Not:
            return !evaluate(f.args.at(0), values);
    }
    return false;
}

namespace {

std::vector<Rational> values_of(const PolySystem& sys, const Assignment& a) {
    std::vector<Rational> out;
    for (const auto& v : sys.variables) {
        auto it = a.find(v);
        if (it == a.end()) throw MissingVariable("no value for variable " + v);
        out.push_back(it->second);
    }
    return out;
}

}  // namespace

bool evaluate(const PolySystem& sys, const Assignment& values) {
    auto vs = values_of(sys, values);
    for (const auto& c : sys.constraints)
        if (!evaluate(c.formula, vs)) return false;
    return true;
}

std::vector<std::string> violated(const PolySystem& sys, const Assignment& values) {
    auto vs = values_of(sys, values);
    std::vector<std::string> out;
    for (const auto& c : sys.constraints)
        if (!evaluate(c.formula, vs)) out.push_back(c.tag);
    return out;
}

// ---- encodings ----

namespace {

using P = Polynomial;

P orient(const P& ax, const P& ay, const P& bx, const P& by, const P& cx, const P& cy) {
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

// c lies between a and b on their common line: (a - c).(b - c) <= 0.
Formula between(const P& ax, const P& ay, const P& bx, const P& by, const P& cx, const P& cy) {
    return Formula::atom(-((ax - cx) * (bx - cx) + (ay - cy) * (by - cy)), Relation::NonNegative);
}

// Points of one vertex: x1, y1, ..., x<count>, y<count>.
struct PointVars {
    std::vector<P> x, y;
};

PointVars declare(PolySystem& sys, const VertexLabel& v, int count) {
    PointVars out;
    for (int i = 1; i <= count; ++i)
        for (const char* axis : {"x", "y"}) {
            sys.variables.push_back(v.str() + "." + axis + std::to_string(i));
            (axis[0] == 'x' ? out.x : out.y).push_back(P::variable(static_cast<int>(sys.variables.size()) - 1));
        }
    return out;
}

std::vector<Formula> piece_pairs(const PointVars& u, const PointVars& v) {
    std::vector<Formula> out;
    for (std::size_t i = 0; i + 1 < u.x.size(); ++i)
        for (std::size_t j = 0; j + 1 < v.x.size(); ++j)
            out.push_back(intersection_formula(u.x[i], u.y[i], u.x[i + 1], u.y[i + 1], v.x[j], v.y[j], v.x[j + 1],
                                               v.y[j + 1]));
    return out;
}

PolySystem encode_curves(const LabeledGraph& g, int points, bool unit) {
    PolySystem sys;
    std::map<VertexLabel, PointVars> pv;
    for (const auto& v : g.vertices()) pv[v] = declare(sys, v, points);
    if (unit)
        for (const auto& v : g.vertices()) {
            const auto& p = pv[v];
            P dx = p.x[1] - p.x[0], dy = p.y[1] - p.y[0];
            sys.constraints.push_back({"unit " + v.str(), Formula::atom(dx * dx + dy * dy - P(1), Relation::Zero)});
        }
    const auto vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            auto pairs = piece_pairs(pv[vs[i]], pv[vs[j]]);
            const std::string names = vs[i].str() + " " + vs[j].str();
            if (g.has_edge(vs[i], vs[j])) {
                sys.constraints.push_back(
                    {"edge " + names, pairs.size() == 1 ? pairs[0] : Formula::any(std::move(pairs))});
            } else {
                std::vector<Formula> neg;
                for (auto& f : pairs) neg.push_back(Formula::negate(std::move(f)));
                sys.constraints.push_back(
                    {"nonedge " + names, neg.size() == 1 ? neg[0] : Formula::all(std::move(neg))});
            }
        }
    return sys;
}

}  // namespace

Formula intersection_formula(const P px, const P py, const P qx, const P qy, const P rx, const P ry, const P sx,
                             const P sy) {
    P o1 = orient(px, py, qx, qy, rx, ry), o2 = orient(px, py, qx, qy, sx, sy);
    P o3 = orient(rx, ry, sx, sy, px, py), o4 = orient(rx, ry, sx, sy, qx, qy);
    auto nz = [](const P& o) { return Formula::atom(o, Relation::NonZero); };
    auto z = [](const P& o) { return Formula::atom(o, Relation::Zero); };
    // Proper or touching configuration: not all four points collinear.
    Formula general = Formula::all({Formula::atom(-(o1 * o2), Relation::NonNegative),
                                    Formula::atom(-(o3 * o4), Relation::NonNegative),
                                    Formula::any({nz(o1), nz(o2), nz(o3), nz(o4)})});
    // All collinear: some endpoint lies on the other segment.
    Formula collinear = Formula::all({z(o1), z(o2),
                                      Formula::any({between(rx, ry, sx, sy, px, py), between(rx, ry, sx, sy, qx, qy),
                                                    between(px, py, qx, qy, rx, ry),
                                                    between(px, py, qx, qy, sx, sy)})});
    return Formula::any({std::move(general), std::move(collinear)});
}

PolySystem encode_unit(const LabeledGraph& g) { return encode_curves(g, 2, true); }

PolySystem encode_polyline(const LabeledGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    return encode_curves(g, k + 2, false);
}

PolySystem encode_stretchability(const WiringDiagram& w) {
    const CrossingOrders orders = crossing_orders(w);  // validates
    PolySystem sys;
    std::vector<P> m(w.n + 1), b(w.n + 1);
    for (int i = 1; i <= w.n; ++i) {
        sys.variables.push_back("m" + std::to_string(i));
        m[i] = P::variable(static_cast<int>(sys.variables.size()) - 1);
        sys.variables.push_back("b" + std::to_string(i));
        b[i] = P::variable(static_cast<int>(sys.variables.size()) - 1);
    }
    // Left order from the top is ascending slope; this also fixes every sign of m_i - m_j.
    for (int i = 1; i < w.n; ++i)
        sys.constraints.push_back({"slope " + std::to_string(i) + " " + std::to_string(i + 1),
                                   Formula::atom(m[i + 1] - m[i], Relation::Positive)});
    for (int i = 1; i <= w.n; ++i) {
        const auto& ord = orders[i - 1];
        for (std::size_t t = 0; t + 1 < ord.size(); ++t) {
            const int j = ord[t], jj = ord[t + 1];
            // x_ij < x_ij'  with  x_ij = (b_j - b_i)/(m_i - m_j).
            P lhs = (b[jj] - b[i]) * (m[i] - m[j]) - (b[j] - b[i]) * (m[i] - m[jj]);
            const int sign = ((i > j) == (i > jj)) ? 1 : -1;
            sys.constraints.push_back(
                {"order " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(jj),
                 Formula::atom(sign > 0 ? lhs : -lhs, Relation::Positive)});
        }
    }
    return sys;
}

Assignment flatten(const ObjectMap& objects) {
    Assignment out;
    for (const auto& [v, s] : objects) {
        std::vector<Point> pts;
        if (const auto* u = std::get_if<UnitSegment>(&s)) pts = {u->anchor(), u->tip()};
        else pts = std::get<Polyline>(s).points();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            out[v.str() + ".x" + std::to_string(i + 1)] = pts[i].x;
            out[v.str() + ".y" + std::to_string(i + 1)] = pts[i].y;
        }
    }
    return out;
}

Assignment flatten(const LineArrangement& L) {
    Assignment out;
    const auto order = left_order(L);
    for (std::size_t i = 0; i < order.size(); ++i) {
        out["m" + std::to_string(i + 1)] = L.lines[order[i]].slope;
        out["b" + std::to_string(i + 1)] = L.lines[order[i]].intercept;
    }
    return out;
}

}  // namespace segrec
