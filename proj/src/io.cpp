#include "segrec/io.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace segrec {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(1) + "\n"; }

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), "byte " + std::to_string(e.byte));
    }
}

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'", path);
    return j.at(key);
}

const json& array(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError("expected an array", path);
    return j;
}

std::string string(const json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError("expected a string", path);
    return j.get<std::string>();
}

int integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError("expected an integer", path);
    return j.get<int>();
}

Rational rational(const json& j, const std::string& path) {
    try {
        return Rational::parse(string(j, path));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), path);
    }
}

VertexLabel label(const json& j, const std::string& path) {
    try {
        return VertexLabel::parse(string(j, path));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what(), path);
    }
}

json point_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

Point point(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) throw ParseError("expected [x, y]", path);
    return {rational(j[0], path + "/0"), rational(j[1], path + "/1")};
}

json labels_json(const std::vector<VertexLabel>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(v.str());
    return out;
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

json wiring_json(const WiringDiagram& w) { return {{"n", w.n}, {"swaps", w.swaps}}; }

WiringDiagram wiring_of(const json& j, const std::string& path) {
    WiringDiagram w;
    w.n = integer(field(j, "n", path), path + "/n");
    const json& s = array(field(j, "swaps", path), path + "/swaps");
    for (std::size_t i = 0; i < s.size(); ++i) w.swaps.push_back(integer(s[i], at(path + "/swaps", i)));
    return w;
}

json graph_json(const LabeledGraph& g) {
    json vs = json::array(), es = json::array();
    for (const auto& v : g.vertices()) vs.push_back({{"label", v.str()}});
    for (const auto& [u, v] : g.edges()) es.push_back(json::array({u.str(), v.str()}));
    return {{"vertices", vs}, {"edges", es}};
}

LabeledGraph graph_of(const json& j) {
    LabeledGraph g;
    const json& vs = array(field(j, "vertices", ""), "/vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) g.add_vertex(label(field(vs[i], "label", at("/vertices", i)), at("/vertices", i) + "/label"));
    const json& es = array(field(j, "edges", ""), "/edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string p = at("/edges", i);
        if (!es[i].is_array() || es[i].size() != 2) throw ParseError("expected [u, v]", p);
        VertexLabel u = label(es[i][0], p + "/0"), v = label(es[i][1], p + "/1");
        if (!g.has_vertex(u) || !g.has_vertex(v)) throw ParseError("edge endpoint is not a listed vertex", p);
        if (u == v) throw ParseError("loop edge", p);
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace

std::string wiring_to_json(const WiringDiagram& w) { return dump(wiring_json(w)); }

WiringDiagram wiring_from_json(const std::string& text) { return wiring_of(parse_text(text), ""); }

std::string lines_to_json(const LineArrangement& L) {
    json ls = json::array();
    for (const auto& l : L.lines) ls.push_back({{"slope", l.slope.str()}, {"intercept", l.intercept.str()}});
    return dump({{"lines", ls}});
}

LineArrangement lines_from_json(const std::string& text) {
    json j = parse_text(text);
    LineArrangement L;
    const json& ls = array(field(j, "lines", ""), "/lines");
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const std::string p = at("/lines", i);
        L.lines.push_back({rational(field(ls[i], "slope", p), p + "/slope"),
                           rational(field(ls[i], "intercept", p), p + "/intercept")});
    }
    return L;
}

std::string graph_to_json(const LabeledGraph& g) { return dump(graph_json(g)); }

LabeledGraph graph_from_json(const std::string& text) { return graph_of(parse_text(text)); }

std::string artifact_to_json(const ReductionArtifact& art) {
    json j = graph_json(art.graph);
    j["kind"] = art.kind == ReductionKind::Unit ? "unit" : "polyline";
    j["n"] = art.n;
    j["k"] = art.k;
    j["wiring"] = wiring_json(art.wiring);
    json roles = json::object();
    auto tag = [&](const std::vector<VertexLabel>& vs, const char* role) {
        for (const auto& v : vs) roles[v.str()] = role;
    };
    tag(art.roles.important, "important");
    tag(art.roles.probes, "probe");
    tag(art.roles.connectors_left, "connector_left");
    tag(art.roles.connectors_right, "connector_right");
    tag(art.roles.cycle, "cycle");
    tag(art.roles.frame, "frame");
    j["roles"] = roles;
    j["cycleOrder"] = labels_json(art.cycle_order);
    j["leftBoundaryOrder"] = labels_json(art.left_boundary_order);
    j["rightBoundaryOrder"] = labels_json(art.right_boundary_order);
    return dump(j);
}

std::optional<ReductionArtifact> artifact_from_json(const std::string& text) {
    json j = parse_text(text);
    LabeledGraph g = graph_of(j);
    if (!j.contains("wiring")) return std::nullopt;
    const std::string kind = string(field(j, "kind", ""), "/kind");
    WiringDiagram w = wiring_of(j["wiring"], "/wiring");
    ReductionArtifact art;
    try {
        if (kind == "unit") art = build_unit_reduction(w);
        else if (kind == "polyline") art = build_polyline_reduction(w, integer(field(j, "k", ""), "/k"));
        else throw ParseError("unknown reduction kind '" + kind + "'", "/kind");
    } catch (const InvalidWiring& e) {
        throw ParseError(e.what(), "/wiring");
    } catch (const InvalidK& e) {
        throw ParseError(e.what(), "/k");
    }
    if (!(art.graph == g)) throw ParseError("stored graph differs from the reduction of the stored wiring", "/edges");
    return art;
}

std::string realization_to_json(const Realization& r) {
    json objs = json::array();
    json j;
    if (r.kind == RealizationKind::UnitSegments) {
        j["kind"] = "unit_segments";
        for (const auto& [v, s] : r.objects) {
            const auto& u = std::get<UnitSegment>(s);
            objs.push_back({{"vertex", v.str()}, {"anchor", point_json(u.anchor())}, {"direction", point_json(u.direction())}});
        }
    } else {
        j["kind"] = "polylines";
        j["k"] = r.k;
        for (const auto& [v, s] : r.objects) {
            json pts = json::array();
            for (const auto& p : std::get<Polyline>(s).points()) pts.push_back(point_json(p));
            objs.push_back({{"vertex", v.str()}, {"points", pts}});
        }
    }
    j["objects"] = objs;
    return dump(j);
}

Realization realization_from_json(const std::string& text) {
    json j = parse_text(text);
    const std::string kind = string(field(j, "kind", ""), "/kind");
    Realization r;
    if (kind == "unit_segments") r.kind = RealizationKind::UnitSegments;
    else if (kind == "polylines") r.kind = RealizationKind::Polylines, r.k = integer(field(j, "k", ""), "/k");
    else throw ParseError("unknown realization kind '" + kind + "'", "/kind");
    const json& objs = array(field(j, "objects", ""), "/objects");
    for (std::size_t i = 0; i < objs.size(); ++i) {
        const std::string p = at("/objects", i);
        VertexLabel v = label(field(objs[i], "vertex", p), p + "/vertex");
        if (r.objects.count(v)) throw ParseError("vertex listed twice", p + "/vertex");
        try {
            if (r.kind == RealizationKind::UnitSegments) {
                r.objects.emplace(v, UnitSegment(point(field(objs[i], "anchor", p), p + "/anchor"),
                                                 point(field(objs[i], "direction", p), p + "/direction")));
            } else {
                const json& pts = array(field(objs[i], "points", p), p + "/points");
                std::vector<Point> ps;
                for (std::size_t t = 0; t < pts.size(); ++t) ps.push_back(point(pts[t], at(p + "/points", t)));
                if (static_cast<int>(ps.size()) != r.k + 2)
                    throw ParseError("expected " + std::to_string(r.k + 2) + " points", p + "/points");
                r.objects.emplace(v, Polyline(std::move(ps)));
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), p);
        }
    }
    return r;
}

namespace {

const char* colour(Kind k) {
    switch (k) {
        case Kind::Pseudoline: return "#c0392b";
        case Kind::Twin: return "#e67e22";
        case Kind::Probe: return "#2e86c1";
        case Kind::ConnectorLeft:
        case Kind::ConnectorRight: return "#229954";
        default: return "#222222";
    }
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

std::string render_svg(const Realization& r, double scale) {
    double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    bool first = true;
    std::vector<std::pair<VertexLabel, std::vector<std::pair<double, double>>>> paths;
    for (const auto& [v, s] : r.objects) {
        std::vector<std::pair<double, double>> pts;
        if (const auto* u = std::get_if<UnitSegment>(&s)) {
            for (const auto& p : {u->anchor(), u->tip()}) pts.emplace_back(p.x.to_double(), -p.y.to_double());
        } else {
            for (const auto& p : std::get<Polyline>(s).points()) pts.emplace_back(p.x.to_double(), -p.y.to_double());
        }
        for (const auto& [x, y] : pts) {
            if (first) x0 = x1 = x, y0 = y1 = y, first = false;
            x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
        }
        paths.emplace_back(v, std::move(pts));
    }
    double w = x1 - x0, h = y1 - y0;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    const double px = 0.05 * w, py = 0.05 * h;
    const double vw = w + 2 * px, vh = h + 2 * py;
    const double stroke = std::max(vw, vh) / 800;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(scale) << "\" height=\""
        << num(scale * vh / vw) << "\" viewBox=\"" << num(x0 - px) << ' ' << num(y0 - py) << ' ' << num(vw) << ' '
        << num(vh) << "\">\n";
    for (const auto& [v, pts] : paths) {
        out << "<polyline fill=\"none\" stroke=\"" << colour(v.kind) << "\" stroke-width=\"" << num(stroke)
            << "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << num(pts[i].first) << ',' << num(pts[i].second);
        out << "\"><title>" << v.str() << "</title></polyline>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace segrec
