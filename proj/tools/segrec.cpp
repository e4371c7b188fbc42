// segrec command-line front end.
//
// Exit codes: 0 success, 1 verification or check failure, 2 usage or input
// error, 3 realizer or search gave up.

#include "segrec/encoder.hpp"
#include "segrec/io.hpp"
#include "segrec/lemmas.hpp"
#include "segrec/search.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace segrec;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kGaveUp = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int log_level() {
    static const int level = [] {
        const char* env = std::getenv("SEGREC_LOG");
        std::string v = env ? env : "off";
        return v == "debug" ? 2 : v == "info" ? 1 : 0;
    }();
    return level;
}

void info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

void debug(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "[debug] " << msg << "\n";
}

std::string read_input(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot read " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
    info("wrote " + path);
}

// Inputs must exist (or be "-"); outputs need an existing parent directory.
void check_paths(const std::vector<std::string>& inputs, const std::vector<std::string>& outputs) {
    for (const auto& p : inputs)
        if (p != "-" && !std::filesystem::is_regular_file(p)) throw UsageError("input file not found: " + p);
    for (const auto& p : outputs) {
        if (p.empty() || p == "-") continue;
        auto dir = std::filesystem::path(p).parent_path();
        if (!dir.empty() && !std::filesystem::is_directory(dir)) throw UsageError("output directory not found: " + dir.string());
    }
}

Rational rational_flag(const std::string& text, const char* name) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("--") + name + " expects num/den, got '" + text + "'");
    }
}

LabeledGraph load_graph(const std::string& path) { return graph_from_json(read_input(path)); }

ReductionArtifact load_artifact(const std::string& path) {
    auto art = artifact_from_json(read_input(path));
    if (!art) throw UsageError(path + " carries no reduction metadata (produce it with 'reduce')");
    return *art;
}

// Exact comparison, the one place that decides success.
void verify_or_fail(const LabeledGraph& g, const Realization& r) {
    GraphDiff diff;
    if (!graphs_equal(g, intersection_graph(r.objects), &diff)) throw CheckFailed("realization differs from graph:\n" + diff.str());
    info("verified " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges");
}

struct Options {
    std::string wiring, wiring2, lines, graph, realization, out, lines_out, format, name;
    std::string a = "1/20", rho = "1/1000", eta = "1/200";
    int k = 1, max_refine = 12, restarts = 100, iters = 5000;
    std::uint64_t seed = 0;
    double margin = 1e-2, scale = 400;
    bool reflect = false;
};

RealizerParams realizer_params(const Options& o) {
    RealizerParams p;
    p.a = rational_flag(o.a, "a");
    p.rho = rational_flag(o.rho, "rho");
    p.eta = rational_flag(o.eta, "eta");
    p.maxRefine = o.max_refine;
    return p;
}

std::string emit(const PolySystem& sys, const Options& o) {
    std::string fmt = o.format;
    if (fmt.empty()) fmt = std::filesystem::path(o.out).extension() == ".json" ? "json" : "smtlib";
    info("encoded " + std::to_string(sys.variables.size()) + " variables, " + std::to_string(sys.constraints.size()) +
         " constraints");
    return fmt == "json" ? emit_json(sys) : emit_smtlib(sys);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduction graphs, exact realizations and encodings for segment intersection graphs"};
    app.require_subcommand(1);
    Options o;
    std::function<void()> action;

    auto* arr = app.add_subcommand("arr", "Pseudoline arrangements")->require_subcommand(1);
    {
        auto* c = arr->add_subcommand("validate", "Check a wiring diagram");
        c->add_option("--wiring", o.wiring, "wiring JSON")->required();
        c->callback([&] {
            action = [&] {
                check_paths({o.wiring}, {});
                auto errs = validate_wiring(wiring_from_json(read_input(o.wiring)));
                if (!errs.empty()) {
                    std::string all;
                    for (const auto& e : errs) all += e + "\n";
                    throw CheckFailed(all);
                }
                std::cout << "valid\n";
            };
        });
        c = arr->add_subcommand("from-lines", "Wiring diagram of a line arrangement");
        c->add_option("--lines", o.lines, "lines JSON")->required();
        c->add_option("-o,--out", o.out, "wiring JSON (default stdout)");
        c->callback([&] {
            action = [&] {
                check_paths({o.lines}, {o.out});
                write_output(o.out, wiring_to_json(wiring_from_lines(lines_from_json(read_input(o.lines)))));
            };
        });
        c = arr->add_subcommand("catalog", "Stretched catalog arrangement");
        c->add_option("name", o.name, "generic2 .. generic8")->required();
        c->add_option("-o,--out", o.out, "wiring JSON (default stdout)");
        c->add_option("--lines-out", o.lines_out, "also write the lines JSON");
        c->callback([&] {
            action = [&] {
                check_paths({}, {o.out, o.lines_out});
                auto L = catalog(o.name);
                if (!o.lines_out.empty()) write_output(o.lines_out, lines_to_json(L));
                write_output(o.out, wiring_to_json(wiring_from_lines(L)));
            };
        });
        c = arr->add_subcommand("squeeze", "Affine squeeze into the a-box");
        c->add_option("--lines", o.lines, "lines JSON")->required();
        c->add_option("--a", o.a, "box half-width (num/den)");
        c->add_option("-o,--out", o.out, "lines JSON (default stdout)");
        c->callback([&] {
            action = [&] {
                check_paths({o.lines}, {o.out});
                write_output(o.out, lines_to_json(squeeze(lines_from_json(read_input(o.lines)), rational_flag(o.a, "a"))));
            };
        });
        c = arr->add_subcommand("equiv", "Combinatorial equivalence of two wiring diagrams");
        c->add_option("first", o.wiring, "wiring JSON")->required();
        c->add_option("second", o.wiring2, "wiring JSON")->required();
        c->add_flag("--reflect", o.reflect, "allow mirror images");
        c->callback([&] {
            action = [&] {
                check_paths({o.wiring, o.wiring2}, {});
                bool eq = equivalent(wiring_from_json(read_input(o.wiring)), wiring_from_json(read_input(o.wiring2)),
                                     o.reflect);
                std::cout << (eq ? "equivalent\n" : "not equivalent\n");
                if (!eq) throw CheckFailed("arrangements differ");
            };
        });
    }

    auto* reduce = app.add_subcommand("reduce", "Build a reduction graph")->require_subcommand(1);
    for (const char* kind : {"unit", "polyline"}) {
        auto* c = reduce->add_subcommand(kind, std::string(kind) + " reduction");
        c->add_option("--wiring", o.wiring, "wiring JSON, - for stdin")->required();
        c->add_option("-o,--out", o.out, "graph JSON (default stdout)");
        const bool unit = std::string(kind) == "unit";
        if (!unit) c->add_option("-k", o.k, "bends per polyline")->required();
        c->callback([&, unit] {
            action = [&, unit] {
                check_paths({o.wiring}, {o.out});
                auto w = wiring_from_json(read_input(o.wiring));
                auto art = unit ? build_unit_reduction(w) : build_polyline_reduction(w, o.k);
                info("reduction graph: " + std::to_string(art.graph.vertex_count()) + " vertices");
                write_output(o.out, artifact_to_json(art));
            };
        });
    }

    auto* realize = app.add_subcommand("realize", "Exact realization from a stretched arrangement")->require_subcommand(1);
    for (const char* kind : {"unit", "polyline"}) {
        auto* c = realize->add_subcommand(kind, std::string(kind) + " realization");
        c->add_option("--wiring", o.wiring, "wiring JSON")->required();
        c->add_option("--lines", o.lines, "lines JSON")->required();
        c->add_option("-o,--out", o.out, "realization JSON (default stdout)");
        c->add_option("--a", o.a, "squeeze box (num/den)");
        c->add_option("--rho", o.rho, "initial tube spacing (num/den)");
        c->add_option("--eta", o.eta, "probe overshoot (num/den)");
        c->add_option("--max-refine", o.max_refine, "refinement rounds");
        const bool unit = std::string(kind) == "unit";
        if (!unit) c->add_option("-k", o.k, "bends per polyline")->required();
        c->callback([&, unit] {
            action = [&, unit] {
                check_paths({o.wiring, o.lines}, {o.out});
                auto w = wiring_from_json(read_input(o.wiring));
                auto L = lines_from_json(read_input(o.lines));
                auto params = realizer_params(o);
                auto art = unit ? build_unit_reduction(w) : build_polyline_reduction(w, o.k);
                auto r = unit ? realize_unit(L, art, params) : realize_polyline(L, art, o.k, params);
                verify_or_fail(art.graph, r);
                write_output(o.out, realization_to_json(r));
            };
        });
    }

    {
        auto* c = app.add_subcommand("verify", "Exact intersection graph equality");
        c->add_option("--graph", o.graph, "graph JSON")->required();
        c->add_option("--realization", o.realization, "realization JSON")->required();
        c->callback([&] {
            action = [&] {
                check_paths({o.graph, o.realization}, {});
                verify_or_fail(load_graph(o.graph), realization_from_json(read_input(o.realization)));
                std::cout << "ok\n";
            };
        });
    }

    {
        auto* check = app.add_subcommand("check", "Structural checks")->require_subcommand(1);
        auto* c = check->add_subcommand("lemmas", "Connector order, trace partition and cell containment");
        c->add_option("--graph", o.graph, "reduction graph JSON")->required();
        c->add_option("--realization", o.realization, "realization JSON")->required();
        c->callback([&] {
            action = [&] {
                check_paths({o.graph, o.realization}, {});
                auto art = load_artifact(o.graph);
                auto r = realization_from_json(read_input(o.realization));
                verify_or_fail(art.graph, r);
                auto rep = check_lemmas(art, r.objects);
                if (!rep.ok) {
                    std::string all;
                    for (const auto& v : rep.violations) all += v + "\n";
                    throw CheckFailed(all);
                }
                std::cout << "ok\n";
            };
        });
    }

    auto* enc = app.add_subcommand("encode", "Existential polynomial systems")->require_subcommand(1);
    for (const char* kind : {"unit", "polyline", "stretch"}) {
        auto* c = enc->add_subcommand(kind, std::string(kind) + " encoding");
        const std::string which = kind;
        if (which == "stretch") c->add_option("--wiring", o.wiring, "wiring JSON")->required();
        else c->add_option("--graph", o.graph, "graph JSON")->required();
        if (which == "polyline") c->add_option("-k", o.k, "bends per polyline")->required();
        c->add_option("-o,--out", o.out, "output file (default stdout)");
        c->add_option("--format", o.format, "smtlib or json (default from extension)")
            ->check(CLI::IsMember({"smtlib", "json"}));
        c->callback([&, which] {
            action = [&, which] {
                check_paths({which == "stretch" ? o.wiring : o.graph}, {o.out});
                PolySystem sys = which == "stretch"    ? encode_stretchability(wiring_from_json(read_input(o.wiring)))
                                 : which == "unit"     ? encode_unit(load_graph(o.graph))
                                                       : encode_polyline(load_graph(o.graph), o.k);
                write_output(o.out, emit(sys, o));
            };
        });
    }

    {
        auto* search = app.add_subcommand("search", "Numerical search with exact certification")->require_subcommand(1);
        auto* c = search->add_subcommand("unit", "unit segment search");
        c->add_option("--graph", o.graph, "graph JSON")->required();
        c->add_option("--seed", o.seed, "random seed");
        c->add_option("--restarts", o.restarts, "restart budget");
        c->add_option("--iters", o.iters, "iterations per restart");
        c->add_option("--margin", o.margin, "non-edge clearance");
        c->add_option("-o,--out", o.out, "realization JSON (default stdout)");
        c->callback([&] {
            action = [&] {
                check_paths({o.graph}, {o.out});
                SearchConfig cfg;
                cfg.seed = o.seed;
                cfg.restarts = o.restarts;
                cfg.iterations = o.iters;
                cfg.margin = o.margin;
                auto g = load_graph(o.graph);
                auto res = search_unit(g, cfg);
                for (const auto& l : res.transcript)
                    debug("restart " + std::to_string(l.restart) + ": " + std::to_string(l.iterations) +
                          " iterations, penalty " + std::to_string(l.penalty) + (l.certified ? ", certified" : ""));
                info("certified at restart " + std::to_string(res.restart));
                verify_or_fail(g, res.realization);
                write_output(o.out, realization_to_json(res.realization));
            };
        });
    }

    {
        auto* c = app.add_subcommand("render", "SVG drawing of a realization");
        c->add_option("--realization", o.realization, "realization JSON")->required();
        c->add_option("-o,--out", o.out, "SVG file (default stdout)");
        c->add_option("--scale", o.scale, "width in pixels");
        c->callback([&] {
            action = [&] {
                check_paths({o.realization}, {o.out});
                write_output(o.out, render_svg(realization_from_json(read_input(o.realization)), o.scale));
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        action();
        return kOk;
    } catch (const CheckFailed& e) {
        std::cerr << e.what();
        return kCheckFailed;
    } catch (const RefinementExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGaveUp;
    } catch (const NotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGaveUp;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
