#include "segrec/lemmas.hpp"

namespace segrec {

namespace {

std::set<VertexLabel> as_set(const std::vector<VertexLabel>& a, const std::vector<VertexLabel>& b = {}) {
    std::set<VertexLabel> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return s;
}

void check_cycle(CheckReport& rep, const std::string& name, const ReductionArtifact& art,
                 const std::vector<VertexLabel>& cycle, const std::set<VertexLabel>& attached,
                 const ObjectMap& objects) {
    try {
        if (!check_order_lemma(art.graph, cycle, attached, objects))
            rep.fail(name + ": geometric connector order differs from the graph order");
        if (!trace_partition_check(core_trace(objects, cycle), static_cast<int>(cycle.size())))
            rep.fail(name + ": core trace has no block partition");
    } catch (const std::exception& e) {
        rep.fail(name + ": " + e.what());
    }
}

}  // namespace

CheckReport check_lemmas(const ReductionArtifact& art, const ObjectMap& objects) {
    CheckReport rep;
    const auto tubes = as_set(art.roles.important, art.roles.probes);
    if (art.kind == ReductionKind::Unit) {
        check_cycle(rep, "cycle", art, art.cycle_order, as_set(art.roles.connectors_left, art.roles.connectors_right),
                    objects);
    } else {
        check_cycle(rep, "frame", art, art.cycle_order, outer_frame_connectors(art), objects);
        for (int i = 2; i <= 2 * art.k + 1; ++i) {
            auto cyc = region_cycle(art, i);
            check_cycle(rep, "region " + std::to_string(i), art, cyc, attached_non_frame(art, cyc), objects);
        }
    }
    try {
        auto inside = check_cell_containment(objects, art.cycle_order, tubes);
        for (auto& v : inside.violations) rep.fail("containment: " + v);
    } catch (const std::exception& e) {
        rep.fail(std::string("containment: ") + e.what());
    }
    return rep;
}

}  // namespace segrec
