#pragma once

#include "segrec/arrangement.hpp"
#include "segrec/graph.hpp"
#include "segrec/reduction.hpp"

#include <stdexcept>
#include <string>

namespace segrec {

class WiringMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RefinementExhausted : public std::runtime_error {
public:
    RefinementExhausted(const std::string& msg, GraphDiff last) : std::runtime_error(msg), diff(std::move(last)) {}
    GraphDiff diff;
};

enum class RealizationKind { UnitSegments, Polylines };

struct Realization {
    RealizationKind kind = RealizationKind::UnitSegments;
    int k = 0;
    ObjectMap objects;
};

struct RealizerParams {
    Rational a{1, 20};     // squeeze bound
    Rational rho{1, 1000};  // spacing between parallel curves of one tube
    Rational eta{1, 200};   // clearance past the last crossing cluster
    int maxRefine = 12;

    /// Throws std::invalid_argument unless all positive, rho*(n-1) < a/4 and maxRefine >= 1.
    void validate(int n) const;
};

/// Unit-segment drawing of a unit reduction whose intersection graph equals art.graph.
Realization realize_unit(const LineArrangement& L, const ReductionArtifact& art,
                         const RealizerParams& params = {});

/// k-bend polyline drawing of a polyline reduction whose intersection graph equals art.graph.
Realization realize_polyline(const LineArrangement& L, const ReductionArtifact& art, int k,
                             const RealizerParams& params = {});

/// Orders the lines of L as pseudolines 1..n (top to bottom at the left) and
/// throws WiringMismatch unless their crossing orders match w.
LineArrangement labeled_lines(const LineArrangement& L, const WiringDiagram& w);

}  // namespace segrec
