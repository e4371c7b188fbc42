#pragma once

#include "segrec/realizer.hpp"

#include <map>
#include <optional>
#include <vector>

namespace segrec::detail {

/// Straight content of the enhanced arrangement: one supporting line per
/// pseudoline, twin and probe, plus where each probe stops on the right.
struct Canvas {
    std::map<VertexLabel, Line> lines;
    std::map<VertexLabel, Rational> probe_right_end;
    Rational x_min;  // leftmost crossing between curves of different pairs
    Rational x_max;  // rightmost such crossing
};

/// Vertical offset of a host curve from its pseudoline.
Rational tube_offset(const VertexLabel& v, const Rational& rho, bool twins);

/// Lays out the tube of every pseudoline in `base` (index i-1 = pseudoline i).
/// Returns nothing when the crossing clusters along some probe are not
/// separated at this rho.
std::optional<Canvas> build_canvas(const std::vector<Line>& base, const CrossingOrders& orders,
                                   const Rational& rho, const Rational& eta, bool twins);

/// rho capped so offset crossings stay near their sources: a fraction of the
/// smallest gap between crossings along one line times the smallest slope gap.
Rational starting_rho(const std::vector<Line>& base, const Rational& rho, int n);

/// y-values of the listed hosts at x; empty unless strictly decreasing.
std::vector<Rational> heights_at(const Canvas& c, const std::vector<VertexLabel>& hosts, const Rational& x);

}  // namespace segrec::detail
