#pragma once

#include "segrec/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace segrec {

/// Simple pseudoline arrangement as a sequence of adjacent transpositions.
/// Pseudoline i (1-based) is the i-th curve from the top at the left end;
/// swap position p exchanges the curves currently at positions p and p+1.
struct WiringDiagram {
    int n = 0;
    std::vector<int> swaps;

    friend bool operator==(const WiringDiagram&, const WiringDiagram&) = default;
};

struct Line {
    Rational slope;
    Rational intercept;

    [[nodiscard]] Rational at(const Rational& x) const { return slope * x + intercept; }
    friend bool operator==(const Line&, const Line&) = default;
};

struct LineArrangement {
    std::vector<Line> lines;

    friend bool operator==(const LineArrangement&, const LineArrangement&) = default;
};

class InvalidWiring : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateArrangement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownCatalogEntry : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Per pseudoline (index 0 = pseudoline 1), the pseudolines it crosses from left to right.
using CrossingOrders = std::vector<std::vector<int>>;

/// Empty result means valid.
std::vector<std::string> validate_wiring(const WiringDiagram& w);

/// Throws InvalidWiring when validate_wiring reports anything.
void require_valid(const WiringDiagram& w);

CrossingOrders crossing_orders(const WiringDiagram& w);

/// Line indices sorted top-to-bottom far to the left (ascending slope).
/// Pseudoline i of wiring_from_lines(L) is L.lines[left_order(L)[i-1]].
std::vector<int> left_order(const LineArrangement& L);

/// Throws DegenerateArrangement on repeated slopes or concurrent triples.
void require_generic(const LineArrangement& L);

/// x-coordinate of the crossing of two lines with distinct slopes.
Rational crossing_x(const Line& a, const Line& b);

WiringDiagram wiring_from_lines(const LineArrangement& L);

/// Crossing orders read directly from exact crossing x-values, labeled by left_order.
CrossingOrders crossing_orders_of_lines(const LineArrangement& L);

/// Dihedral images of a diagram: identity, top-bottom mirror, left-right
/// mirror, and both, each relabeled to the left-start convention.
std::vector<WiringDiagram> dihedral_images(const WiringDiagram& w);

bool equivalent(const WiringDiagram& w1, const WiringDiagram& w2, bool allow_reflection);

/// Affine squeeze: slopes into [-a, a], all crossings into (-a, a)^2.
LineArrangement squeeze(const LineArrangement& L, const Rational& a);

/// True when L already satisfies the squeeze bounds for a.
bool is_squeezed(const LineArrangement& L, const Rational& a);

/// "generic2" .. "generic8": lines y = i*x + i^2.
LineArrangement catalog(const std::string& name);

}  // namespace segrec
