#pragma once

#include "segrec/graph.hpp"
#include "segrec/realizer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace segrec {

class NotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unit segment center +- (cos angle, sin angle) / 2.
struct Pose {
    double cx = 0;
    double cy = 0;
    double angle = 0;
    friend bool operator==(const Pose&, const Pose&) = default;
};

using Placement = std::map<VertexLabel, Pose>;

struct SearchConfig {
    int restarts = 100;
    int iterations = 5000;
    double margin = 1e-2;  // clearance wanted between non-adjacent segments
    double step = 0.1;     // first trial step of each restart
    double shrink = 0.5;   // backtracking factor
    double grow = 1.5;     // step growth after an accepted move
    std::uint64_t seed = 0;
    /// Used instead of a random start for restart 0.
    std::optional<Placement> initial;

    void validate() const;
};

struct PenaltyValue {
    double value = 0;
    /// Three entries (d/dcx, d/dcy, d/dangle) per vertex, in vertex order.
    std::vector<double> gradient;
};

/// Sum of dist^2 over edges and max(0, margin - dist)^2 over non-edges,
/// with dist the Euclidean distance between the closed segments.
PenaltyValue penalty(const LabeledGraph& g, const Placement& p, double margin);

struct Certificate {
    bool certified = false;
    Realization realization;  // snapped objects, also on rejection
    GraphDiff diff;           // relative to g
};

/// Snaps every pose to an exact unit segment and compares intersection graphs exactly.
Certificate certify(const LabeledGraph& g, const Placement& p);

struct RestartLog {
    int restart = 0;
    int iterations = 0;
    double penalty = 0;
    bool certified = false;
    friend bool operator==(const RestartLog&, const RestartLog&) = default;
};

struct SearchResult {
    Placement placement;
    Realization realization;
    int restart = 0;
    std::vector<RestartLog> transcript;
};

/// Restart i draws its start from hash(seed, i); the lowest certified restart wins.
/// Throws NotFound with the transcript's size in the message when the budget runs out.
SearchResult search_unit(const LabeledGraph& g, const SearchConfig& cfg);

/// Seed of restart i.
std::uint64_t restart_seed(std::uint64_t seed, int restart);

}  // namespace segrec
