#pragma once

#include "segrec/reduction.hpp"
#include "segrec/structure.hpp"

namespace segrec {

/// Structural checks on a realization of a reduction graph: connector order
/// along every frame cycle, the trace partition of each such cycle, and
/// containment of the tube curves inside the enclosing cycle.
CheckReport check_lemmas(const ReductionArtifact& art, const ObjectMap& objects);

}  // namespace segrec
