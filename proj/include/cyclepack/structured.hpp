#pragma once

#include "cyclepack/laminar.hpp"
#include "cyclepack/lp.hpp"

namespace cyclepack {

// True iff the cycle (index within `component`) is two-sided there and
// homotopic to a one-sided cycle of the component. One-sided cycles are
// never redundant.
bool is_redundant(const LaminarFamily& component, int cycle);

// Shifts weight off redundant cycles until every connected component of the
// support is redundancy-free. Total value and feasibility are preserved
// exactly; vertex mode only (edge instances are reduced first).
FractionalSolution make_structured(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                                   const FractionalSolution& x);

} // namespace cyclepack
