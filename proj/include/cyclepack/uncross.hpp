#pragma once

#include "cyclepack/laminar.hpp"
#include "cyclepack/lp.hpp"

namespace cyclepack {

// Best-effort uncrossing over an explicitly enumerated family. Each accepted
// step rewrites a crossing support pair by the exchange move (two replacement
// cycles from the family), preserves the total value and feasibility, and
// strictly decreases the number of crossing support pairs. Gives up with
// UncrossingStalled after 10*|family|^2 steps or when no valid replacement
// exists in the family.
FractionalSolution uncross_support(const EmbeddedGraph& g, const std::vector<Cycle>& family,
                                   const FractionalSolution& x);

} // namespace cyclepack
