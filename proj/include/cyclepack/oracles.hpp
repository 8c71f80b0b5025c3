#pragma once

#include "cyclepack/lp.hpp"

namespace cyclepack {

struct PackingOracle {
    int nu = 0;
    std::vector<int> witness; // cycle indices
};

struct TransversalOracle {
    int tau = 0;
    std::vector<int> witness; // vertex or edge ids, by mode
};

// Exact maximum number of pairwise disjoint cycles, by branch and bound over
// the conflict relation. Budget: at most 20 cycles.
PackingOracle brute_max_packing(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                                Mode mode);

// Exact minimum hitting set over the cycles' vertices or edges.
TransversalOracle brute_min_transversal(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                                        Mode mode);

} // namespace cyclepack
