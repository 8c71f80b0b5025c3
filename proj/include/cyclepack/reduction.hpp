#pragma once

#include <memory>

#include "cyclepack/laminar.hpp"
#include "cyclepack/lp.hpp"

namespace cyclepack {

// Edge-disjoint to vertex-disjoint reduction for a laminar family: nodes of
// the target graph are the edges of the source, one target edge per length-2
// subpath of a family cycle. f maps each cycle to its image; images share a
// node exactly when the originals share an edge. The target splits into
// connected components, each a sphere embedding of its own.
struct ReductionComponent {
    std::shared_ptr<EmbeddedGraph> graph;
    std::vector<Cycle> cycles;      // images, local edge ids
    std::vector<int> node_to_edge;  // target vertex -> source edge id
    std::vector<int> cycle_to_fam;  // target cycle -> source family index
};

struct ReductionMap {
    std::vector<ReductionComponent> components;
    int source_edges = 0;        // |V(G')| including isolated nodes
    long long image_edges = 0;   // |E(G')| = sum of cycle lengths
    std::vector<int> isolated;   // source edges on no family cycle
};

ReductionMap edge_to_vertex(const LaminarFamily& fam);

// Pull a packing of image cycles back to the source family.
std::vector<int> lift_packing(const ReductionMap& map,
                              const std::vector<std::pair<int, int>>& picked);
// picked = (component index, local cycle index)

// Push an edge-mode solution through f (component-wise local solutions).
std::vector<FractionalSolution> push_solution(const ReductionMap& map,
                                              const FractionalSolution& x);

} // namespace cyclepack
