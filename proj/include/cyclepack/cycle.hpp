#pragma once

#include <vector>

#include "cyclepack/embedded_graph.hpp"

namespace cyclepack {

// Simple cycle given as a cyclic edge sequence. Vertices are derived and must
// be pairwise distinct; length >= 2 (a pair of parallel edges is a cycle).
class Cycle {
  public:
    Cycle(const EmbeddedGraph& g, std::vector<int> edge_seq);

    const std::vector<int>& edges() const { return edges_; }       // traversal order
    const std::vector<int>& vertices() const { return vertices_; } // vertices_[i] = tail of edges_[i]
    const std::vector<int>& sorted_edges() const { return sorted_edges_; } // canonical id
    int length() const { return static_cast<int>(edges_.size()); }

    bool contains_vertex(int v) const;
    bool contains_edge(int e) const;

    // Position of v in the vertex sequence, or -1.
    int vertex_position(int v) const;

    // The two edges incident to v along the cycle.
    std::pair<int, int> edges_at(int v) const;

    // Edge sets of the two v-v' arcs (positions by vertex_position).
    std::pair<std::vector<int>, std::vector<int>> arcs_between(int v, int w) const;

    bool operator==(const Cycle& o) const { return sorted_edges_ == o.sorted_edges_; }

  private:
    std::vector<int> edges_;
    std::vector<int> vertices_;
    std::vector<int> sorted_edges_;
};

} // namespace cyclepack
