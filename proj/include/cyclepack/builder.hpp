#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cyclepack/laminar.hpp"

namespace cyclepack {

// Incrementally grows an embedded multigraph together with a cycle family
// that is laminar by construction. Every new cycle is drawn strictly inside
// one face of the current graph and may touch the face boundary at chosen
// corners, so it can never cross an earlier cycle.
class FamilyBuilder {
  public:
    // Start with a single ring cycle of ring_len >= 2 vertices.
    explicit FamilyBuilder(int ring_len);

    const EmbeddedGraph& graph();

    struct Corner {
        int walk_pos;
        int vertex;
        int edge_in;  // arriving edge of the corner
        int edge_out; // leaving edge (successor of edge_in at vertex)
    };
    std::vector<Corner> corners(int face);

    // New cycle through the given corners of `face` (walk positions in
    // strictly increasing order, distinct vertices), with fresh_counts[i]
    // fresh vertices between anchor i and anchor i+1 (cyclic). Returns the
    // family index of the cycle.
    int insert_anchored(int face, const std::vector<int>& corner_positions,
                        const std::vector<int>& fresh_counts);

    // Vertex-disjoint cycle of m >= 2 fresh vertices inside `face`, tethered
    // to the corner at corner_pos by a connector edge that belongs to no
    // family cycle (keeps the host graph connected).
    int insert_floating(int face, int corner_pos, int m);

    int num_cycles() const { return static_cast<int>(cycles_.size()); }
    int num_vertices() const { return nverts_; }
    const std::vector<std::vector<int>>& family_edge_lists() const { return cycles_; }
    const std::vector<std::pair<int, int>>& edge_list() const { return edges_; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }

    // Finished graph plus the family as Cycle objects.
    std::pair<std::shared_ptr<EmbeddedGraph>, std::vector<Cycle>> finish();

  private:
    int add_vertex() { rot_.emplace_back(); return nverts_++; }
    int add_edge(int u, int v) {
        edges_.emplace_back(u, v);
        return static_cast<int>(edges_.size()) - 1;
    }
    void splice_after(int v, int edge_in, const std::vector<int>& new_edges);
    void invalidate() { cached_.reset(); }

    int nverts_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> rot_;
    std::vector<std::vector<int>> cycles_;
    std::shared_ptr<EmbeddedGraph> cached_;
};

} // namespace cyclepack
