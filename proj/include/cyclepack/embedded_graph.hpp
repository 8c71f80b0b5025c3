#pragma once

#include <utility>
#include <vector>

#include "cyclepack/common.hpp"

namespace cyclepack {

// A dart is a directed edge occurrence: edge `edge` traversed away from
// `tail`. Each edge yields two darts (loops are forbidden).
struct Dart {
    int edge;
    int tail;
    bool operator==(const Dart& o) const { return edge == o.edge && tail == o.tail; }
};

struct FaceWalk {
    std::vector<Dart> darts; // closed walk; next dart starts where this one ends
    std::vector<int> edge_set() const;
};

// Planar multigraph with a rotation system fixing a sphere embedding.
// Vertices are 0..n-1, edges are indices into `edges`. The rotation at a
// vertex lists incident edges in cyclic order; every incidence appears
// exactly once. Faces are derived and validated against Euler's formula,
// so construction fails on anything that is not a connected sphere map.
class EmbeddedGraph {
  public:
    EmbeddedGraph(int num_vertices, std::vector<std::pair<int, int>> edges,
                  std::vector<std::vector<int>> rotations);

    int num_vertices() const { return static_cast<int>(rotations_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    const std::pair<int, int>& edge(int e) const { return edges_[e]; }
    int other_endpoint(int e, int v) const {
        return edges_[e].first == v ? edges_[e].second : edges_[e].first;
    }
    const std::vector<int>& rotation(int v) const { return rotations_[v]; }
    const std::vector<FaceWalk>& faces() const { return faces_; }

    // Face containing the given dart.
    int face_of(int edge, int tail) const { return dart_face_[dart_index(edge, tail)]; }

    // Dart following (edge, ->head) in its face walk.
    Dart next_in_face(const Dart& d) const;

    // Position of edge e in the rotation at v.
    int rotation_position(int v, int e) const;

    bool vertex_on_edge(int e, int v) const {
        return edges_[e].first == v || edges_[e].second == v;
    }

  private:
    int dart_index(int edge, int tail) const {
        return 2 * edge + (edges_[edge].first == tail ? 0 : 1);
    }
    void compute_faces();
    void check_connected() const;

    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> rotations_;
    std::vector<std::vector<int>> rotation_pos_; // vertex -> edge -> position cache
    std::vector<FaceWalk> faces_;
    std::vector<int> dart_face_;
};

} // namespace cyclepack
