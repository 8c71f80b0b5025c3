#include "cyclepack/cycle.hpp"

#include <algorithm>
#include <set>

namespace cyclepack {

Cycle::Cycle(const EmbeddedGraph& g, std::vector<int> edge_seq) : edges_(std::move(edge_seq)) {
    CYCLEPACK_REQUIRE(edges_.size() >= 2, NotACycle, "cycle needs at least two edges");
    std::set<int> distinct(edges_.begin(), edges_.end());
    CYCLEPACK_REQUIRE(distinct.size() == edges_.size(), NotACycle, "repeated edge in cycle");

    // Derive the vertex sequence: vertices_[i] is shared by edges_[i-1], edges_[i].
    int n = length();
    vertices_.resize(n);
    if (n == 2) {
        auto [a, b] = g.edge(edges_[0]);
        CYCLEPACK_REQUIRE(g.vertex_on_edge(edges_[1], a) && g.vertex_on_edge(edges_[1], b),
                          NotACycle, "two-edge cycle must be a parallel pair");
        vertices_ = {a, b};
    } else {
        for (int i = 0; i < n; ++i) {
            int ep = edges_[(i + n - 1) % n];
            int ec = edges_[i];
            auto [a, b] = g.edge(ep);
            bool sa = g.vertex_on_edge(ec, a), sb = g.vertex_on_edge(ec, b);
            CYCLEPACK_REQUIRE(sa != sb, NotACycle,
                              "consecutive edges must share exactly one vertex");
            vertices_[i] = sa ? a : b;
        }
    }
    // Walk consistency: edges_[i] connects vertices_[i] and vertices_[i+1].
    for (int i = 0; i < n; ++i) {
        int u = vertices_[i], v = vertices_[(i + 1) % n];
        auto [a, b] = g.edge(edges_[i]);
        CYCLEPACK_REQUIRE((a == u && b == v) || (a == v && b == u), NotACycle,
                          "edge sequence is not a closed walk");
    }
    std::set<int> vs(vertices_.begin(), vertices_.end());
    CYCLEPACK_REQUIRE(vs.size() == vertices_.size(), NotACycle, "cycle visits a vertex twice");

    sorted_edges_ = edges_;
    std::sort(sorted_edges_.begin(), sorted_edges_.end());
}

bool Cycle::contains_vertex(int v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Cycle::contains_edge(int e) const {
    return std::binary_search(sorted_edges_.begin(), sorted_edges_.end(), e);
}

int Cycle::vertex_position(int v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    return it == vertices_.end() ? -1 : static_cast<int>(it - vertices_.begin());
}

std::pair<int, int> Cycle::edges_at(int v) const {
    int p = vertex_position(v);
    CYCLEPACK_REQUIRE(p >= 0, Internal, "vertex not on cycle");
    int n = length();
    return {edges_[(p + n - 1) % n], edges_[p]};
}

std::pair<std::vector<int>, std::vector<int>> Cycle::arcs_between(int v, int w) const {
    int pv = vertex_position(v), pw = vertex_position(w);
    CYCLEPACK_REQUIRE(pv >= 0 && pw >= 0 && pv != pw, Internal, "arc endpoints not on cycle");
    int n = length();
    std::vector<int> a, b;
    for (int i = pv; i != pw; i = (i + 1) % n) a.push_back(edges_[i]);
    for (int i = pw; i != pv; i = (i + 1) % n) b.push_back(edges_[i]);
    return {a, b};
}

} // namespace cyclepack
