#include "cyclepack/builder.hpp"

#include <algorithm>

namespace cyclepack {

FamilyBuilder::FamilyBuilder(int ring_len) {
    CYCLEPACK_REQUIRE(ring_len >= 2, BadInput, "ring needs at least two vertices");
    for (int i = 0; i < ring_len; ++i) add_vertex();
    std::vector<int> ring;
    if (ring_len == 2) {
        ring = {add_edge(0, 1), add_edge(0, 1)};
        rot_[0] = {ring[0], ring[1]};
        rot_[1] = {ring[1], ring[0]};
    } else {
        for (int i = 0; i < ring_len; ++i) ring.push_back(add_edge(i, (i + 1) % ring_len));
        for (int i = 0; i < ring_len; ++i)
            rot_[i] = {ring[(i + ring_len - 1) % ring_len], ring[i]};
    }
    cycles_.push_back(ring);
}

const EmbeddedGraph& FamilyBuilder::graph() {
    if (!cached_) cached_ = std::make_shared<EmbeddedGraph>(nverts_, edges_, rot_);
    return *cached_;
}

std::vector<FamilyBuilder::Corner> FamilyBuilder::corners(int face) {
    const auto& walk = graph().faces()[face].darts;
    int k = static_cast<int>(walk.size());
    std::vector<Corner> out;
    out.reserve(k);
    for (int t = 0; t < k; ++t) {
        const Dart& prev = walk[(t + k - 1) % k];
        const Dart& cur = walk[t];
        out.push_back(Corner{t, cur.tail, prev.edge, cur.edge});
    }
    return out;
}

void FamilyBuilder::splice_after(int v, int edge_in, const std::vector<int>& new_edges) {
    auto& rot = rot_[v];
    auto it = std::find(rot.begin(), rot.end(), edge_in);
    CYCLEPACK_REQUIRE(it != rot.end(), Internal, "splice anchor edge missing from rotation");
    rot.insert(it + 1, new_edges.begin(), new_edges.end());
}

int FamilyBuilder::insert_anchored(int face, const std::vector<int>& corner_positions,
                                   const std::vector<int>& fresh_counts) {
    auto cs = corners(face);
    int k = static_cast<int>(corner_positions.size());
    CYCLEPACK_REQUIRE(k >= 1 && static_cast<int>(fresh_counts.size()) == k, BadInput,
                      "need one fresh count per anchor");
    std::vector<int> pos = corner_positions;
    std::sort(pos.begin(), pos.end());
    std::vector<Corner> anchor;
    for (int i = 0; i < k; ++i) {
        CYCLEPACK_REQUIRE(pos[i] >= 0 && pos[i] < static_cast<int>(cs.size()), BadInput,
                          "corner position out of range");
        CYCLEPACK_REQUIRE(i == 0 || pos[i] > pos[i - 1], BadInput,
                          "anchors must be distinct corners");
        anchor.push_back(cs[pos[i]]);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            CYCLEPACK_REQUIRE(anchor[i].vertex != anchor[j].vertex, BadInput,
                              "anchors must be distinct vertices");
    int total_len = k;
    for (int f : fresh_counts) {
        CYCLEPACK_REQUIRE(f >= 0, BadInput, "negative fresh count");
        total_len += f;
    }
    CYCLEPACK_REQUIRE(total_len >= 2, BadInput, "cycle needs length at least two");
    if (k == 1)
        CYCLEPACK_REQUIRE(fresh_counts[0] >= 1, BadInput,
                          "single-anchor cycle needs a fresh vertex");

    invalidate();
    // Arc i runs from anchor i to anchor (i+1) mod k through fresh vertices.
    std::vector<std::vector<int>> arc_edges(k);
    for (int i = 0; i < k; ++i) {
        int from = anchor[i].vertex;
        int to = anchor[(i + 1) % k].vertex;
        int prev = from;
        for (int j = 0; j < fresh_counts[i]; ++j) {
            int w = add_vertex();
            int e = add_edge(prev, w);
            arc_edges[i].push_back(e);
            if (prev != from) rot_[prev].push_back(e); // fresh deg-2 vertex: append
            rot_[w].push_back(e);
            prev = w;
        }
        int e = add_edge(prev, to);
        arc_edges[i].push_back(e);
        if (prev != from) rot_[prev].push_back(e);
    }
    // Anchor splices: incoming arc end first, then outgoing, right after the
    // corner's arriving edge.
    for (int i = 0; i < k; ++i) {
        int arc_in = arc_edges[(i + k - 1) % k].back();
        int arc_out = arc_edges[i].front();
        splice_after(anchor[i].vertex, anchor[i].edge_in, {arc_in, arc_out});
    }
    std::vector<int> cycle;
    for (const auto& a : arc_edges) cycle.insert(cycle.end(), a.begin(), a.end());
    cycles_.push_back(cycle);
    graph(); // validate eagerly
    return num_cycles() - 1;
}

int FamilyBuilder::insert_floating(int face, int corner_pos, int m) {
    CYCLEPACK_REQUIRE(m >= 2, BadInput, "floating cycle needs at least two vertices");
    auto cs = corners(face);
    CYCLEPACK_REQUIRE(corner_pos >= 0 && corner_pos < static_cast<int>(cs.size()), BadInput,
                      "corner position out of range");
    Corner tether = cs[corner_pos];

    invalidate();
    std::vector<int> ws, ces;
    for (int i = 0; i < m; ++i) ws.push_back(add_vertex());
    if (m == 2) {
        ces = {add_edge(ws[0], ws[1]), add_edge(ws[0], ws[1])};
        rot_[ws[1]] = {ces[1], ces[0]};
    } else {
        for (int i = 0; i < m; ++i) ces.push_back(add_edge(ws[i], ws[(i + 1) % m]));
        for (int i = 1; i < m; ++i) rot_[ws[i]] = {ces[i - 1], ces[i]};
    }
    int conn = add_edge(tether.vertex, ws[0]);
    rot_[ws[0]] = {ces[m - 1], ces[0], conn};
    splice_after(tether.vertex, tether.edge_in, {conn});
    cycles_.push_back(ces);
    graph();
    return num_cycles() - 1;
}

std::pair<std::shared_ptr<EmbeddedGraph>, std::vector<Cycle>> FamilyBuilder::finish() {
    graph();
    std::vector<Cycle> fam;
    fam.reserve(cycles_.size());
    for (const auto& es : cycles_) fam.emplace_back(*cached_, es);
    return {cached_, fam};
}

} // namespace cyclepack
