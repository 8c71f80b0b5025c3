#include "cyclepack/embedded_graph.hpp"

#include <algorithm>
#include <map>

namespace cyclepack {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::MalformedRotation: return "MalformedRotation";
        case ErrorKind::NotACycle: return "NotACycle";
        case ErrorKind::NotLaminar: return "NotLaminar";
        case ErrorKind::DegenerateFamily: return "DegenerateFamily";
        case ErrorKind::CycleNotInFamily: return "CycleNotInFamily";
        case ErrorKind::UncrossingStalled: return "UncrossingStalled";
        case ErrorKind::StructureInvariantViolated: return "StructureInvariantViolated";
        case ErrorKind::EmptySupport: return "EmptySupport";
        case ErrorKind::EmptyLevel: return "EmptyLevel";
        case ErrorKind::FeasibilityViolation: return "FeasibilityViolation";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::GuaranteeViolated: return "GuaranteeViolated";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::CheckerFailed: return "CheckerFailed";
        case ErrorKind::RedundantCyclePresent: return "RedundantCyclePresent";
        case ErrorKind::UnknownCycle: return "UnknownCycle";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

std::vector<int> FaceWalk::edge_set() const {
    std::vector<int> es;
    es.reserve(darts.size());
    for (const Dart& d : darts) es.push_back(d.edge);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

EmbeddedGraph::EmbeddedGraph(int num_vertices, std::vector<std::pair<int, int>> edges,
                             std::vector<std::vector<int>> rotations)
    : edges_(std::move(edges)), rotations_(std::move(rotations)) {
    CYCLEPACK_REQUIRE(static_cast<int>(rotations_.size()) == num_vertices, MalformedRotation,
                      "rotation list size does not match vertex count");
    for (size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        CYCLEPACK_REQUIRE(u >= 0 && u < num_vertices && v >= 0 && v < num_vertices, BadInput,
                          "edge endpoint out of range");
        CYCLEPACK_REQUIRE(u != v, BadInput, "loops are not allowed");
    }

    // Every (vertex, incident edge) pair must appear exactly once.
    std::vector<int> seen(edges_.size(), 0);
    rotation_pos_.assign(num_vertices, {});
    for (int v = 0; v < num_vertices; ++v) {
        rotation_pos_[v].assign(edges_.size(), -1);
        for (size_t i = 0; i < rotations_[v].size(); ++i) {
            int e = rotations_[v][i];
            CYCLEPACK_REQUIRE(e >= 0 && e < static_cast<int>(edges_.size()), MalformedRotation,
                              "rotation references unknown edge");
            CYCLEPACK_REQUIRE(vertex_on_edge(e, v), MalformedRotation,
                              "rotation lists edge not incident to the vertex");
            CYCLEPACK_REQUIRE(rotation_pos_[v][e] == -1, MalformedRotation,
                              "edge repeated in rotation");
            rotation_pos_[v][e] = static_cast<int>(i);
            seen[e]++;
        }
    }
    for (size_t e = 0; e < edges_.size(); ++e)
        CYCLEPACK_REQUIRE(seen[e] == 2, MalformedRotation,
                          "each edge must appear in the rotation of both endpoints");

    check_connected();
    compute_faces();

    long long euler = static_cast<long long>(num_vertices) - num_edges() + num_faces();
    CYCLEPACK_REQUIRE(euler == 2, MalformedRotation,
                      "rotation system is not a sphere embedding (Euler check failed)");
}

void EmbeddedGraph::check_connected() const {
    int n = num_vertices();
    if (n == 0) fail(ErrorKind::NotConnected, "empty graph");
    std::vector<char> vis(n, 0);
    std::vector<int> stack = {0};
    vis[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : rotations_[v]) {
            int w = other_endpoint(e, v);
            if (!vis[w]) {
                vis[w] = 1;
                cnt++;
                stack.push_back(w);
            }
        }
    }
    if (cnt != n) fail(ErrorKind::NotConnected, "graph is not connected");
}

Dart EmbeddedGraph::next_in_face(const Dart& d) const {
    int head = other_endpoint(d.edge, d.tail);
    const auto& rot = rotations_[head];
    int pos = rotation_pos_[head][d.edge];
    int nxt = rot[(pos + 1) % rot.size()];
    return Dart{nxt, head};
}

void EmbeddedGraph::compute_faces() {
    int nd = 2 * num_edges();
    dart_face_.assign(nd, -1);
    for (int e = 0; e < num_edges(); ++e) {
        for (int side = 0; side < 2; ++side) {
            int tail = side == 0 ? edges_[e].first : edges_[e].second;
            int idx = dart_index(e, tail);
            if (dart_face_[idx] != -1) continue;
            FaceWalk walk;
            Dart d{e, tail};
            while (true) {
                int di = dart_index(d.edge, d.tail);
                if (dart_face_[di] != -1) break;
                dart_face_[di] = static_cast<int>(faces_.size());
                walk.darts.push_back(d);
                d = next_in_face(d);
            }
            CYCLEPACK_REQUIRE(d == walk.darts.front(), MalformedRotation,
                              "face traversal did not close");
            faces_.push_back(std::move(walk));
        }
    }
}

int EmbeddedGraph::rotation_position(int v, int e) const {
    int p = rotation_pos_[v][e];
    CYCLEPACK_REQUIRE(p >= 0, Internal, "edge not incident to vertex");
    return p;
}

} // namespace cyclepack
