#include "cyclepack/generators.hpp"

#include <algorithm>
#include <set>

namespace cyclepack {

BuiltInstance make_theta() {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 1}, {0, 1}};
    std::vector<std::vector<int>> rot = {{0, 1, 2}, {2, 1, 0}};
    auto g = std::make_shared<EmbeddedGraph>(2, edges, rot);
    std::vector<Cycle> fam;
    fam.emplace_back(*g, std::vector<int>{0, 1});
    fam.emplace_back(*g, std::vector<int>{1, 2});
    fam.emplace_back(*g, std::vector<int>{0, 2});
    return {g, fam, {}, "theta"};
}

BuiltInstance make_k4() {
    // Plane drawing: triangle 1,2,3 with vertex 0 inside.
    // e0=01 e1=02 e2=03 e3=12 e4=13 e5=23
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<int>> rot = {
        {0, 1, 2},       // around the center
        {3, 0, 4},       // top
        {5, 1, 3},       // bottom-left
        {4, 2, 5},       // bottom-right
    };
    auto g = std::make_shared<EmbeddedGraph>(4, edges, rot);
    std::vector<Cycle> fam;
    fam.emplace_back(*g, std::vector<int>{0, 3, 1});    // 0-1-2
    fam.emplace_back(*g, std::vector<int>{0, 4, 2});    // 0-1-3
    fam.emplace_back(*g, std::vector<int>{1, 5, 2});    // 0-2-3
    fam.emplace_back(*g, std::vector<int>{3, 5, 4});    // 1-2-3
    fam.emplace_back(*g, std::vector<int>{0, 3, 5, 2}); // 0-1-2-3
    fam.emplace_back(*g, std::vector<int>{0, 4, 5, 1}); // 0-1-3-2
    fam.emplace_back(*g, std::vector<int>{1, 3, 4, 2}); // 0-2-1-3
    return {g, fam, {}, "k4"};
}

BuiltInstance make_wheel(int n) {
    CYCLEPACK_REQUIRE(n >= 3, BadInput, "wheel needs rim of at least 3");
    // Vertex 0 = hub, rim 1..n. Spokes e_{i-1} = (0,i); rim edges n..2n-1.
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
    std::vector<std::vector<int>> rot(n + 1);
    for (int i = 0; i < n; ++i) rot[0].push_back(i);
    for (int i = 1; i <= n; ++i) {
        int rim_prev = n + (i + n - 2) % n;
        int rim_next = n + i - 1;
        rot[i] = {rim_next, i - 1, rim_prev};
    }
    auto g = std::make_shared<EmbeddedGraph>(n + 1, edges, rot);
    return {g, {}, {}, "wheel" + std::to_string(n)};
}

BuiltInstance make_grid(int rows, int cols, int num_demand, uint64_t seed) {
    CYCLEPACK_REQUIRE(rows >= 2 && cols >= 2, BadInput, "grid needs at least 2x2");
    auto vid = [&](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    // Horizontal edges first, then vertical; remember ids for rotations.
    std::vector<std::vector<int>> hid(rows, std::vector<int>(cols - 1));
    std::vector<std::vector<int>> vidg(rows - 1, std::vector<int>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) {
            hid[r][c] = static_cast<int>(edges.size());
            edges.emplace_back(vid(r, c), vid(r, c + 1));
        }
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            vidg[r][c] = static_cast<int>(edges.size());
            edges.emplace_back(vid(r, c), vid(r + 1, c));
        }
    std::vector<std::vector<int>> rot(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            auto& o = rot[vid(r, c)]; // CCW: E, N, W, S  (N = smaller row)
            if (c + 1 < cols) o.push_back(hid[r][c]);
            if (r > 0) o.push_back(vidg[r - 1][c]);
            if (c > 0) o.push_back(hid[r][c - 1]);
            if (r + 1 < rows) o.push_back(vidg[r][c]);
        }
    auto g = std::make_shared<EmbeddedGraph>(rows * cols, edges, rot);
    Rng rng(seed * 2654435761ULL + 17);
    std::set<int> demand;
    while (static_cast<int>(demand.size()) < num_demand)
        demand.insert(rng.below(static_cast<int>(edges.size())));
    return {g, {}, std::vector<int>(demand.begin(), demand.end()),
            "grid" + std::to_string(rows) + "x" + std::to_string(cols)};
}

namespace {

// Corner of `face` at the k-th occurrence of vertex v on its walk.
int corner_at(FamilyBuilder& b, int face, int v, int occurrence = 0) {
    for (const auto& c : b.corners(face)) {
        if (c.vertex == v) {
            if (occurrence == 0) return c.walk_pos;
            --occurrence;
        }
    }
    fail(ErrorKind::Internal, "vertex has no such corner on face");
}

// Face whose set of incident family-cycle... helper: find the face of the
// current graph that contains all the given vertices on its walk.
int face_with_vertices(FamilyBuilder& b, const std::vector<int>& vs) {
    const auto& faces = b.graph().faces();
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        std::set<int> on;
        for (const Dart& d : faces[f].darts) on.insert(d.tail);
        bool all = true;
        for (int v : vs)
            if (!on.count(v)) all = false;
        if (all) return f;
    }
    fail(ErrorKind::Internal, "no face contains the requested vertices");
}

} // namespace

BuiltInstance make_six_nesting() {
    // a = ring {q=0, t=1}; b = triangle through q inside a; d inside b;
    // c inside a, outside b, touching b; e outside a; f inside e.
    FamilyBuilder b(2); // cycle a: vertices q=0, t=1; faces: inner, outer
    const int q = 0, t = 1;
    // Inner side of a = face containing... both faces touch q and t; inner is
    // the face the next insert goes into; fix it as face 0 of the initial
    // ring (the walk {e0,e1} traced first).
    int f_in = 0;
    // b: triangle anchored at q with two fresh vertices (w, p).
    b.insert_anchored(f_in, {corner_at(b, f_in, q)}, {2});
    // Fresh vertices added in arc order: first fresh = 2 (w), second = 3 (p).
    const int w = 2, p = 3;
    // d: 2-cycle anchored at p, inside b's lens.
    int lens_b = face_with_vertices(b, {q, w, p});
    // Two candidate faces contain all of q,w,p: the lens and the pocket; the
    // lens is the one not containing t.
    {
        const auto& faces = b.graph().faces();
        std::set<int> onwalk;
        for (const Dart& d : faces[lens_b].darts) onwalk.insert(d.tail);
        if (onwalk.count(t)) {
            for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
                std::set<int> on;
                for (const Dart& d : faces[f].darts) on.insert(d.tail);
                if (on.count(q) && on.count(w) && on.count(p) && !on.count(t)) {
                    lens_b = f;
                    break;
                }
            }
        }
    }
    b.insert_anchored(lens_b, {corner_at(b, lens_b, p)}, {1});
    // c: 2-cycle anchored at w, in the pocket between a and b.
    int pocket = face_with_vertices(b, {w, t});
    b.insert_anchored(pocket, {corner_at(b, pocket, w)}, {1});
    // e: 2-cycle anchored at t on the outer side of a.
    const auto& faces = b.graph().faces();
    int outer = -1;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        std::set<int> on;
        for (const Dart& d : faces[f].darts) on.insert(d.tail);
        if (on.count(t) && !on.count(w) && !on.count(p) && on.size() <= 2) outer = f;
    }
    CYCLEPACK_REQUIRE(outer >= 0, Internal, "outer face of six-cycle nesting not found");
    int cyc_e = b.insert_anchored(outer, {corner_at(b, outer, t)}, {1});
    int s = b.graph().edge(b.family_edge_lists()[cyc_e][0]).second; // fresh vertex of e
    // f: 2-cycle anchored at s inside e's lens.
    int lens_e = face_with_vertices(b, {s});
    {
        // lens of e: contains s but not t's other corner... both faces at s
        // work only if inside e; pick the face whose walk stays on {t,s}.
        const auto& fs = b.graph().faces();
        for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
            std::set<int> on;
            for (const Dart& d : fs[f].darts) on.insert(d.tail);
            if (on == std::set<int>{t, s}) lens_e = f;
        }
        // Of the two {t,s} faces (lens and the ring between a and e), prefer
        // the one with exactly two darts (the lens of the 2-cycle e).
        for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
            std::set<int> on;
            for (const Dart& d : fs[f].darts) on.insert(d.tail);
            if (on == std::set<int>{t, s} && fs[f].darts.size() == 2) lens_e = f;
        }
    }
    b.insert_anchored(lens_e, {corner_at(b, lens_e, s)}, {1});

    auto [g, fam] = b.finish();
    // Family index order: a=0, b=1, d=2, c=3, e=4, f=5. Reorder to a,b,c,d,e,f.
    std::vector<Cycle> ordered = {fam[0], fam[1], fam[3], fam[2], fam[4], fam[5]};
    return {g, ordered, {}, "six_nesting"};
}

EquatorConfig make_equator() {
    FamilyBuilder b(2); // c* ring: vertices v=0, w=1
    const int v = 0, w = 1;
    int upper = 0, lower = 1;
    // c2: lens from v to w in the upper face (no fresh vertices).
    int c2 = b.insert_anchored(upper, {corner_at(b, upper, v), corner_at(b, upper, w)}, {0, 0});
    // c6: above c2, through v and w.
    int above_c2 = -1;
    {
        const auto& fs = b.graph().faces();
        // Faces containing both v and w now: the c2 lens, the region between
        // c2 and c* (upper remainder), and the lower face. The upper
        // remainder is the one bounded by one c2 edge and one c* edge.
        for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
            const auto& walk = fs[f].darts;
            if (walk.size() != 2) continue;
            std::set<int> es;
            for (const Dart& d : walk) es.insert(d.edge);
            // c* edges are 0,1; c2 edges are 2,3.
            bool has_star = es.count(0) || es.count(1);
            bool had_c2 = es.count(2) || es.count(3);
            if (has_star && had_c2) above_c2 = f;
        }
    }
    CYCLEPACK_REQUIRE(above_c2 >= 0, Internal, "equator: region above c2 not found");
    int c6 = b.insert_anchored(above_c2, {corner_at(b, above_c2, v), corner_at(b, above_c2, w)},
                               {0, 0});
    // c3: petal at w inside c6's lens (the face bounded by the two c6 edges).
    int lens_c6 = -1;
    {
        const auto& fs = b.graph().faces();
        for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
            std::set<int> es;
            for (const Dart& d : fs[f].darts) es.insert(d.edge);
            if (es == std::set<int>{4, 5}) lens_c6 = f;
        }
    }
    CYCLEPACK_REQUIRE(lens_c6 >= 0, Internal, "equator: c6 lens not found");
    int c3 = b.insert_anchored(lens_c6, {corner_at(b, lens_c6, w)}, {1});
    // c1: petal at v in the region outside c6 (bounded by c6 and c*).
    int outside_c6 = -1;
    {
        const auto& fs = b.graph().faces();
        for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
            std::set<int> es;
            for (const Dart& d : fs[f].darts) es.insert(d.edge);
            bool has_star = es.count(0) || es.count(1);
            bool has_c6 = es.count(4) || es.count(5);
            if (has_star && has_c6 && fs[f].darts.size() == 2) outside_c6 = f;
        }
    }
    CYCLEPACK_REQUIRE(outside_c6 >= 0, Internal, "equator: region outside c6 not found");
    int c1 = b.insert_anchored(outside_c6, {corner_at(b, outside_c6, v)}, {1});
    // c4: lens from v to w in the lower face.
    int c4 = b.insert_anchored(lower, {corner_at(b, lower, v), corner_at(b, lower, w)}, {0, 0});
    // c5: petal at w below c4 (the lower remainder bounded by c4 and c*).
    int below_c4 = -1;
    {
        const auto& fs = b.graph().faces();
        for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
            std::set<int> es;
            for (const Dart& d : fs[f].darts) es.insert(d.edge);
            bool has_star = es.count(0) || es.count(1);
            bool has_c4 = false;
            for (int e : b.family_edge_lists()[c4]) has_c4 |= es.count(e) > 0;
            if (has_star && has_c4 && fs[f].darts.size() == 2) below_c4 = f;
        }
    }
    CYCLEPACK_REQUIRE(below_c4 >= 0, Internal, "equator: region below c4 not found");
    int c5 = b.insert_anchored(below_c4, {corner_at(b, below_c4, w)}, {1});

    auto [g, fam] = b.finish();
    EquatorConfig out{{g, fam, {}, "equator"}, v, w, 0, c1, c2, c3, c4, c5, c6};
    return out;
}

BuiltInstance make_flower(int petals) {
    CYCLEPACK_REQUIRE(petals >= 1, BadInput, "flower needs petals");
    FamilyBuilder b(2);
    const int hub = 0;
    int face = 0;
    for (int i = 0; i < petals; ++i) {
        int cyc = b.insert_anchored(face, {corner_at(b, face, hub)}, {1});
        // Next petal goes into the pocket beside this one: the face that has
        // a corner at hub and is bounded by one new petal edge and the edge
        // the previous corner pointed at.
        const auto& es = b.family_edge_lists()[cyc];
        const auto& fs = b.graph().faces();
        int next_face = -1;
        for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
            std::set<int> fes;
            bool at_hub = false;
            for (const Dart& d : fs[f].darts) {
                fes.insert(d.edge);
                at_hub |= d.tail == hub;
            }
            if (!at_hub) continue;
            bool has_new = fes.count(es[0]) || fes.count(es[1]);
            bool has_lens = fes.count(es[0]) && fes.count(es[1]) && fs[f].darts.size() == 2;
            bool has_ring = fes.count(0) || fes.count(1); // initial ring edges
            if (has_new && has_ring && !has_lens) next_face = f;
        }
        if (next_face >= 0) face = next_face;
    }
    auto [g, fam] = b.finish();
    return {g, fam, {}, "flower" + std::to_string(petals)};
}

BuiltInstance make_chain(int depth) {
    CYCLEPACK_REQUIRE(depth >= 1, BadInput, "chain needs depth");
    FamilyBuilder b(3);
    int prev_vertex = 0;
    for (int i = 1; i < depth; ++i) {
        // Insert the next cycle inside the innermost lens, touching the
        // previous cycle at one vertex.
        const auto& fs = b.graph().faces();
        const auto& prev = b.family_edge_lists()[i - 1];
        int lens = -1;
        for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
            std::set<int> es;
            for (const Dart& d : fs[f].darts) es.insert(d.edge);
            std::set<int> pes(prev.begin(), prev.end());
            if (es == pes) lens = f; // face bounded exactly by the previous cycle
        }
        CYCLEPACK_REQUIRE(lens >= 0, Internal, "chain: lens not found");
        int pos = -1;
        for (const auto& c : b.corners(lens))
            if (c.vertex == prev_vertex || pos == -1) {
                pos = c.walk_pos;
                if (c.vertex == prev_vertex) break;
            }
        int cyc = b.insert_anchored(lens, {pos}, {2});
        prev_vertex = b.graph().edge(b.family_edge_lists()[cyc][0]).second;
    }
    auto [g, fam] = b.finish();
    return {g, fam, {}, "chain" + std::to_string(depth)};
}

BuiltInstance gen_nested(const NestedProfile& profile, uint64_t seed) {
    Rng rng(seed);
    FamilyBuilder b(2 + rng.below(3));
    while (b.num_cycles() < profile.cycles) {
        const auto& fs = b.graph().faces();
        int face = rng.below(static_cast<int>(fs.size()));
        auto cs = b.corners(face);
        // Candidate anchors: corners with pairwise distinct vertices.
        if (rng.chance(profile.floating_pct, 100) || cs.empty()) {
            b.insert_floating(face, rng.below(static_cast<int>(cs.size())),
                              2 + rng.below(std::max(1, profile.max_fresh)));
            continue;
        }
        int want = 1 + rng.below(std::max(1, profile.max_anchors));
        std::vector<int> picks;
        std::set<int> used_vertices;
        // Scan corners from a random start, greedily keeping walk order.
        int start = rng.below(static_cast<int>(cs.size()));
        for (int step = 0; step < static_cast<int>(cs.size()) &&
                           static_cast<int>(picks.size()) < want;
             ++step) {
            const auto& c = cs[(start + step) % cs.size()];
            if (used_vertices.count(c.vertex)) continue;
            if (!picks.empty() && c.walk_pos <= picks.back()) continue;
            if (rng.chance(2, 3) || static_cast<int>(cs.size()) - step <=
                                        want - static_cast<int>(picks.size())) {
                picks.push_back(c.walk_pos);
                used_vertices.insert(c.vertex);
            }
        }
        if (picks.empty()) continue;
        std::sort(picks.begin(), picks.end());
        std::vector<int> fresh(picks.size());
        int total = static_cast<int>(picks.size());
        for (auto& f : fresh) {
            f = rng.below(profile.max_fresh + 1);
            total += f;
        }
        if (total < 2) fresh[0] += 2 - total;
        if (picks.size() == 1 && fresh[0] == 0) fresh[0] = 1;
        b.insert_anchored(face, picks, fresh);
    }
    auto [g, fam] = b.finish();
    return {g, fam, {}, "nested-" + std::to_string(seed)};
}

} // namespace cyclepack
