#include "cyclepack/incidence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cyclepack {

namespace {

// Face components of the sphere cut along the symmetric difference of two
// arc edge sets. The closed curve P + P' separates faces exactly along the
// edges traversed once; doubled edges pinch and separate nothing.
std::vector<int> face_components(const EmbeddedGraph& g, const Bitset& delta) {
    int nf = g.num_faces();
    std::vector<int> comp(nf, -1);
    int next = 0;
    std::vector<int> stack;
    for (int f0 = 0; f0 < nf; ++f0) {
        if (comp[f0] != -1) continue;
        comp[f0] = next;
        stack.push_back(f0);
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (const Dart& d : g.faces()[f].darts) {
                if (delta.test(d.edge)) continue;
                int f2 = g.face_of(d.edge, g.other_endpoint(d.edge, d.tail));
                if (comp[f2] == -1) {
                    comp[f2] = next;
                    stack.push_back(f2);
                }
            }
        }
        ++next;
    }
    return comp;
}

// Neighbour pairs at v and w merge iff some choice of arcs P in C, P' in N
// bounds a region free of one-sided sides; equivalently, all one-sided sides
// land in a single face component of the cut.
bool pairs_merge(const LaminarFamily& fam, int a, int b, int v, int w) {
    const EmbeddedGraph& g = fam.graph();
    const Cycle& A = fam.cycle(a);
    const Cycle& B = fam.cycle(b);
    auto [pa1, pa2] = A.arcs_between(v, w);
    auto [pb1, pb2] = B.arcs_between(v, w);
    for (const auto& pa : {pa1, pa2}) {
        for (const auto& pb : {pb1, pb2}) {
            Bitset delta(g.num_edges());
            for (int e : pa) delta.set(e);
            for (int e : pb) {
                if (delta.test(e))
                    delta.reset(e); // traversed by both arcs: pinch, no cut
                else
                    delta.set(e);
            }
            if (delta.empty()) return true; // degenerate lens, one side empty
            std::vector<int> comp = face_components(g, delta);
            int target = -1;
            bool all_in_one = true;
            for (size_t k = 0; k < fam.one_sided_sides().size() && all_in_one; ++k) {
                const Bitset& T = fam.oss_faces(static_cast<int>(k));
                int tc = -1;
                for (int f = 0; f < g.num_faces(); ++f) {
                    if (!T.test(f)) continue;
                    CYCLEPACK_REQUIRE(tc == -1 || comp[f] == tc, Internal,
                                      "one-sided side split by an arc region");
                    tc = comp[f];
                }
                if (target == -1) target = tc;
                all_in_one = (tc == target);
            }
            if (all_in_one) return true;
        }
    }
    return false;
}

} // namespace

std::vector<Incidence> incidences_between(const LaminarFamily& fam, int a, int b) {
    CYCLEPACK_REQUIRE(!fam.homotopic(a, b), Internal,
                      "incidences are undefined for homotopic cycles");
    if (a > b) std::swap(a, b);
    std::vector<int> shared;
    for (int v : fam.cycle(a).vertices())
        if (fam.cycle(b).contains_vertex(v)) shared.push_back(v);
    std::sort(shared.begin(), shared.end());
    if (shared.empty()) return {};

    int k = static_cast<int>(shared.size());
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (find(i) == find(j)) continue;
            if (pairs_merge(fam, a, b, shared[i], shared[j])) parent[find(i)] = find(j);
        }

    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < k; ++i) classes[find(i)].push_back(shared[i]);
    std::vector<Incidence> out;
    for (auto& [_, vs] : classes) {
        Incidence I{{a, b}, std::move(vs), false};
        I.crossing = is_crossing(fam, I);
        out.push_back(std::move(I));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Incidence> compute_incidences(const LaminarFamily& fam) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < fam.size(); ++a)
        for (int b = a + 1; b < fam.size(); ++b) {
            if (fam.homotopic(a, b)) continue;
            bool share = false;
            for (int v : fam.cycle(a).vertices())
                if (fam.cycle(b).contains_vertex(v)) {
                    share = true;
                    break;
                }
            if (share) pairs.emplace_back(a, b);
        }
    std::vector<std::vector<Incidence>> per_pair(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(pairs.size()); ++i)
        per_pair[i] = incidences_between(fam, pairs[i].first, pairs[i].second);
    std::vector<Incidence> all;
    for (auto& v : per_pair) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    return all;
}

bool is_crossing(const LaminarFamily& fam, const Incidence& I) {
    if (I.vertices.size() != 1) return false;
    int v = I.vertices[0];
    const EmbeddedGraph& g = fam.graph();
    int d = static_cast<int>(g.rotation(v).size());
    auto [a, b] = I.cycles;

    auto [ea1, ea2] = fam.cycle(a).edges_at(v);
    int base = g.rotation_position(v, ea1);
    auto off = [&](int e) { return (g.rotation_position(v, e) - base + d) % d; };
    int A = off(ea2);
    auto [eb1, eb2] = fam.cycle(b).edges_at(v);
    int q1 = off(eb1), q2 = off(eb2);

    // a's slots split the rotation into the arcs [0..A] and [A..d] (d = 0
    // again); b's ends lie in the closure of one arc. Boundary slots mean a
    // shared edge and stay admissible for zone membership.
    bool in1 = (q1 > 0 && q1 < A) || (q2 > 0 && q2 < A);
    bool in2 = q1 > A || q2 > A;
    if (in1 == in2) return false; // both: not laminar; neither: fully parallel
    int L = in1 ? 0 : A;
    int R = in1 ? A : d;
    auto adj = [&](int o) { return (o == 0 && L > 0) ? d : o; };
    int u1 = std::min(adj(q1), adj(q2)), u2 = std::max(adj(q1), adj(q2));
    if (u1 < L) u1 = L; // shared-edge end on the far boundary
    if (u2 > R) u2 = R;

    bool left = false, right = false;
    for (int x = 0; x < fam.size() && !(left && right); ++x) {
        if (x == a || x == b || !fam.cycle(x).contains_vertex(v)) continue;
        auto [ex1, ex2] = fam.cycle(x).edges_at(v);
        int x1 = adj(off(ex1)), x2 = adj(off(ex2));
        if (x1 >= L && x1 <= u1 && x2 >= L && x2 <= u1) left = true;
        if (x1 >= u2 && x1 <= R && x2 >= u2 && x2 <= R) right = true;
    }
    return left && right;
}

std::vector<Incidence> sub_incidences(const LaminarFamily& fam, const Incidence& I,
                                      const Bitset& S_C, const Bitset& S_N) {
    // Candidate cycles on each side, with the side that witnesses membership.
    auto side_in = [&](int c, const Bitset& S) -> const Bitset* {
        const auto& sd = fam.sides(c);
        if (sd.first.faces.subset_of(S)) return &sd.first.faces;
        if (sd.second.faces.subset_of(S)) return &sd.second.faces;
        return nullptr;
    };
    std::vector<int> iverts = I.vertices;

    struct Cand {
        Incidence inc;
        const Bitset* sc;
        const Bitset* sn;
    };
    std::vector<Cand> cands;
    for (int c = 0; c < fam.size(); ++c) {
        const Bitset* sc = side_in(c, S_C);
        if (!sc) continue;
        for (int m = 0; m < fam.size(); ++m) {
            if (m == c) continue;
            const Bitset* sn = side_in(m, S_N);
            if (!sn) continue;
            if (fam.homotopic(c, m)) continue;
            for (const Incidence& J : incidences_between(fam, std::min(c, m), std::max(c, m))) {
                bool inside = std::includes(iverts.begin(), iverts.end(), J.vertices.begin(),
                                            J.vertices.end());
                if (inside) cands.push_back(Cand{J, sc, sn});
            }
        }
    }
    // Deduplicate (the pair (c,m) is scanned twice).
    std::sort(cands.begin(), cands.end(),
              [](const Cand& x, const Cand& y) { return x.inc < y.inc; });
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [](const Cand& x, const Cand& y) { return x.inc == y.inc; }),
                cands.end());

    std::vector<Incidence> out;
    for (const Cand& x : cands) {
        bool minimal = true;
        for (const Cand& y : cands) {
            if (y.inc == x.inc) continue;
            bool below = std::includes(x.inc.vertices.begin(), x.inc.vertices.end(),
                                       y.inc.vertices.begin(), y.inc.vertices.end()) &&
                         y.sc->subset_of(*x.sc) && y.sn->subset_of(*x.sn);
            if (below) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(x.inc);
    }
    return out;
}

} // namespace cyclepack
