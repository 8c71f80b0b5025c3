#include "cyclepack/laminar.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

namespace cyclepack {

std::pair<SideRegion, SideRegion> cycle_sides(const EmbeddedGraph& g, const Cycle& c) {
    int nf = g.num_faces();
    Bitset on_cycle_edge(g.num_edges());
    for (int e : c.edges()) on_cycle_edge.set(e);

    // Seed: faces along the forward darts on one side, reverse darts on the
    // other, then flood across non-cycle edges.
    std::vector<int> side_of_face(nf, -1);
    std::vector<int> queue;
    int n = c.length();
    for (int i = 0; i < n; ++i) {
        int e = c.edges()[i];
        int tail = c.vertices()[i];
        int f_fwd = g.face_of(e, tail);
        int f_rev = g.face_of(e, g.other_endpoint(e, tail));
        for (auto [f, s] : {std::pair{f_fwd, 0}, std::pair{f_rev, 1}}) {
            CYCLEPACK_REQUIRE(side_of_face[f] == -1 || side_of_face[f] == s, NotACycle,
                              "cycle does not separate its adjacent faces");
            if (side_of_face[f] == -1) {
                side_of_face[f] = s;
                queue.push_back(f);
            }
        }
    }
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (const Dart& d : g.faces()[f].darts) {
            if (on_cycle_edge.test(d.edge)) continue;
            int g2 = g.face_of(d.edge, g.other_endpoint(d.edge, d.tail));
            if (side_of_face[g2] == -1) {
                side_of_face[g2] = side_of_face[f];
                queue.push_back(g2);
            } else {
                CYCLEPACK_REQUIRE(side_of_face[g2] == side_of_face[f], NotACycle,
                                  "flood fill crossed the cycle");
            }
        }
    }

    SideRegion a, b;
    a.faces = Bitset(nf);
    b.faces = Bitset(nf);
    for (int f = 0; f < nf; ++f) {
        CYCLEPACK_REQUIRE(side_of_face[f] != -1, NotACycle, "face not reached by either side");
        (side_of_face[f] == 0 ? a.faces : b.faces).set(f);
    }
    CYCLEPACK_REQUIRE(!a.faces.empty() && !b.faces.empty(), NotACycle,
                      "a side of the cycle is empty");
    return {a, b};
}

bool side_contains_cycle(const SideRegion& s, const std::pair<SideRegion, SideRegion>& sides2) {
    return sides2.first.faces.subset_of(s.faces) || sides2.second.faces.subset_of(s.faces);
}

namespace {

bool pair_laminar(const std::pair<SideRegion, SideRegion>& a,
                  const std::pair<SideRegion, SideRegion>& b) {
    return !a.first.faces.intersects(b.first.faces) ||
           !a.first.faces.intersects(b.second.faces) ||
           !a.second.faces.intersects(b.first.faces) ||
           !a.second.faces.intersects(b.second.faces);
}

} // namespace

std::optional<std::pair<int, int>>
find_crossing_pair_serial(const std::vector<std::pair<SideRegion, SideRegion>>& sides) {
    int n = static_cast<int>(sides.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!pair_laminar(sides[i], sides[j])) return std::pair{i, j};
    return std::nullopt;
}

std::optional<std::pair<int, int>>
find_crossing_pair_parallel(const std::vector<std::pair<SideRegion, SideRegion>>& sides) {
    int n = static_cast<int>(sides.size());
    const long long none = static_cast<long long>(n) * n;
    long long best = none; // encoded i*n+j of the first violation, row-major
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (int i = 0; i < n; ++i) {
        if (static_cast<long long>(i) * n >= best) continue;
        for (int j = i + 1; j < n; ++j) {
            if (!pair_laminar(sides[i], sides[j])) {
                long long k = static_cast<long long>(i) * n + j;
                if (k < best) best = k;
                break;
            }
        }
    }
    if (best == none) return std::nullopt;
    return std::pair{static_cast<int>(best / n), static_cast<int>(best % n)};
}

LaminarityResult is_laminar(const EmbeddedGraph& g, const std::vector<Cycle>& cycles) {
    std::vector<std::pair<SideRegion, SideRegion>> sides;
    sides.reserve(cycles.size());
    for (const Cycle& c : cycles) sides.push_back(cycle_sides(g, c));
    auto w = find_crossing_pair_parallel(sides);
    return LaminarityResult{!w.has_value(), w};
}

LaminarFamily::LaminarFamily(const EmbeddedGraph& g, std::vector<Cycle> cycles)
    : g_(&g), cycles_(std::move(cycles)) {
    int n = size();
    sides_.reserve(n);
    for (const Cycle& c : cycles_) sides_.push_back(cycle_sides(g, c));

    if (auto w = find_crossing_pair_serial(sides_))
        fail(ErrorKind::NotLaminar, "cycles " + std::to_string(w->first) + " and " +
                                        std::to_string(w->second) + " cross");

    // Duplicate cycles make one-sidedness ties ambiguous; reject them.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            CYCLEPACK_REQUIRE(!(cycles_[i] == cycles_[j]), DegenerateFamily,
                              "family contains a duplicate cycle");

    // Minimal sides among all 2n sides. A side is minimal iff no other side's
    // face set is strictly contained in it. Equal face sets across distinct
    // cycles are a degenerate input.
    auto side_faces = [&](int i, int s) -> const Bitset& {
        return s == 0 ? sides_[i].first.faces : sides_[i].second.faces;
    };
    one_sided_.assign(n, false);
    for (int i = 0; i < n; ++i) {
        for (int s = 0; s < 2; ++s) {
            const Bitset& S = side_faces(i, s);
            bool minimal = true;
            for (int j = 0; j < n && minimal; ++j) {
                for (int t = 0; t < 2; ++t) {
                    if (i == j) continue;
                    const Bitset& T = side_faces(j, t);
                    CYCLEPACK_REQUIRE(T != S, DegenerateFamily,
                                      "two distinct cycles with identical side face sets");
                    if (T.subset_of(S)) {
                        minimal = false;
                        break;
                    }
                }
            }
            if (minimal) {
                one_sided_[i] = true;
                oss_.push_back(OneSidedSide{i, s});
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (one_sided_[i]) one_sided_cycles_.push_back(i);

    // Which one-sided sides each side contains. For laminar, tie-free
    // families every one-sided side lands in exactly one side of each cycle.
    oss_in_side_.assign(n, {});
    for (int i = 0; i < n; ++i) {
        for (size_t k = 0; k < oss_.size(); ++k) {
            const Bitset& T = side_faces(oss_[k].cycle, oss_[k].side);
            bool in0 = T.subset_of(side_faces(i, 0));
            bool in1 = T.subset_of(side_faces(i, 1));
            CYCLEPACK_REQUIRE(in0 != in1, Internal,
                              "one-sided side not split cleanly by a family cycle");
            oss_in_side_[i][in0 ? 0 : 1].push_back(static_cast<int>(k));
        }
    }

    // Homotopy classes: two cycles are homotopic iff they induce the same
    // unordered partition of the one-sided sides.
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> class_of;
    homotopy_class_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        std::vector<int> a = oss_in_side_[i][0], b = oss_in_side_[i][1];
        if (b < a) std::swap(a, b);
        auto key = std::pair{std::move(a), std::move(b)};
        auto [it, inserted] = class_of.try_emplace(key, static_cast<int>(class_of.size()));
        homotopy_class_[i] = it->second;
    }

    // Connected components of the edge-induced subgraph, via shared vertices.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<int>> at_vertex(g.num_vertices());
    for (int i = 0; i < n; ++i)
        for (int v : cycles_[i].vertices()) at_vertex[v].push_back(i);
    for (const auto& group : at_vertex)
        for (size_t k = 1; k < group.size(); ++k) parent[find(group[0])] = find(group[k]);
    component_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (component_[r] == -1) component_[r] = num_components_++;
        component_[i] = component_[r];
    }
}

const Bitset& LaminarFamily::oss_faces(int k) const {
    const auto& s = sides_[oss_[k].cycle];
    return oss_[k].side == 0 ? s.first.faces : s.second.faces;
}

std::pair<std::vector<int>, std::vector<int>> LaminarFamily::neighbours(int c) const {
    CYCLEPACK_REQUIRE(c >= 0 && c < size(), CycleNotInFamily, "cycle index out of range");
    std::vector<int> nb, nb1;
    for (int j = 0; j < size(); ++j) {
        bool shares = j == c;
        if (!shares)
            for (int v : cycles_[c].vertices())
                if (cycles_[j].contains_vertex(v)) {
                    shares = true;
                    break;
                }
        if (shares) {
            nb.push_back(j);
            if (one_sided_[j]) nb1.push_back(j);
        }
    }
    return {nb, nb1};
}

std::vector<int> LaminarFamily::cycles_inside_side(int i, int side) const {
    const Bitset& S = side == 0 ? sides_[i].first.faces : sides_[i].second.faces;
    std::vector<int> out;
    for (int j = 0; j < size(); ++j) {
        if (j == i) continue;
        if (sides_[j].first.faces.subset_of(S) || sides_[j].second.faces.subset_of(S))
            out.push_back(j);
    }
    return out;
}

std::pair<LaminarFamily, std::vector<int>> LaminarFamily::component_family(int comp) const {
    std::vector<Cycle> sub;
    std::vector<int> map;
    for (int i = 0; i < size(); ++i)
        if (component_[i] == comp) {
            sub.push_back(cycles_[i]);
            map.push_back(i);
        }
    return {LaminarFamily(*g_, std::move(sub)), std::move(map)};
}

} // namespace cyclepack
