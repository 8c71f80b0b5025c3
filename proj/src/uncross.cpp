#include "cyclepack/uncross.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cyclepack {

namespace {

bool pair_crosses(const std::pair<SideRegion, SideRegion>& a,
                  const std::pair<SideRegion, SideRegion>& b) {
    return a.first.faces.intersects(b.first.faces) && a.first.faces.intersects(b.second.faces) &&
           a.second.faces.intersects(b.first.faces) && a.second.faces.intersects(b.second.faces);
}

long long count_crossings(const FractionalSolution& x,
                          const std::vector<std::pair<SideRegion, SideRegion>>& sides,
                          std::pair<int, int>* first = nullptr) {
    std::vector<int> sup = x.support();
    long long cnt = 0;
    for (size_t i = 0; i < sup.size(); ++i)
        for (size_t j = i + 1; j < sup.size(); ++j)
            if (pair_crosses(sides[sup[i]], sides[sup[j]])) {
                if (cnt == 0 && first) *first = {sup[i], sup[j]};
                ++cnt;
            }
    return cnt;
}

// Contiguous subpaths of c whose endpoints lie on `other` and whose interior
// avoids it. Returned as (first vertex pos, last vertex pos, edges).
struct SubPath {
    int a, b; // endpoint vertices
    std::vector<int> edges;
};

std::vector<SubPath> candidate_paths(const Cycle& c, const Cycle& other) {
    std::vector<SubPath> out;
    int n = c.length();
    const auto& vs = c.vertices();
    for (int start = 0; start < n; ++start) {
        if (!other.contains_vertex(vs[start])) continue;
        std::vector<int> edges;
        for (int len = 1; len <= n; ++len) {
            int endpos = (start + len) % n;
            edges.push_back(c.edges()[(start + len - 1) % n]);
            if (other.contains_vertex(vs[endpos])) {
                out.push_back(SubPath{vs[start], vs[endpos], edges});
                break; // interior must avoid `other`: longer paths would pass through it
            }
        }
    }
    return out;
}

} // namespace

FractionalSolution uncross_support(const EmbeddedGraph& g, const std::vector<Cycle>& family,
                                   const FractionalSolution& x) {
    std::vector<std::pair<SideRegion, SideRegion>> sides;
    sides.reserve(family.size());
    for (const Cycle& c : family) sides.push_back(cycle_sides(g, c));

    std::map<std::vector<int>, int> by_edges;
    for (size_t i = 0; i < family.size(); ++i) by_edges[family[i].sorted_edges()] = static_cast<int>(i);

    FractionalSolution cur = x;
    const Rational total = cur.value();
    long long cap = 10ll * static_cast<long long>(family.size()) * family.size();

    for (long long step = 0;; ++step) {
        std::pair<int, int> first{-1, -1};
        long long crossings = count_crossings(cur, sides, &first);
        if (crossings == 0) break;
        CYCLEPACK_REQUIRE(step < cap, UncrossingStalled, "uncrossing step cap exceeded");

        bool accepted = false;
        for (auto [c1, c2] : {first, std::pair{first.second, first.first}}) {
            const Cycle& C1 = family[c1];
            const Cycle& C2 = family[c2];
            for (const SubPath& p2 : candidate_paths(C2, C1)) {
                if (p2.a == p2.b) continue;
                // P2 shares only its endpoints with C1, so no edges either.
                if (p2.edges.size() == 1 && C1.contains_edge(p2.edges[0])) continue;
                auto [arc1, arc2] = C1.arcs_between(p2.a, p2.b);
                for (const auto& p1 : {arc1, arc2}) {
                    // New cycle P1 + P2 must itself be in the family.
                    std::vector<int> joined = p1;
                    joined.insert(joined.end(), p2.edges.begin(), p2.edges.end());
                    std::vector<int> key = joined;
                    std::sort(key.begin(), key.end());
                    if (std::adjacent_find(key.begin(), key.end()) != key.end()) continue;
                    auto it = by_edges.find(key);
                    if (it == by_edges.end()) continue;
                    int cnew = it->second;

                    // Remainder (C1 - P1) + (C2 - P2) must contain a family cycle.
                    std::set<int> remainder(C1.edges().begin(), C1.edges().end());
                    for (int e : p1) remainder.erase(e);
                    for (int e : C2.edges()) remainder.insert(e);
                    for (int e : p2.edges) remainder.erase(e);
                    for (size_t cr = 0; cr < family.size(); ++cr) {
                        bool inside = true;
                        for (int e : family[cr].edges())
                            if (!remainder.count(e)) {
                                inside = false;
                                break;
                            }
                        if (!inside) continue;

                        Rational m = std::min(cur.weight(c1), cur.weight(c2));
                        FractionalSolution next = cur;
                        next.set(c1, next.weight(c1) - m);
                        next.set(c2, next.weight(c2) - m);
                        next.set(cnew, next.weight(cnew) + m);
                        next.set(static_cast<int>(cr), next.weight(static_cast<int>(cr)) + m);
                        if (!is_feasible(g, family, next)) continue;
                        if (count_crossings(next, sides) >= crossings) continue;
                        cur = std::move(next);
                        accepted = true;
                        break;
                    }
                    if (accepted) break;
                }
                if (accepted) break;
            }
            if (accepted) break;
        }
        CYCLEPACK_REQUIRE(accepted, UncrossingStalled,
                          "no admissible replacement for a crossing support pair");
    }

    CYCLEPACK_REQUIRE(cur.value() == total, Internal, "uncrossing changed the value");
    return cur;
}

} // namespace cyclepack
