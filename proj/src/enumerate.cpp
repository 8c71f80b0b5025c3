#include "cyclepack/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace cyclepack {

const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Explicit: return "explicit";
        case FamilyKind::All: return "all";
        case FamilyKind::Odd: return "odd";
        case FamilyKind::DCycles: return "dcycles";
    }
    return "?";
}

FamilyKind parse_family_kind(const std::string& s) {
    if (s == "explicit") return FamilyKind::Explicit;
    if (s == "all") return FamilyKind::All;
    if (s == "odd") return FamilyKind::Odd;
    if (s == "dcycles") return FamilyKind::DCycles;
    fail(ErrorKind::BadInput, "unknown family kind: " + s);
}

std::vector<Cycle> enumerate_family(const EmbeddedGraph& g, FamilyKind kind,
                                    const std::vector<int>& demand, int length_cap,
                                    int max_cycles) {
    CYCLEPACK_REQUIRE(kind != FamilyKind::Explicit, BadInput,
                      "explicit families are not enumerated");
    std::set<int> dset(demand.begin(), demand.end());
    std::vector<std::vector<int>> found;

    // Cycles grouped by their minimum edge id e0: paths from one endpoint of
    // e0 back to the other using only larger edge ids and fresh vertices.
    std::vector<int> path_edges;
    std::vector<char> vertex_used(g.num_vertices(), 0);

    std::function<void(int, int, int, int)> extend = [&](int e0, int cur, int target,
                                                         int demand_count) {
        if (static_cast<int>(found.size()) > max_cycles) return;
        for (int e = 0; e < g.num_edges(); ++e) {
            if (e <= e0 || !g.vertex_on_edge(e, cur)) continue;
            if (std::find(path_edges.begin(), path_edges.end(), e) != path_edges.end()) continue;
            int nd = demand_count + (dset.count(e) ? 1 : 0);
            if (kind == FamilyKind::DCycles && nd > 1) continue;
            int nxt = g.other_endpoint(e, cur);
            if (nxt == target) {
                int len = static_cast<int>(path_edges.size()) + 2;
                bool take = len <= length_cap;
                if (kind == FamilyKind::Odd) take = take && (len % 2 == 1);
                if (kind == FamilyKind::DCycles) take = take && nd == 1;
                if (take) {
                    std::vector<int> cyc = {e0};
                    cyc.insert(cyc.end(), path_edges.begin(), path_edges.end());
                    cyc.push_back(e);
                    found.push_back(cyc);
                }
                continue;
            }
            // Recursing needs room for at least one closing edge beyond e.
            if (static_cast<int>(path_edges.size()) + 3 > length_cap) continue;
            if (vertex_used[nxt]) continue;
            vertex_used[nxt] = 1;
            path_edges.push_back(e);
            extend(e0, nxt, target, nd);
            path_edges.pop_back();
            vertex_used[nxt] = 0;
        }
    };

    for (int e0 = 0; e0 < g.num_edges(); ++e0) {
        auto [u, v] = g.edge(e0);
        int d0 = dset.count(e0) ? 1 : 0;
        if (kind == FamilyKind::DCycles && demand.empty()) break;
        vertex_used[u] = vertex_used[v] = 1;
        extend(e0, v, u, d0);
        vertex_used[u] = vertex_used[v] = 0;
    }
    CYCLEPACK_REQUIRE(static_cast<int>(found.size()) <= max_cycles, BudgetExceeded,
                      "cycle enumeration exceeded the budget");

    std::sort(found.begin(), found.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        std::vector<int> sa = a, sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return sa < sb;
    });
    std::vector<Cycle> out;
    out.reserve(found.size());
    for (auto& es : found) out.emplace_back(g, std::move(es));
    return out;
}

} // namespace cyclepack
