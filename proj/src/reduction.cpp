#include "cyclepack/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace cyclepack {

ReductionMap edge_to_vertex(const LaminarFamily& fam) {
    const EmbeddedGraph& g = fam.graph();
    int ne = g.num_edges();
    int n = fam.size();
    ReductionMap out;
    out.source_edges = ne;

    // Strand order along each source edge: cycles through it, sorted by
    // inclusion of the side containing the reference face of the edge. The
    // order is total for a laminar family.
    std::vector<std::vector<int>> strands(ne);
    for (int c = 0; c < n; ++c)
        for (int e : fam.cycle(c).sorted_edges()) strands[e].push_back(c);
    for (int e = 0; e < ne; ++e) {
        if (strands[e].empty()) {
            out.isolated.push_back(e);
            continue;
        }
        int fa = g.face_of(e, g.edge(e).first);
        auto fa_side_count = [&](int c) {
            const auto& sd = fam.sides(c);
            return sd.first.faces.test(fa) ? sd.first.faces.count() : sd.second.faces.count();
        };
        std::sort(strands[e].begin(), strands[e].end(),
                  [&](int x, int y) { return fa_side_count(x) < fa_side_count(y); });
        for (size_t i = 1; i < strands[e].size(); ++i)
            CYCLEPACK_REQUIRE(fa_side_count(strands[e][i - 1]) < fa_side_count(strands[e][i]),
                              Internal, "strand order along an edge must be strict");
    }

    // Arcs: one per length-2 subpath of each cycle. arc_at[e][side] lists the
    // (cycle, arc id) pairs attached to node e via the given endpoint.
    struct Arc {
        int cycle;
        int node_a, node_b; // source edge ids
        int via;            // shared source vertex
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> arcs_of_cycle(n);
    for (int c = 0; c < n; ++c) {
        const Cycle& C = fam.cycle(c);
        int k = C.length();
        for (int i = 0; i < k; ++i) {
            int e_prev = C.edges()[(i + k - 1) % k];
            int e_cur = C.edges()[i];
            int via = C.vertices()[i];
            arcs_of_cycle[c].push_back(static_cast<int>(arcs.size()));
            arcs.push_back(Arc{c, e_prev, e_cur, via});
        }
        out.image_edges += k;
    }

    // Rotation at each node: arcs attached via the first endpoint of the
    // source edge in strand order, then arcs via the second endpoint in
    // reverse strand order (strands run parallel through the node).
    std::vector<std::vector<int>> node_rot(ne);
    for (int e = 0; e < ne; ++e) {
        if (strands[e].empty()) continue;
        auto arc_at = [&](int c, int endpoint) {
            for (int a : arcs_of_cycle[c])
                if ((arcs[a].node_a == e || arcs[a].node_b == e) && arcs[a].via == endpoint)
                    return a;
            fail(ErrorKind::Internal, "cycle strand missing an arc at the node");
        };
        int u = g.edge(e).first, v = g.edge(e).second;
        for (int c : strands[e]) node_rot[e].push_back(arc_at(c, u));
        for (auto it = strands[e].rbegin(); it != strands[e].rend(); ++it)
            node_rot[e].push_back(arc_at(*it, v));
    }

    // Split into connected components over the arc structure.
    std::vector<int> parent(ne);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Arc& a : arcs) parent[find(a.node_a)] = find(a.node_b);
    std::map<int, int> comp_of_root;
    std::vector<int> comp_of_node(ne, -1);
    for (int e = 0; e < ne; ++e) {
        if (strands[e].empty()) continue;
        int r = find(e);
        auto [it, _] = comp_of_root.try_emplace(r, static_cast<int>(comp_of_root.size()));
        comp_of_node[e] = it->second;
    }

    int ncomp = static_cast<int>(comp_of_root.size());
    std::vector<std::vector<int>> comp_nodes(ncomp);
    for (int e = 0; e < ne; ++e)
        if (comp_of_node[e] >= 0) comp_nodes[comp_of_node[e]].push_back(e);

    for (int k = 0; k < ncomp; ++k) {
        ReductionComponent rc;
        rc.node_to_edge = comp_nodes[k];
        std::vector<int> local_node(ne, -1);
        for (size_t i = 0; i < comp_nodes[k].size(); ++i) local_node[comp_nodes[k][i]] = static_cast<int>(i);

        std::vector<std::pair<int, int>> ledges;
        std::vector<int> arc_local(arcs.size(), -1);
        for (size_t a = 0; a < arcs.size(); ++a) {
            if (comp_of_node[arcs[a].node_a] != k) continue;
            arc_local[a] = static_cast<int>(ledges.size());
            ledges.emplace_back(local_node[arcs[a].node_a], local_node[arcs[a].node_b]);
        }
        std::vector<std::vector<int>> lrot(comp_nodes[k].size());
        for (size_t i = 0; i < comp_nodes[k].size(); ++i)
            for (int a : node_rot[comp_nodes[k][i]]) lrot[i].push_back(arc_local[a]);

        rc.graph = std::make_shared<EmbeddedGraph>(static_cast<int>(comp_nodes[k].size()),
                                                   ledges, lrot);
        for (int c = 0; c < n; ++c) {
            if (arcs_of_cycle[c].empty()) continue;
            if (comp_of_node[arcs[arcs_of_cycle[c].front()].node_a] != k) continue;
            std::vector<int> seq;
            for (int a : arcs_of_cycle[c]) seq.push_back(arc_local[a]);
            rc.cycles.emplace_back(*rc.graph, seq);
            rc.cycle_to_fam.push_back(c);
        }

        // The images must again be a laminar family of pairwise edge-disjoint
        // cycles on a sphere embedding (Euler is enforced by the
        // EmbeddedGraph constructor above).
        auto lam = is_laminar(*rc.graph, rc.cycles);
        CYCLEPACK_REQUIRE(lam.laminar, Internal, "reduction image family is not laminar");
        out.components.push_back(std::move(rc));
    }

    // Disjointness transfer: images share a node iff the originals share an
    // edge; since V(f(C)) is exactly E(C), verify literally on all pairs.
    for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = c1 + 1; c2 < n; ++c2) {
            bool share_edge = false;
            for (int e : fam.cycle(c1).sorted_edges())
                if (fam.cycle(c2).contains_edge(e)) share_edge = true;
            bool images_share = false;
            for (const auto& rc : out.components) {
                int i1 = -1, i2 = -1;
                for (size_t i = 0; i < rc.cycle_to_fam.size(); ++i) {
                    if (rc.cycle_to_fam[i] == c1) i1 = static_cast<int>(i);
                    if (rc.cycle_to_fam[i] == c2) i2 = static_cast<int>(i);
                }
                if (i1 >= 0 && i2 >= 0)
                    for (int v : rc.cycles[i1].vertices())
                        if (rc.cycles[i2].contains_vertex(v)) images_share = true;
            }
            CYCLEPACK_REQUIRE(share_edge == images_share, Internal,
                              "reduction broke the disjointness equivalence");
        }
    return out;
}

std::vector<int> lift_packing(const ReductionMap& map,
                              const std::vector<std::pair<int, int>>& picked) {
    std::vector<int> out;
    for (auto [comp, local] : picked) {
        CYCLEPACK_REQUIRE(comp >= 0 && comp < static_cast<int>(map.components.size()) &&
                              local >= 0 &&
                              local < static_cast<int>(map.components[comp].cycles.size()),
                          UnknownCycle, "picked cycle is not an image cycle");
        out.push_back(map.components[comp].cycle_to_fam[local]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FractionalSolution> push_solution(const ReductionMap& map,
                                              const FractionalSolution& x) {
    std::vector<FractionalSolution> out;
    for (const auto& rc : map.components) {
        FractionalSolution y;
        y.mode = Mode::Vertex;
        for (size_t i = 0; i < rc.cycles.size(); ++i) {
            Rational w = x.weight(rc.cycle_to_fam[i]);
            if (w != 0) y.set(static_cast<int>(i), w);
        }
        out.push_back(std::move(y));
    }
    return out;
}

} // namespace cyclepack
