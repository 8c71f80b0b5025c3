#include "cyclepack/instance.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <json.hpp>

namespace cyclepack {

using nlohmann::json;

std::string Instance::to_json() const {
    json g;
    g["vertices"] = vertex_labels;
    json es = json::array();
    for (auto [u, v] : edges) es.push_back(json::array({u, v}));
    g["edges"] = es;
    json rot = json::object();
    for (const auto& [v, r] : rotations) rot[std::to_string(v)] = r;
    g["rotations"] = rot;

    json fam;
    fam["kind"] = family_kind_name(kind);
    if (kind == FamilyKind::Explicit) fam["cycles"] = explicit_cycles;
    if (kind == FamilyKind::DCycles) {
        fam["demand"] = demand;
        fam["length_cap"] = length_cap;
    }
    if (kind == FamilyKind::All || kind == FamilyKind::Odd) fam["length_cap"] = length_cap;

    json out;
    out["graph"] = g;
    out["family"] = fam;
    out["mode"] = mode_name(mode);
    out["seed"] = seed;
    if (!name.empty()) out["name"] = name;
    return out.dump(2);
}

Instance Instance::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::BadInput, std::string("invalid JSON: ") + e.what());
    }
    Instance inst;
    try {
        const json& g = j.at("graph");
        inst.vertex_labels = g.at("vertices").get<std::vector<int>>();
        for (const json& e : g.at("edges"))
            inst.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        for (auto it = g.at("rotations").begin(); it != g.at("rotations").end(); ++it)
            inst.rotations[std::stoi(it.key())] = it.value().get<std::vector<int>>();
        const json& fam = j.at("family");
        inst.kind = parse_family_kind(fam.at("kind").get<std::string>());
        if (fam.contains("cycles"))
            inst.explicit_cycles = fam.at("cycles").get<std::vector<std::vector<int>>>();
        if (fam.contains("demand")) inst.demand = fam.at("demand").get<std::vector<int>>();
        if (fam.contains("length_cap")) inst.length_cap = fam.at("length_cap").get<int>();
        std::string m = j.at("mode").get<std::string>();
        if (m != "vertex" && m != "edge") fail(ErrorKind::BadInput, "mode must be vertex|edge");
        inst.mode = m == "vertex" ? Mode::Vertex : Mode::Edge;
        if (j.contains("seed")) inst.seed = j.at("seed").get<uint64_t>();
        if (j.contains("name")) inst.name = j.at("name").get<std::string>();
    } catch (const json::exception& e) {
        fail(ErrorKind::BadInput, std::string("instance schema: ") + e.what());
    }
    return inst;
}

Instance Instance::from_built(const BuiltInstance& b, Mode mode, uint64_t seed) {
    Instance inst;
    int n = b.graph->num_vertices();
    inst.vertex_labels.resize(n);
    std::iota(inst.vertex_labels.begin(), inst.vertex_labels.end(), 0);
    for (int e = 0; e < b.graph->num_edges(); ++e) inst.edges.push_back(b.graph->edge(e));
    for (int v = 0; v < n; ++v) inst.rotations[v] = b.graph->rotation(v);
    if (!b.family.empty()) {
        inst.kind = FamilyKind::Explicit;
        for (const Cycle& c : b.family) inst.explicit_cycles.push_back(c.edges());
    } else if (!b.demand_edges.empty()) {
        inst.kind = FamilyKind::DCycles;
        inst.demand = b.demand_edges;
    } else {
        inst.kind = FamilyKind::All;
    }
    inst.mode = mode;
    inst.seed = seed;
    inst.name = b.name;
    return inst;
}

Materialized materialize(const Instance& inst, int max_cycles) {
    int n = static_cast<int>(inst.vertex_labels.size());
    CYCLEPACK_REQUIRE(n > 0, BadInput, "instance has no vertices");
    std::map<int, int> vindex;
    for (int i = 0; i < n; ++i) {
        auto [_, fresh] = vindex.try_emplace(inst.vertex_labels[i], i);
        CYCLEPACK_REQUIRE(fresh, BadInput, "duplicate vertex label");
    }
    for (auto [u, v] : inst.edges)
        CYCLEPACK_REQUIRE(vindex.count(u) && vindex.count(v), BadInput,
                          "edge endpoint not a declared vertex");
    for (int d : inst.demand)
        CYCLEPACK_REQUIRE(d >= 0 && d < static_cast<int>(inst.edges.size()), BadInput,
                          "demand edge id out of range");

    // Connected components over vertices; isolated vertices are dropped.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : inst.edges) parent[find(vindex[u])] = find(vindex[v]);

    std::map<int, int> comp_of_root;
    std::vector<int> comp(n, -1);
    std::vector<char> has_edge(n, 0);
    for (auto [u, v] : inst.edges) has_edge[vindex[u]] = has_edge[vindex[v]] = 1;
    for (int i = 0; i < n; ++i) {
        if (!has_edge[i]) continue;
        int r = find(i);
        auto [it, _] = comp_of_root.try_emplace(r, static_cast<int>(comp_of_root.size()));
        comp[i] = it->second;
    }
    int ncomp = static_cast<int>(comp_of_root.size());
    CYCLEPACK_REQUIRE(ncomp > 0, BadInput, "instance graph has no edges");

    Materialized out;
    std::vector<int> vmap(n, -1), emap(inst.edges.size(), -1);
    std::vector<int> piece_of_edge(inst.edges.size(), -1);
    for (int k = 0; k < ncomp; ++k) {
        MaterializedPiece piece;
        for (int i = 0; i < n; ++i)
            if (comp[i] == k) {
                vmap[i] = static_cast<int>(piece.vertex_ids.size());
                piece.vertex_ids.push_back(i);
            }
        std::vector<std::pair<int, int>> edges;
        for (size_t e = 0; e < inst.edges.size(); ++e) {
            int u = vindex[inst.edges[e].first];
            if (comp[u] != k) continue;
            emap[e] = static_cast<int>(edges.size());
            piece_of_edge[e] = k;
            piece.edge_ids.push_back(static_cast<int>(e));
            edges.emplace_back(vmap[u], vmap[vindex[inst.edges[e].second]]);
        }
        std::vector<std::vector<int>> rot(piece.vertex_ids.size());
        for (int i : piece.vertex_ids) {
            auto it = inst.rotations.find(inst.vertex_labels[i]);
            CYCLEPACK_REQUIRE(it != inst.rotations.end(), MalformedRotation,
                              "missing rotation for a vertex");
            for (int e : it->second) {
                CYCLEPACK_REQUIRE(e >= 0 && e < static_cast<int>(inst.edges.size()), BadInput,
                                  "rotation references unknown edge");
                rot[vmap[i]].push_back(emap[e]);
            }
        }
        piece.graph = std::make_shared<EmbeddedGraph>(static_cast<int>(piece.vertex_ids.size()),
                                                      edges, rot);
        out.pieces.push_back(std::move(piece));
    }

    // Resolve the family: explicit lists are mapped into their piece;
    // enumerated kinds run per piece with a shared budget.
    auto add_cycle = [&](int piece_idx, std::vector<int> local_edges,
                         std::vector<int> instance_edges) {
        MaterializedPiece& p = out.pieces[piece_idx];
        p.cycles.emplace_back(*p.graph, std::move(local_edges));
        p.family_ids.push_back(out.family_size++);
        out.family_edge_lists.push_back(std::move(instance_edges));
    };

    if (inst.kind == FamilyKind::Explicit) {
        for (const auto& es : inst.explicit_cycles) {
            CYCLEPACK_REQUIRE(!es.empty(), BadInput, "empty cycle in family");
            int piece_idx = -1;
            std::vector<int> local;
            for (int e : es) {
                CYCLEPACK_REQUIRE(e >= 0 && e < static_cast<int>(inst.edges.size()), BadInput,
                                  "cycle references unknown edge");
                if (piece_idx == -1) piece_idx = piece_of_edge[e];
                CYCLEPACK_REQUIRE(piece_of_edge[e] == piece_idx, BadInput,
                                  "cycle spans multiple components");
                local.push_back(emap[e]);
            }
            add_cycle(piece_idx, local, es);
        }
    } else {
        int budget = max_cycles;
        for (size_t k = 0; k < out.pieces.size(); ++k) {
            MaterializedPiece& p = out.pieces[k];
            std::vector<int> local_demand;
            for (int d : inst.demand)
                if (emap[d] >= 0 &&
                    std::find(p.edge_ids.begin(), p.edge_ids.end(), d) != p.edge_ids.end())
                    local_demand.push_back(emap[d]);
            auto cycles = enumerate_family(*p.graph, inst.kind, local_demand, inst.length_cap,
                                           budget);
            budget -= static_cast<int>(cycles.size());
            for (const Cycle& c : cycles) {
                std::vector<int> instance_edges;
                for (int e : c.edges()) instance_edges.push_back(p.edge_ids[e]);
                add_cycle(static_cast<int>(k), c.edges(), instance_edges);
            }
        }
    }
    return out;
}

} // namespace cyclepack
