#pragma once

#include <memory>
#include <string>

#include "cyclepack/enumerate.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/lp.hpp"

namespace cyclepack {

// Interchange model. Vertex labels are arbitrary distinct integers; edge ids
// are positions in the edge array; rotations list edge ids per vertex label.
struct Instance {
    std::vector<int> vertex_labels;
    std::vector<std::pair<int, int>> edges; // endpoints as labels
    std::map<int, std::vector<int>> rotations;
    FamilyKind kind = FamilyKind::Explicit;
    std::vector<std::vector<int>> explicit_cycles;
    std::vector<int> demand;
    int length_cap = 12;
    Mode mode = Mode::Vertex;
    uint64_t seed = 0;
    std::string name;

    std::string to_json() const;
    static Instance from_json(const std::string& text);

    static Instance from_built(const BuiltInstance& b, Mode mode, uint64_t seed);
};

// A connected piece of an instance, materialized: embedded graph plus the
// resolved cycle family. Cycle ids refer to the whole instance's family
// numbering so reports stay stable across pieces.
struct MaterializedPiece {
    std::shared_ptr<EmbeddedGraph> graph;
    std::vector<Cycle> cycles;
    std::vector<int> family_ids;  // per local cycle
    std::vector<int> vertex_ids;  // local -> instance vertex index
    std::vector<int> edge_ids;    // local -> instance edge index
};

struct Materialized {
    std::vector<MaterializedPiece> pieces;
    int family_size = 0;
    std::vector<std::vector<int>> family_edge_lists; // by family id, instance edge ids
};

// Splits the instance graph into connected components (dropping isolated
// vertices), resolves the family selector per component, numbers the family
// deterministically, and budget-checks enumeration.
Materialized materialize(const Instance& inst, int max_cycles = 5000);

} // namespace cyclepack
