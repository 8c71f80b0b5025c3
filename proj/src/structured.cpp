#include "cyclepack/structured.hpp"

#include <algorithm>

namespace cyclepack {

bool is_redundant(const LaminarFamily& component, int cycle) {
    if (component.one_sided(cycle)) return false;
    for (int j : component.one_sided_cycles())
        if (component.homotopic(cycle, j)) return true;
    return false;
}

namespace {

struct ShiftPick {
    int cycle_global;   // redundant cycle
    int side;           // witness side index
    int faces;          // |witness face set|, for the tie-break
    Bitset face_set;
};

// Witness side of a redundant cycle: a side containing exactly one one-sided
// side. Among all candidates in a component we take the smallest face set
// (then lexicographic, then cycle id); a minimum-size witness is inclusion-
// minimal, so it contains exactly one other support cycle.
std::optional<ShiftPick> pick_shift(const LaminarFamily& comp, const std::vector<int>& to_global) {
    std::optional<ShiftPick> best;
    for (int i = 0; i < comp.size(); ++i) {
        if (!is_redundant(comp, i)) continue;
        for (int s = 0; s < 2; ++s) {
            if (comp.oss_in_side(i, s).size() != 1) continue;
            const Bitset& faces =
                s == 0 ? comp.sides(i).first.faces : comp.sides(i).second.faces;
            ShiftPick cand{to_global[i], s, faces.count(), faces};
            auto less = [](const ShiftPick& a, const ShiftPick& b) {
                if (a.faces != b.faces) return a.faces < b.faces;
                if (a.face_set != b.face_set) return a.face_set.lex_less(b.face_set);
                if (a.cycle_global != b.cycle_global) return a.cycle_global < b.cycle_global;
                return a.side < b.side;
            };
            if (!best || less(cand, *best)) best = cand;
        }
    }
    return best;
}

} // namespace

FractionalSolution make_structured(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                                   const FractionalSolution& x) {
    CYCLEPACK_REQUIRE(x.mode == Mode::Vertex, PreconditionViolated,
                      "structured transform runs in vertex mode");
    FractionalSolution cur = x;
    const Rational total = cur.value();

    // Each accepted shift removes one cycle from the support.
    for (int guard = 0; guard <= static_cast<int>(cycles.size()); ++guard) {
        std::vector<int> support = cur.support();
        if (support.empty()) break;
        std::vector<Cycle> sup_cycles;
        for (int c : support) sup_cycles.push_back(cycles[c]);
        LaminarFamily fam(g, sup_cycles);

        bool shifted = false;
        for (int comp = 0; comp < fam.num_components() && !shifted; ++comp) {
            auto [cf, local_map] = fam.component_family(comp);
            std::vector<int> to_global;
            for (int li : local_map) to_global.push_back(support[li]);
            auto pick = pick_shift(cf, to_global);
            if (!pick) continue;

            // Locate the unique support cycle inside the witness side.
            int local = static_cast<int>(std::find(to_global.begin(), to_global.end(),
                                                   pick->cycle_global) -
                                         to_global.begin());
            std::vector<int> inside = cf.cycles_inside_side(local, pick->side);
            CYCLEPACK_REQUIRE(inside.size() == 1, StructureInvariantViolated,
                              "witness side must contain exactly one other support cycle");
            int from = pick->cycle_global;
            int to = to_global[inside[0]];
            Rational wf = cur.weight(from), wt = cur.weight(to);
            CYCLEPACK_REQUIRE(wf + wt <= 1, StructureInvariantViolated,
                              "shifted weight would exceed one");
            cur.set(to, wf + wt);
            cur.set(from, 0);
            shifted = true;
        }
        if (!shifted) break;
    }

    CYCLEPACK_REQUIRE(cur.value() == total, StructureInvariantViolated,
                      "structured transform changed the total value");
    CYCLEPACK_REQUIRE(is_feasible(g, cycles, cur), StructureInvariantViolated,
                      "structured transform broke feasibility");
    return cur;
}

} // namespace cyclepack
