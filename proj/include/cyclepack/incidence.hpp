#pragma once

#include <map>

#include "cyclepack/laminar.hpp"

namespace cyclepack {

// Equivalence class of neighbour pairs between two non-homotopic cycles:
// the unordered cycle pair plus the class's vertex set. `crossing` is a
// derived flag and not part of the identity.
struct Incidence {
    std::pair<int, int> cycles;  // indices, first < second
    std::vector<int> vertices;   // sorted
    bool crossing = false;

    bool operator<(const Incidence& o) const {
        if (cycles != o.cycles) return cycles < o.cycles;
        return vertices < o.vertices;
    }
    bool operator==(const Incidence& o) const {
        return cycles == o.cycles && vertices == o.vertices;
    }
    bool hits(const Cycle& c) const {
        for (int v : vertices)
            if (!c.contains_vertex(v)) return false;
        return true;
    }
};

// Multiset of incidences; goodness and structuredness are checked
// properties, not invariants.
using IncidenceMultiset = std::map<Incidence, int>;

inline long long multiset_size(const IncidenceMultiset& m) {
    long long s = 0;
    for (const auto& [_, k] : m) s += k;
    return s;
}

// All incidences of the family (over non-homotopic vertex-sharing pairs),
// sorted, with crossing flags filled in.
std::vector<Incidence> compute_incidences(const LaminarFamily& fam);

// Incidences between one specific non-homotopic pair.
std::vector<Incidence> incidences_between(const LaminarFamily& fam, int a, int b);

// Singleton-vertex incidence interleaved by two further cycles at its vertex.
bool is_crossing(const LaminarFamily& fam, const Incidence& I);

// Sub-incidences of I with the target sides fixed: incidences I' between a
// cycle with a side inside S_C and a cycle with a side inside S_N, with
// V(I') inside V(I); filtered to the minimal ones under the nesting order.
std::vector<Incidence> sub_incidences(const LaminarFamily& fam, const Incidence& I,
                                      const Bitset& S_C, const Bitset& S_N);

} // namespace cyclepack
