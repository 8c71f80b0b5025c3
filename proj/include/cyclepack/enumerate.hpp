#pragma once

#include <vector>

#include "cyclepack/cycle.hpp"

namespace cyclepack {

enum class FamilyKind { Explicit, All, Odd, DCycles };

const char* family_kind_name(FamilyKind k);
FamilyKind parse_family_kind(const std::string& s);

// Exhaustive enumeration of the simple cycles matching the requested kind: all of
// them, the odd ones, or the cycles containing exactly one demand edge.
// Deterministic order: by length, then by sorted edge list. Throws
// BudgetExceeded past max_cycles.
std::vector<Cycle> enumerate_family(const EmbeddedGraph& g, FamilyKind kind,
                                    const std::vector<int>& demand, int length_cap,
                                    int max_cycles);

} // namespace cyclepack
