#pragma once

#include "cyclepack/instance.hpp"

namespace cyclepack {

struct CorpusEntry {
    Instance instance;
    bool micro = false; // small enough for the brute-force oracles
};

// Fixed seeded corpus used by the acceptance suite and the bench command:
// scripted configurations, classic graphs with enumerated families, and
// randomized nested families in both modes. Deterministic.
std::vector<CorpusEntry> build_corpus();

} // namespace cyclepack
