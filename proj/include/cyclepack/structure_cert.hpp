#pragma once

#include "cyclepack/incidence.hpp"

namespace cyclepack {

using VertexMultiset = std::map<int, int>; // vertex id -> multiplicity >= 1

inline long long vertex_multiset_size(const VertexMultiset& m) {
    long long s = 0;
    for (const auto& [_, k] : m) s += k;
    return s;
}

// Direct construction for families in which every cycle is one-sided and
// |L1| >= 3: all non-crossing incidences, plus k-3 copies of crossing
// incidences at every vertex shared by k >= 4 cycles.
IncidenceMultiset build_base_mstar(const LaminarFamily& fam);

// Good and structured incidence multiset for any laminar family with at
// least two cycles, by induction over a minimal two-sided cycle. The result
// is validated by the independent checkers; a failure throws CheckerFailed.
IncidenceMultiset build_good_structured(const LaminarFamily& fam);

// One vertex per incidence (lowest id). For chain families (exactly two
// one-sided sides), shared vertices of the homotopic one-sided pair are
// appended so the counting certificate also covers neighbours without
// incidences. Requires a redundancy-free family.
VertexMultiset extract_mstar(const LaminarFamily& fam, const IncidenceMultiset& M);

struct CheckResult {
    bool ok = true;
    std::vector<std::string> violations;
    void flag(const std::string& msg) {
        ok = false;
        violations.push_back(msg);
    }
};

// Definition check: M contains every non-crossing incidence between
// one-sided cycles, and for each one-sided cycle C and v on C at least as
// many v-incidences as there are between C and its one-sided neighbours.
CheckResult check_structured(const LaminarFamily& fam, const IncidenceMultiset& M);

// |M| <= 3|L1| - 6 and every cycle is hit by at least |I1(C)| elements.
CheckResult check_good(const LaminarFamily& fam, const IncidenceMultiset& M);

// Counting certificate: |M*| <= 3|L1| and for every cycle C,
// |M* on V(C)| >= number of one-sided neighbours of C other than C.
bool check_certificate(const LaminarFamily& fam, const VertexMultiset& mstar);

// Cover construction: a vertex set on the cycles of F (one-sided) such that
// every family cycle meeting F contains one of them; size <= |F| + |L1|.
std::vector<int> cover_for_set(const LaminarFamily& fam, const std::vector<int>& F);

// Exhaustive minimum-cardinality certificate, as an oracle for small
// instances (|V| <= 15, |fam| <= 8).
VertexMultiset brute_min_mstar(const LaminarFamily& fam);

} // namespace cyclepack
