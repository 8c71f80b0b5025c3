#pragma once

#include <optional>

#include "cyclepack/laminar.hpp"
#include "cyclepack/lp.hpp"
#include "cyclepack/sqrt130.hpp"

namespace cyclepack {

// Weighted neighbourhood mass x(N(c)) per cycle, indexed like the family.
// Serial reference and OpenMP kernel produce identical exact values.
std::vector<Rational> neighbour_masses_serial(const LaminarFamily& fam,
                                              const std::vector<Rational>& w);
std::vector<Rational> neighbour_masses_parallel(const LaminarFamily& fam,
                                                const std::vector<Rational>& w);

// Distinct one-sided weight levels, ascending, with exact r_alpha counts.
struct ThresholdProfile {
    std::vector<Rational> levels;
    int n1 = 0;
    std::vector<int> above; // above[i] = #one-sided cycles with weight > levels[i]

    Rational r_at(const Rational& alpha) const; // |L1^{>alpha}| / |L1|
    long long count_above(const Rational& alpha) const;
};
ThresholdProfile threshold_profile(const LaminarFamily& fam, const std::vector<Rational>& w);

// Exact piecewise-constant integral of r_alpha over [0,1].
Rational profile_integral(const ThresholdProfile& p);

struct CandidateSet {
    enum class Rule { Single, Threshold, FourColor };
    Rule rule;
    std::optional<Rational> alpha;
    std::vector<int> cycles; // local indices into the family, pairwise disjoint
    Rational removed_mass;   // x of the union of their neighbourhoods
    Rational ratio;          // removed_mass / |cycles|
};

const char* rule_name(CandidateSet::Rule r);

// One-cycle rule: the one-sided cycle minimizing x(N(C)).
CandidateSet candidate_single(const LaminarFamily& fam, const std::vector<Rational>& w);

// Level rule for alpha >= 1/2: all one-sided cycles heavier than alpha.
CandidateSet candidate_threshold(const LaminarFamily& fam, const std::vector<Rational>& w,
                                 const Rational& alpha);

// Conflict graph on the level set L1^{>alpha} (vertex-sharing cycles are
// adjacent); throws FeasibilityViolation if some graph vertex lies on four
// of them. Returns the level members plus adjacency lists.
struct ConflictGraph {
    std::vector<int> members; // local cycle indices
    std::vector<std::vector<int>> adj;
};
ConflictGraph conflict_graph(const LaminarFamily& fam, const std::vector<Rational>& w,
                             const Rational& alpha);

// Proper coloring with at most four colors by exact backtracking in vertex
// order; planarity of the input guarantees success.
std::vector<int> four_color(const std::vector<std::vector<int>>& adj);

// Stable-set rule for 1/4 <= alpha < 1/2: heavy cycles plus the largest
// color class of the rest.
CandidateSet candidate_fourcolor(const LaminarFamily& fam, const std::vector<Rational>& w,
                                 const Rational& alpha);

// Best of the three rules over all relevant levels; the winning ratio is
// checked against beta exactly.
CandidateSet choose_fstar(const LaminarFamily& fam, const std::vector<Rational>& w);

struct TraceEntry {
    int iteration;
    int component;
    CandidateSet::Rule rule;
    std::optional<Rational> alpha;
    std::vector<int> fstar; // global cycle ids
    Rational removed_mass;
    Rational ratio;
    Rational mass_before;
    Rational mass_after;
};

struct RoundingResult {
    std::vector<int> packing; // global cycle ids
    std::vector<TraceEntry> trace;
    Rational initial_value;
    bool guarantee_ok = false;
};

// Greedy rounding of a feasible solution with laminar support (vertex mode):
// restructure, split into components, take the chosen candidate set per
// component, zero its neighbourhood, repeat until empty.
RoundingResult round_solution(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                              const FractionalSolution& x0);

} // namespace cyclepack
