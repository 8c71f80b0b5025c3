#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cyclepack/builder.hpp"

namespace cyclepack {

struct BuiltInstance {
    std::shared_ptr<EmbeddedGraph> graph;
    std::vector<Cycle> family;
    std::vector<int> demand_edges; // nonempty for D-cycle instances
    std::string name;
};

// Deterministic splittable RNG: mt19937_64 is bit-exact across platforms; we
// avoid std distributions because their mappings are not.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        // splitmix64
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % n); }
    int in(int lo, int hi) { return lo + below(hi - lo + 1); } // inclusive
    bool chance(int num, int den) { return below(den) < num; }

  private:
    uint64_t state_;
};

// Theta graph: vertices {0,1}, three parallel edges, rotation (e0,e1,e2) at 0
// and (e2,e1,e0) at 1; family = all three 2-edge cycles.
BuiltInstance make_theta();

// K4 with a fixed planar rotation; family = explicit list of all 7 cycles.
BuiltInstance make_k4();

// Wheel W_n: hub + rim of n vertices; family = all cycles (enumerated later).
BuiltInstance make_wheel(int n);

// r x c grid with the coordinate rotation system; demand edges picked
// deterministically from the seed for D-cycle instances.
BuiltInstance make_grid(int rows, int cols, int num_demand, uint64_t seed);

// The six-cycle nesting used by the structured-transform acceptance check:
// cycles a..f (indices 0..5), one-sided {c,d,f}, redundant {a,b,e}.
BuiltInstance make_six_nesting();

// Seven-cycle configuration exercising incidences: an equator cycle c* (index
// 0) touching cycles c1..c6 at two shared vertices v and w; c* has one
// non-crossing incidence to each of c1..c5 and two incidences to c6.
struct EquatorConfig {
    BuiltInstance inst;
    int v, w;                 // the two shared vertices
    int cstar, c1, c2, c3, c4, c5, c6; // family indices
};
EquatorConfig make_equator();

// Flower: a base ring plus `petals` petal cycles all through one ring vertex.
BuiltInstance make_flower(int petals);

// Chain: `depth` nested cycles, consecutive ones sharing a vertex.
BuiltInstance make_chain(int depth);

// Seeded random laminar family via face insertion. Profile knobs: target
// cycle count and rough shape of the nesting.
struct NestedProfile {
    int cycles = 8;
    int max_anchors = 2;  // 0..3 anchors per inserted cycle
    int max_fresh = 2;    // fresh vertices per arc
    int floating_pct = 25; // chance a cycle is vertex-disjoint from the rest
};
BuiltInstance gen_nested(const NestedProfile& profile, uint64_t seed);

} // namespace cyclepack
