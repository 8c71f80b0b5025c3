#pragma once

#include <map>
#include <vector>

#include "cyclepack/cycle.hpp"
#include "cyclepack/rational.hpp"

namespace cyclepack {

enum class Mode { Vertex, Edge };

inline const char* mode_name(Mode m) { return m == Mode::Vertex ? "vertex" : "edge"; }

// Feasible point of the packing LP over an explicit cycle list: weight per
// cycle index, all in [0,1], with per-vertex (or per-edge) load at most 1.
struct FractionalSolution {
    Mode mode = Mode::Vertex;
    std::map<int, Rational> weights; // support only; absent = 0

    Rational value() const {
        Rational s = 0;
        for (const auto& [_, w] : weights) s += w;
        return s;
    }
    Rational weight(int c) const {
        auto it = weights.find(c);
        return it == weights.end() ? Rational(0) : it->second;
    }
    std::vector<int> support() const {
        std::vector<int> s;
        for (const auto& [c, w] : weights)
            if (w > 0) s.push_back(c);
        return s;
    }
    void set(int c, const Rational& w) {
        if (w == 0)
            weights.erase(c);
        else
            weights[c] = w;
    }
};

// Exact feasibility: all weights in [0,1] and every constraint load <= 1.
bool is_feasible(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                 const FractionalSolution& x);

// Optimal solution of the packing LP restricted to the given cycles, solved
// by exact rational primal simplex with Bland's anti-cycling rule. An empty
// family yields the zero solution.
FractionalSolution solve_packing_lp(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                                    Mode mode);

} // namespace cyclepack
