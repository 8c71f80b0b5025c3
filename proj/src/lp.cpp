#include "cyclepack/lp.hpp"

#include <algorithm>

namespace cyclepack {

namespace {

// Constraint rows: one per vertex (or edge) that lies on at least one cycle.
std::vector<std::vector<int>> constraint_members(const EmbeddedGraph& g,
                                                 const std::vector<Cycle>& cycles, Mode mode) {
    int ground = mode == Mode::Vertex ? g.num_vertices() : g.num_edges();
    std::vector<std::vector<int>> rows(ground);
    for (size_t c = 0; c < cycles.size(); ++c) {
        if (mode == Mode::Vertex)
            for (int v : cycles[c].vertices()) rows[v].push_back(static_cast<int>(c));
        else
            for (int e : cycles[c].edges()) rows[e].push_back(static_cast<int>(c));
    }
    std::vector<std::vector<int>> used;
    for (auto& r : rows)
        if (!r.empty()) used.push_back(std::move(r));
    return used;
}

} // namespace

bool is_feasible(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                 const FractionalSolution& x) {
    for (const auto& [c, w] : x.weights)
        if (w < 0 || w > 1 || c < 0 || c >= static_cast<int>(cycles.size())) return false;
    for (const auto& row : constraint_members(g, cycles, x.mode)) {
        Rational load = 0;
        for (int c : row) load += x.weight(c);
        if (load > 1) return false;
    }
    return true;
}

FractionalSolution solve_packing_lp(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                                    Mode mode) {
    FractionalSolution out;
    out.mode = mode;
    if (cycles.empty()) return out;

    auto rows = constraint_members(g, cycles, mode);
    int n = static_cast<int>(cycles.size());
    int m = static_cast<int>(rows.size());
    CYCLEPACK_REQUIRE(m > 0, Internal, "cycles but no constraints");

    // Tableau: columns 0..n-1 structurals, n..n+m-1 slacks, last column rhs.
    // Row m is the objective written as z - sum(x) = 0.
    std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(n + m + 1, Rational(0)));
    for (int i = 0; i < m; ++i) {
        for (int c : rows[i]) T[i][c] = 1;
        T[i][n + i] = 1;
        T[i][n + m] = 1;
    }
    for (int j = 0; j < n; ++j) T[m][j] = -1;

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    while (true) {
        // Bland: entering column = smallest index with negative reduced cost.
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (T[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter == -1) break;

        // Ratio test; ties by smallest basis variable index (Bland).
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][n + m] / T[i][enter];
            if (leave == -1 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        CYCLEPACK_REQUIRE(leave != -1, Internal, "packing LP cannot be unbounded");

        // Pivot on (leave, enter).
        Rational piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rational f = T[i][enter];
            for (int j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    for (int i = 0; i < m; ++i)
        if (basis[i] < n && T[i][n + m] != 0) out.set(basis[i], T[i][n + m]);
    CYCLEPACK_REQUIRE(is_feasible(g, cycles, out), Internal, "simplex produced infeasible point");
    return out;
}

} // namespace cyclepack
