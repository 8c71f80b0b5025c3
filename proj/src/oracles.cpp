#include "cyclepack/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cyclepack {

namespace {

bool conflict(const Cycle& a, const Cycle& b, Mode mode) {
    if (mode == Mode::Vertex) {
        for (int v : a.vertices())
            if (b.contains_vertex(v)) return true;
    } else {
        for (int e : a.sorted_edges())
            if (b.contains_edge(e)) return true;
    }
    return false;
}

} // namespace

PackingOracle brute_max_packing(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                                Mode mode) {
    (void)g;
    int n = static_cast<int>(cycles.size());
    CYCLEPACK_REQUIRE(n <= 20, BudgetExceeded, "packing oracle budget: at most 20 cycles");
    std::vector<uint32_t> conf(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (conflict(cycles[i], cycles[j], mode)) {
                conf[i] |= 1u << j;
                conf[j] |= 1u << i;
            }
    PackingOracle out;
    std::vector<int> cur;
    std::function<void(int, uint32_t)> go = [&](int i, uint32_t blocked) {
        if (static_cast<int>(cur.size()) + (n - i) <= out.nu) return;
        if (i == n) {
            if (static_cast<int>(cur.size()) > out.nu) {
                out.nu = static_cast<int>(cur.size());
                out.witness = cur;
            }
            return;
        }
        if (!(blocked & (1u << i))) {
            cur.push_back(i);
            go(i + 1, blocked | conf[i]);
            cur.pop_back();
        }
        go(i + 1, blocked);
    };
    go(0, 0);
    return out;
}

TransversalOracle brute_min_transversal(const EmbeddedGraph& g,
                                        const std::vector<Cycle>& cycles, Mode mode) {
    int n = static_cast<int>(cycles.size());
    CYCLEPACK_REQUIRE(n <= 20, BudgetExceeded, "transversal oracle budget: at most 20 cycles");
    TransversalOracle out;
    if (n == 0) return out;

    // Elements of each cycle in the chosen mode.
    std::vector<std::vector<int>> elems(n);
    for (int i = 0; i < n; ++i)
        elems[i] = mode == Mode::Vertex ? cycles[i].vertices() : cycles[i].sorted_edges();
    (void)g;

    std::vector<int> best;
    std::vector<int> cur;
    std::vector<char> hit(n, 0);
    std::function<void()> go = [&]() {
        if (!best.empty() && cur.size() >= best.size()) return;
        int open = -1;
        for (int i = 0; i < n; ++i)
            if (!hit[i]) {
                open = i;
                break;
            }
        if (open == -1) {
            best = cur;
            return;
        }
        for (int x : elems[open]) {
            std::vector<int> flipped;
            for (int i = 0; i < n; ++i)
                if (!hit[i] &&
                    std::find(elems[i].begin(), elems[i].end(), x) != elems[i].end()) {
                    hit[i] = 1;
                    flipped.push_back(i);
                }
            cur.push_back(x);
            go();
            cur.pop_back();
            for (int i : flipped) hit[i] = 0;
        }
    };
    go();
    out.tau = static_cast<int>(best.size());
    std::sort(best.begin(), best.end());
    out.witness = best;
    return out;
}

} // namespace cyclepack
