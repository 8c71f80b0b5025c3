#include "cyclepack/corpus.hpp"

namespace cyclepack {

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    auto add = [&](const BuiltInstance& b, Mode mode, uint64_t seed, bool micro) {
        out.push_back({Instance::from_built(b, mode, seed), micro});
    };

    for (Mode mode : {Mode::Vertex, Mode::Edge}) {
        add(make_theta(), mode, 0, true);
        add(make_k4(), mode, 0, true);
        add(make_six_nesting(), mode, 0, true);
        add(make_equator().inst, mode, 0, true);
        add(make_flower(3), mode, 0, true);
        add(make_flower(4), mode, 0, true);
        add(make_flower(6), mode, 0, false);
        add(make_chain(2), mode, 0, true);
        add(make_chain(3), mode, 0, true);
        add(make_chain(5), mode, 0, false);

        // Enumerated families on classic graphs.
        {
            BuiltInstance w = make_wheel(4);
            Instance i = Instance::from_built(w, mode, 0);
            i.kind = FamilyKind::All;
            i.length_cap = 5;
            out.push_back({i, true});
        }
        {
            BuiltInstance w = make_wheel(5);
            Instance i = Instance::from_built(w, mode, 0);
            i.kind = FamilyKind::Odd;
            i.length_cap = 5;
            out.push_back({i, true});
        }
        {
            Instance i = Instance::from_built(make_theta(), mode, 0);
            i.kind = FamilyKind::DCycles;
            i.demand = {1};
            i.explicit_cycles.clear();
            out.push_back({i, true});
        }
        // Grid D-cycle instances.
        for (uint64_t s : {1, 2, 3}) {
            BuiltInstance grid = make_grid(2, 3, 2, s);
            Instance i = Instance::from_built(grid, mode, s);
            i.length_cap = 8;
            out.push_back({i, true});
        }
        for (uint64_t s : {4, 5}) {
            BuiltInstance grid = make_grid(3, 3, 3, s);
            Instance i = Instance::from_built(grid, mode, s);
            i.length_cap = 8;
            out.push_back({i, false});
        }
    }

    // Randomized nested laminar families: the bulk of the corpus.
    NestedProfile small{6, 2, 2, 25};
    NestedProfile touchy{10, 3, 1, 10};
    NestedProfile deep{14, 2, 2, 20};
    NestedProfile wide{18, 3, 2, 30};
    for (uint64_t seed = 0; seed < 24; ++seed) {
        add(gen_nested(small, seed), Mode::Vertex, seed, true);
        add(gen_nested(small, seed + 100), Mode::Edge, seed + 100, true);
        add(gen_nested(touchy, seed + 200), Mode::Vertex, seed + 200, false);
        add(gen_nested(touchy, seed + 300), Mode::Edge, seed + 300, false);
        add(gen_nested(deep, seed + 400), Mode::Vertex, seed + 400, false);
        add(gen_nested(deep, seed + 500), Mode::Edge, seed + 500, false);
        add(gen_nested(wide, seed + 600), Mode::Vertex, seed + 600, false);
    }
    // A few dense families near the size budget.
    NestedProfile dense{40, 3, 1, 10};
    for (uint64_t seed = 0; seed < 4; ++seed) {
        add(gen_nested(dense, seed + 700), Mode::Vertex, seed + 700, false);
        add(gen_nested(dense, seed + 800), Mode::Edge, seed + 800, false);
    }
    return out;
}

} // namespace cyclepack
