// Compares the serial reference kernels against their OpenMP variants on
// sizable generated families and times a corpus sweep.

#include <chrono>
#include <iostream>

#include "cyclepack/corpus.hpp"
#include "cyclepack/pipeline.hpp"
#include "cyclepack/rounding.hpp"

using namespace cyclepack;

namespace {

template <typename F> double time_ms(F&& f, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

} // namespace

int main() {
    NestedProfile big{600, 3, 2, 20};
    BuiltInstance inst = gen_nested(big, 7);
    LaminarFamily fam(*inst.graph, inst.family);
    std::cout << "workload: " << inst.family.size() << " cycles, "
              << inst.graph->num_vertices() << " vertices\n\n";

    std::vector<std::pair<SideRegion, SideRegion>> sides;
    for (const Cycle& c : inst.family) sides.push_back(cycle_sides(*inst.graph, c));

    auto s1 = time_ms([&] { (void)find_crossing_pair_serial(sides); }, 20);
    auto p1 = time_ms([&] { (void)find_crossing_pair_parallel(sides); }, 20);
    bool same1 = find_crossing_pair_serial(sides) == find_crossing_pair_parallel(sides);
    std::cout << "laminarity scan   serial " << s1 << " ms   omp " << p1 << " ms   speedup "
              << s1 / p1 << "   match " << (same1 ? "yes" : "NO") << "\n";

    std::vector<Rational> w(fam.size(), Rational(1, 3));
    auto s2 = time_ms([&] { (void)neighbour_masses_serial(fam, w); }, 10);
    auto p2 = time_ms([&] { (void)neighbour_masses_parallel(fam, w); }, 10);
    bool same2 = neighbour_masses_serial(fam, w) == neighbour_masses_parallel(fam, w);
    std::cout << "neighbour masses  serial " << s2 << " ms   omp " << p2 << " ms   speedup "
              << s2 / p2 << "   match " << (same2 ? "yes" : "NO") << "\n";

    auto corpus = build_corpus();
    auto sweep = time_ms(
        [&] {
            for (size_t i = 0; i < corpus.size(); i += 8) {
                PipelineOptions opts;
                opts.run_certificates = false;
                (void)run_pipeline(corpus[i].instance, opts);
            }
        },
        1);
    std::cout << "corpus sweep (1/8 sample) " << sweep << " ms\n";
    return same1 && same2 ? 0 : 1;
}
