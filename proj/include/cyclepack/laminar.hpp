#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cyclepack/bitset.hpp"
#include "cyclepack/cycle.hpp"

namespace cyclepack {

// One of the two sphere regions bounded by a cycle, as a set of face ids.
struct SideRegion {
    int cycle = -1; // index within the owning family / cycle list
    Bitset faces;
};

// Sides of a simple cycle: faces left of a fixed traversal direction first.
// The two face sets partition the faces of g.
std::pair<SideRegion, SideRegion> cycle_sides(const EmbeddedGraph& g, const Cycle& c);

// True iff some side of c2 has a face set contained in s.
bool side_contains_cycle(const SideRegion& s, const std::pair<SideRegion, SideRegion>& sides2);

// Pairwise laminarity over precomputed side pairs; returns a violating pair
// if any. The parallel kernel scans pair indices with OpenMP and reports the
// lexicographically first violation, matching the serial reference.
std::optional<std::pair<int, int>>
find_crossing_pair_serial(const std::vector<std::pair<SideRegion, SideRegion>>& sides);
std::optional<std::pair<int, int>>
find_crossing_pair_parallel(const std::vector<std::pair<SideRegion, SideRegion>>& sides);

struct LaminarityResult {
    bool laminar;
    std::optional<std::pair<int, int>> witness; // crossing pair when not laminar
};

LaminarityResult is_laminar(const EmbeddedGraph& g, const std::vector<Cycle>& cycles);

// Classified laminar family: sides, one-sided flags, homotopy classes and
// connected components, all deterministic in the input order.
class LaminarFamily {
  public:
    LaminarFamily(const EmbeddedGraph& g, std::vector<Cycle> cycles);

    const EmbeddedGraph& graph() const { return *g_; }
    const std::vector<Cycle>& cycles() const { return cycles_; }
    int size() const { return static_cast<int>(cycles_.size()); }
    const Cycle& cycle(int i) const { return cycles_[i]; }

    const std::pair<SideRegion, SideRegion>& sides(int i) const { return sides_[i]; }
    bool one_sided(int i) const { return one_sided_[i]; }
    const std::vector<int>& one_sided_cycles() const { return one_sided_cycles_; }
    int component(int i) const { return component_[i]; }
    int num_components() const { return num_components_; }
    int homotopy_class(int i) const { return homotopy_class_[i]; }
    bool homotopic(int i, int j) const { return homotopy_class_[i] == homotopy_class_[j]; }

    // All family-wide one-sided sides (the "holes"): (cycle, side index).
    struct OneSidedSide {
        int cycle;
        int side; // 0 or 1
    };
    const std::vector<OneSidedSide>& one_sided_sides() const { return oss_; }
    const Bitset& oss_faces(int oss_index) const;

    // Indices of one-sided sides contained in the given side of cycle i.
    const std::vector<int>& oss_in_side(int i, int side) const { return oss_in_side_[i][side]; }

    // Neighbours: cycles sharing a vertex with c (including c), and the
    // one-sided subset.
    std::pair<std::vector<int>, std::vector<int>> neighbours(int c) const;

    // Cycles whose listed side is contained in the given side of cycle i
    // (excluding i itself).
    std::vector<int> cycles_inside_side(int i, int side) const;

    // Family restricted to one connected component (cycles reindexed;
    // mapping from new index to old returned alongside).
    std::pair<LaminarFamily, std::vector<int>> component_family(int comp) const;

  private:
    const EmbeddedGraph* g_;
    std::vector<Cycle> cycles_;
    std::vector<std::pair<SideRegion, SideRegion>> sides_;
    std::vector<bool> one_sided_;
    std::vector<int> one_sided_cycles_;
    std::vector<OneSidedSide> oss_;
    std::vector<std::array<std::vector<int>, 2>> oss_in_side_;
    std::vector<int> homotopy_class_;
    std::vector<int> component_;
    int num_components_ = 0;
};

} // namespace cyclepack
