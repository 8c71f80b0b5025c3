#pragma once

#include "cyclepack/instance.hpp"
#include "cyclepack/report.hpp"

namespace cyclepack {

struct PipelineOptions {
    bool run_rounding = true;
    bool run_certificates = true;
    bool run_oracle = false;      // skipped quietly when the family is too big
    bool oracle_required = false; // instead fail with BudgetExceeded
    int max_cycles = 5000;
};

// Full run: LP (uncrossing if the support needs it), structured transform,
// greedy rounding with the per-component candidate rules, certificates on
// the structured support components, optional brute-force oracles.
Report run_pipeline(const Instance& inst, const PipelineOptions& opts);

// Certificate run on the instance's family as given (must be laminar).
Report run_certify(const Instance& inst, const PipelineOptions& opts);

// Edge-to-vertex reduction emitted as a new instance.
Instance run_reduce(const Instance& inst, const PipelineOptions& opts);

} // namespace cyclepack
