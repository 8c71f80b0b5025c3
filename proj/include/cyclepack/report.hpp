#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclepack/rational.hpp"

namespace cyclepack {

// Run artifact emitted by the CLI. Rationals travel as "p/q" strings so the
// file round-trips bit-exactly.
struct Report {
    struct TraceLine {
        int iteration = 0;
        int component = 0;
        std::string rule;
        std::optional<Rational> alpha;
        std::vector<int> fstar;
        Rational removed_mass = 0;
        Rational ratio = 0;
        Rational mass_before = 0;
        Rational mass_after = 0;
        bool operator==(const TraceLine&) const = default;
    };
    struct CertificateBlock {
        struct IncidenceLine {
            int a = 0, b = 0;
            std::vector<int> vertices;
            bool crossing = false;
            int multiplicity = 1;
            bool operator==(const IncidenceLine&) const = default;
        };
        std::vector<int> cycles; // family ids of this component
        std::vector<IncidenceLine> M;
        std::vector<std::pair<int, int>> mstar; // (vertex, multiplicity)
        bool structured_ok = false;
        bool good_ok = false;
        bool certificate_ok = false;
        // Extraction needs a redundancy-free family; true when skipped.
        bool mstar_skipped_redundant = false;
        bool operator==(const CertificateBlock&) const = default;
    };
    struct OracleBlock {
        int nu = 0;
        int tau = 0;
        std::vector<int> nu_witness;
        std::vector<int> tau_witness;
        std::optional<Rational> tau_over_nu;
        bool operator==(const OracleBlock&) const = default;
    };

    std::string instance_name;
    std::string mode;
    uint64_t seed = 0;
    int num_cycles = 0;

    std::optional<Rational> lp_value;
    std::vector<std::pair<int, Rational>> lp_weights;         // (family id, weight)
    std::vector<std::pair<int, Rational>> structured_weights; // after the transform
    int uncross_steps = 0;

    std::vector<int> packing;
    std::vector<TraceLine> trace;
    bool guarantee_ok = false;

    std::vector<CertificateBlock> certificates;
    std::optional<OracleBlock> oracle;

    std::string to_json() const;
    static Report from_json(const std::string& text);
    bool operator==(const Report&) const = default;
};

} // namespace cyclepack
