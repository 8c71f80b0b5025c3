#include "cyclepack/pipeline.hpp"

#include <algorithm>

#include "cyclepack/oracles.hpp"
#include "cyclepack/reduction.hpp"
#include "cyclepack/rounding.hpp"
#include "cyclepack/structure_cert.hpp"
#include "cyclepack/structured.hpp"
#include "cyclepack/uncross.hpp"

namespace cyclepack {

namespace {

Report::CertificateBlock certify_family(const LaminarFamily& fam,
                                        const std::vector<int>& family_ids) {
    Report::CertificateBlock block;
    block.cycles = family_ids;
    if (fam.size() < 2) {
        block.structured_ok = block.good_ok = true;
        block.certificate_ok = check_certificate(fam, {});
        return block;
    }
    IncidenceMultiset M = build_good_structured(fam);
    auto cs = check_structured(fam, M);
    auto cg = check_good(fam, M);
    CYCLEPACK_REQUIRE(cs.ok, CheckerFailed,
                      "constructed M is not structured: " +
                          (cs.violations.empty() ? "" : cs.violations.front()));
    CYCLEPACK_REQUIRE(cg.ok, CheckerFailed,
                      "constructed M is not good: " +
                          (cg.violations.empty() ? "" : cg.violations.front()));
    block.structured_ok = cs.ok;
    block.good_ok = cg.ok;
    for (const auto& [I, mult] : M) {
        Report::CertificateBlock::IncidenceLine line;
        line.a = family_ids[I.cycles.first];
        line.b = family_ids[I.cycles.second];
        line.vertices = I.vertices;
        line.crossing = I.crossing;
        line.multiplicity = mult;
        block.M.push_back(std::move(line));
    }
    bool redundancy_free = true;
    for (int i = 0; i < fam.size(); ++i)
        if (is_redundant(fam, i)) redundancy_free = false;
    if (!redundancy_free) {
        block.mstar_skipped_redundant = true;
        return block;
    }
    VertexMultiset mstar = extract_mstar(fam, M);
    for (const auto& [v, k] : mstar) block.mstar.emplace_back(v, k);
    block.certificate_ok = check_certificate(fam, mstar);
    CYCLEPACK_REQUIRE(block.certificate_ok, CheckerFailed,
                      "extracted M* fails the counting certificate");
    return block;
}

// Vertex-mode rounding of one materialized piece, with certificates of the
// structured support components. Returns global family ids.
struct PieceRun {
    Rational lp_value;
    std::vector<std::pair<int, Rational>> lp_weights;
    std::vector<std::pair<int, Rational>> structured_weights;
    std::vector<int> packing;
    std::vector<Report::TraceLine> trace;
    std::vector<Report::CertificateBlock> certificates;
    int uncross_steps = 0;
};

PieceRun run_vertex_piece(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                          const std::vector<int>& family_ids, const PipelineOptions& opts,
                          int trace_component_base) {
    PieceRun out;
    FractionalSolution x = solve_packing_lp(g, cycles, Mode::Vertex);
    out.lp_value = x.value();

    auto lam = is_laminar(g, cycles);
    if (!lam.laminar) {
        // The enumerated family is not laminar; the support might still be.
        std::vector<Cycle> sup;
        for (int c : x.support()) sup.push_back(cycles[c]);
        if (!is_laminar(g, sup).laminar) {
            FractionalSolution before = x;
            x = uncross_support(g, cycles, x);
            for (int c : x.support())
                if (before.weight(c) != x.weight(c)) ++out.uncross_steps;
        }
    }
    for (int c : x.support()) out.lp_weights.emplace_back(family_ids[c], x.weight(c));

    FractionalSolution xs = make_structured(g, cycles, x);
    for (int c : xs.support()) out.structured_weights.emplace_back(family_ids[c], xs.weight(c));

    if (opts.run_certificates) {
        std::vector<int> support = xs.support();
        if (!support.empty()) {
            std::vector<Cycle> sup_cycles;
            for (int c : support) sup_cycles.push_back(cycles[c]);
            LaminarFamily fam(g, sup_cycles);
            for (int comp = 0; comp < fam.num_components(); ++comp) {
                auto [cf, local_map] = fam.component_family(comp);
                std::vector<int> ids;
                for (int li : local_map) ids.push_back(family_ids[support[li]]);
                out.certificates.push_back(certify_family(cf, ids));
            }
        }
    }

    if (opts.run_rounding) {
        RoundingResult rr = round_solution(g, cycles, x);
        for (int c : rr.packing) out.packing.push_back(family_ids[c]);
        for (const TraceEntry& te : rr.trace) {
            Report::TraceLine line;
            line.iteration = te.iteration;
            line.component = trace_component_base + te.component;
            line.rule = rule_name(te.rule);
            line.alpha = te.alpha;
            for (int c : te.fstar) line.fstar.push_back(family_ids[c]);
            line.removed_mass = te.removed_mass;
            line.ratio = te.ratio;
            line.mass_before = te.mass_before;
            line.mass_after = te.mass_after;
            out.trace.push_back(std::move(line));
        }
    }
    return out;
}

} // namespace

Report run_pipeline(const Instance& inst, const PipelineOptions& opts) {
    Materialized mat = materialize(inst, opts.max_cycles);
    Report rep;
    rep.instance_name = inst.name;
    rep.mode = mode_name(inst.mode);
    rep.seed = inst.seed;
    rep.num_cycles = mat.family_size;

    Rational lp_total = 0;
    int component_base = 0;
    for (const MaterializedPiece& piece : mat.pieces) {
        if (piece.cycles.empty()) continue;
        if (inst.mode == Mode::Vertex) {
            PieceRun pr = run_vertex_piece(*piece.graph, piece.cycles, piece.family_ids,
                                           opts, component_base);
            lp_total += pr.lp_value;
            rep.uncross_steps += pr.uncross_steps;
            auto append = [](auto& dst, const auto& src) {
                dst.insert(dst.end(), src.begin(), src.end());
            };
            append(rep.lp_weights, pr.lp_weights);
            append(rep.structured_weights, pr.structured_weights);
            append(rep.packing, pr.packing);
            append(rep.trace, pr.trace);
            append(rep.certificates, pr.certificates);
            component_base += 1000;
        } else {
            // Edge mode: exact edge LP, uncross if needed, reduce, run the
            // vertex machinery on each image component, lift back.
            FractionalSolution x = solve_packing_lp(*piece.graph, piece.cycles, Mode::Edge);
            lp_total += x.value();
            std::vector<Cycle> sup;
            for (int c : x.support()) sup.push_back(piece.cycles[c]);
            if (!is_laminar(*piece.graph, sup).laminar) {
                FractionalSolution before = x;
                x = uncross_support(*piece.graph, piece.cycles, x);
                for (int c : x.support())
                    if (before.weight(c) != x.weight(c)) ++rep.uncross_steps;
            }
            for (int c : x.support())
                rep.lp_weights.emplace_back(piece.family_ids[c], x.weight(c));

            // Reduce the support family (laminar now) and push the solution.
            std::vector<int> support = x.support();
            if (support.empty()) continue;
            std::vector<Cycle> sup_cycles;
            for (int c : support) sup_cycles.push_back(piece.cycles[c]);
            LaminarFamily fam(*piece.graph, sup_cycles);
            ReductionMap red = edge_to_vertex(fam);
            auto pushed = push_solution(red, [&] {
                FractionalSolution renamed;
                renamed.mode = Mode::Edge;
                for (size_t i = 0; i < support.size(); ++i)
                    renamed.set(static_cast<int>(i), x.weight(support[i]));
                return renamed;
            }());
            for (size_t k = 0; k < red.components.size(); ++k) {
                const ReductionComponent& rc = red.components[k];
                std::vector<int> ids;
                for (int ci : rc.cycle_to_fam)
                    ids.push_back(piece.family_ids[support[ci]]);
                PieceRun pr = run_vertex_piece(*rc.graph, rc.cycles, ids, opts,
                                               component_base);
                // The vertex LP on the image equals the pushed restriction;
                // keep the edge-mode numbers for the report.
                auto append = [](auto& dst, const auto& src) {
                    dst.insert(dst.end(), src.begin(), src.end());
                };
                append(rep.structured_weights, pr.structured_weights);
                append(rep.packing, pr.packing);
                append(rep.trace, pr.trace);
                append(rep.certificates, pr.certificates);
                component_base += 1000;
            }
        }
    }
    rep.lp_value = lp_total;

    if (opts.run_rounding) {
        std::sort(rep.packing.begin(), rep.packing.end());
        // Disjointness in the instance's own mode.
        for (size_t i = 0; i < rep.packing.size(); ++i)
            for (size_t j = i + 1; j < rep.packing.size(); ++j) {
                const auto& a = mat.family_edge_lists[rep.packing[i]];
                const auto& b = mat.family_edge_lists[rep.packing[j]];
                if (inst.mode == Mode::Edge) {
                    for (int e : a)
                        CYCLEPACK_REQUIRE(std::find(b.begin(), b.end(), e) == b.end(), Internal,
                                          "edge-mode packing shares an edge");
                }
            }
        rep.guarantee_ok = n_beta_at_least(Int(static_cast<long long>(rep.packing.size())),
                                           lp_total);
        CYCLEPACK_REQUIRE(rep.guarantee_ok, GuaranteeViolated,
                          "end-to-end guarantee violated");
    }

    CYCLEPACK_REQUIRE(!(opts.oracle_required && mat.family_size > 20), BudgetExceeded,
                      "oracle budget: at most 20 cycles");
    if (opts.run_oracle && mat.family_size <= 20) {
        Report::OracleBlock ob;
        int nu = 0, tau = 0;
        for (const MaterializedPiece& piece : mat.pieces) {
            if (piece.cycles.empty()) continue;
            auto p = brute_max_packing(*piece.graph, piece.cycles, inst.mode);
            auto t = brute_min_transversal(*piece.graph, piece.cycles, inst.mode);
            nu += p.nu;
            tau += t.tau;
            for (int c : p.witness) ob.nu_witness.push_back(piece.family_ids[c]);
            for (int w : t.witness)
                ob.tau_witness.push_back(inst.mode == Mode::Vertex ? piece.vertex_ids[w]
                                                                   : piece.edge_ids[w]);
        }
        ob.nu = nu;
        ob.tau = tau;
        if (nu > 0) ob.tau_over_nu = Rational(tau, nu);
        rep.oracle = ob;
    }
    return rep;
}

Report run_certify(const Instance& inst, const PipelineOptions& opts) {
    Materialized mat = materialize(inst, opts.max_cycles);
    Report rep;
    rep.instance_name = inst.name;
    rep.mode = mode_name(inst.mode);
    rep.seed = inst.seed;
    rep.num_cycles = mat.family_size;
    for (const MaterializedPiece& piece : mat.pieces) {
        if (piece.cycles.empty()) continue;
        LaminarFamily fam(*piece.graph, piece.cycles);
        rep.certificates.push_back(certify_family(fam, piece.family_ids));
    }
    return rep;
}

Instance run_reduce(const Instance& inst, const PipelineOptions& opts) {
    Materialized mat = materialize(inst, opts.max_cycles);
    Instance out;
    out.kind = FamilyKind::Explicit;
    out.mode = Mode::Vertex;
    out.seed = inst.seed;
    out.name = inst.name + "-reduced";

    // Nodes of the reduced instance are the source edges (all of them, so
    // |V| = |E(G)|); only family-covered nodes carry arcs.
    int total_edges = static_cast<int>(inst.edges.size());
    out.vertex_labels.resize(total_edges);
    for (int i = 0; i < total_edges; ++i) out.vertex_labels[i] = i;
    std::map<int, std::vector<int>> rot;
    for (int i = 0; i < total_edges; ++i) rot[i] = {};

    for (const MaterializedPiece& piece : mat.pieces) {
        if (piece.cycles.empty()) continue;
        LaminarFamily fam(*piece.graph, piece.cycles);
        ReductionMap red = edge_to_vertex(fam);
        for (const ReductionComponent& rc : red.components) {
            int arc_base = static_cast<int>(out.edges.size());
            for (int e = 0; e < rc.graph->num_edges(); ++e) {
                auto [lu, lv] = rc.graph->edge(e);
                out.edges.emplace_back(piece.edge_ids[rc.node_to_edge[lu]],
                                       piece.edge_ids[rc.node_to_edge[lv]]);
            }
            for (int v = 0; v < rc.graph->num_vertices(); ++v) {
                std::vector<int>& r = rot[piece.edge_ids[rc.node_to_edge[v]]];
                for (int e : rc.graph->rotation(v)) r.push_back(arc_base + e);
            }
            for (size_t ci = 0; ci < rc.cycles.size(); ++ci) {
                std::vector<int> es;
                for (int e : rc.cycles[ci].edges()) es.push_back(arc_base + e);
                out.explicit_cycles.push_back(std::move(es));
            }
        }
    }
    out.rotations = std::move(rot);
    return out;
}

} // namespace cyclepack
