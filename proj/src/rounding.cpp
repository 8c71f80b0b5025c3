#include "cyclepack/rounding.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "cyclepack/structured.hpp"

namespace cyclepack {

std::vector<Rational> neighbour_masses_serial(const LaminarFamily& fam,
                                              const std::vector<Rational>& w) {
    std::vector<Rational> out(fam.size(), Rational(0));
    for (int c = 0; c < fam.size(); ++c) {
        auto [nb, nb1] = fam.neighbours(c);
        for (int j : nb) out[c] += w[j];
    }
    return out;
}

std::vector<Rational> neighbour_masses_parallel(const LaminarFamily& fam,
                                                const std::vector<Rational>& w) {
    std::vector<Rational> out(fam.size(), Rational(0));
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < fam.size(); ++c) {
        auto [nb, nb1] = fam.neighbours(c);
        Rational s = 0;
        for (int j : nb) s += w[j];
        out[c] = s;
    }
    return out;
}

ThresholdProfile threshold_profile(const LaminarFamily& fam, const std::vector<Rational>& w) {
    ThresholdProfile p;
    std::vector<Rational> ws;
    for (int c : fam.one_sided_cycles()) ws.push_back(w[c]);
    p.n1 = static_cast<int>(ws.size());
    std::sort(ws.begin(), ws.end());
    for (const Rational& v : ws)
        if (p.levels.empty() || p.levels.back() != v) p.levels.push_back(v);
    for (const Rational& lvl : p.levels) {
        int cnt = 0;
        for (const Rational& v : ws)
            if (v > lvl) ++cnt;
        p.above.push_back(cnt);
    }
    return p;
}

long long ThresholdProfile::count_above(const Rational& alpha) const {
    // Number of one-sided weights > alpha.
    long long total = 0;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] > alpha) {
            // all cycles at this level and above count
            total = above[i];
            // plus the multiplicity of levels[i] itself
            long long mult = (i == 0 ? n1 : above[i - 1]) - above[i];
            total += mult;
            break;
        }
    }
    return total;
}

Rational ThresholdProfile::r_at(const Rational& alpha) const {
    CYCLEPACK_REQUIRE(n1 > 0, EmptySupport, "no one-sided cycles");
    return Rational(count_above(alpha), n1);
}

Rational profile_integral(const ThresholdProfile& p) {
    // r_alpha is constant between consecutive levels; weights lie in [0,1].
    Rational integral = 0;
    Rational prev = 0;
    for (size_t i = 0; i < p.levels.size(); ++i) {
        const Rational& lvl = p.levels[i];
        if (lvl <= 0) continue;
        // On [prev, lvl): r = (#weights > prev') for prev' in the interval =
        // #weights >= lvl ... constant = count_above(prev).
        integral += (lvl - prev) * Rational(p.count_above(prev), p.n1);
        prev = lvl;
    }
    // Above the largest level r = 0.
    return integral;
}

const char* rule_name(CandidateSet::Rule r) {
    switch (r) {
        case CandidateSet::Rule::Single: return "single";
        case CandidateSet::Rule::Threshold: return "threshold";
        case CandidateSet::Rule::FourColor: return "fourcolor";
    }
    return "?";
}

namespace {

Rational union_neighbourhood_mass(const LaminarFamily& fam, const std::vector<Rational>& w,
                                  const std::vector<int>& fstar) {
    std::set<int> u;
    for (int c : fstar) {
        auto [nb, nb1] = fam.neighbours(c);
        u.insert(nb.begin(), nb.end());
    }
    Rational s = 0;
    for (int c : u) s += w[c];
    return s;
}

void require_pairwise_disjoint(const LaminarFamily& fam, const std::vector<int>& cs,
                               ErrorKind kind, const char* msg) {
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
            for (int v : fam.cycle(cs[i]).vertices())
                if (fam.cycle(cs[j]).contains_vertex(v)) fail(kind, msg);
}

} // namespace

CandidateSet candidate_single(const LaminarFamily& fam, const std::vector<Rational>& w) {
    const auto& l1 = fam.one_sided_cycles();
    CYCLEPACK_REQUIRE(!l1.empty(), EmptySupport, "family has no one-sided cycles");
    std::vector<Rational> mass = neighbour_masses_parallel(fam, w);
    int bestc = -1;
    for (int c : l1)
        if (bestc == -1 || mass[c] < mass[bestc]) bestc = c;

    Rational l1_mass = 0;
    for (int c : l1) l1_mass += w[c];
    Rational bound = Rational(3) + l1_mass / Rational(static_cast<int>(l1.size()));
    CYCLEPACK_REQUIRE(mass[bestc] <= bound, GuaranteeViolated,
                      "single-cycle bound 3 + x(L1)/|L1| violated");
    CYCLEPACK_REQUIRE(mass[bestc] <= 4, GuaranteeViolated, "single-cycle bound 4 violated");

    CandidateSet out;
    out.rule = CandidateSet::Rule::Single;
    out.cycles = {bestc};
    out.removed_mass = mass[bestc];
    out.ratio = mass[bestc];
    return out;
}

CandidateSet candidate_threshold(const LaminarFamily& fam, const std::vector<Rational>& w,
                                 const Rational& alpha) {
    CYCLEPACK_REQUIRE(alpha >= Rational(1, 2), PreconditionViolated,
                      "threshold rule needs alpha >= 1/2");
    std::vector<int> fstar;
    for (int c : fam.one_sided_cycles())
        if (w[c] > alpha) fstar.push_back(c);
    CYCLEPACK_REQUIRE(!fstar.empty(), EmptyLevel, "empty level set");
    require_pairwise_disjoint(fam, fstar, ErrorKind::FeasibilityViolation,
                              "cycles above 1/2 must be pairwise disjoint");

    CandidateSet out;
    out.rule = CandidateSet::Rule::Threshold;
    out.alpha = alpha;
    out.cycles = fstar;
    out.removed_mass = union_neighbourhood_mass(fam, w, fstar);
    out.ratio = out.removed_mass / Rational(static_cast<int>(fstar.size()));

    ThresholdProfile p = threshold_profile(fam, w);
    Rational r = p.r_at(alpha);
    CYCLEPACK_REQUIRE(r > 0, EmptyLevel, "r_alpha must be positive");
    CYCLEPACK_REQUIRE(out.ratio <= Rational(1) + (Rational(1) - alpha) / r, GuaranteeViolated,
                      "threshold bound 1 + (1-alpha)/r_alpha violated");
    return out;
}

ConflictGraph conflict_graph(const LaminarFamily& fam, const std::vector<Rational>& w,
                             const Rational& alpha) {
    CYCLEPACK_REQUIRE(alpha >= Rational(1, 4), PreconditionViolated,
                      "conflict graph needs alpha >= 1/4");
    ConflictGraph cg;
    for (int c : fam.one_sided_cycles())
        if (w[c] > alpha) cg.members.push_back(c);
    // Feasibility forbids four level cycles through one vertex.
    for (int v = 0; v < fam.graph().num_vertices(); ++v) {
        int k = 0;
        for (int c : cg.members)
            if (fam.cycle(c).contains_vertex(v)) ++k;
        CYCLEPACK_REQUIRE(k <= 3, FeasibilityViolation,
                          "four cycles heavier than 1/4 share a vertex");
    }
    cg.adj.resize(cg.members.size());
    for (size_t i = 0; i < cg.members.size(); ++i)
        for (size_t j = i + 1; j < cg.members.size(); ++j) {
            bool share = false;
            for (int v : fam.cycle(cg.members[i]).vertices())
                if (fam.cycle(cg.members[j]).contains_vertex(v)) share = true;
            if (share) {
                cg.adj[i].push_back(static_cast<int>(j));
                cg.adj[j].push_back(static_cast<int>(i));
            }
        }
    return cg;
}

std::vector<int> four_color(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> color(n, -1);
    std::function<bool(int)> go = [&](int v) {
        if (v == n) return true;
        for (int c = 0; c < 4; ++c) {
            bool ok = true;
            for (int u : adj[v])
                if (color[u] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            if (go(v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    CYCLEPACK_REQUIRE(go(0), SearchExhausted, "graph admits no 4-coloring (not planar?)");
    return color;
}

CandidateSet candidate_fourcolor(const LaminarFamily& fam, const std::vector<Rational>& w,
                                 const Rational& alpha) {
    CYCLEPACK_REQUIRE(alpha >= Rational(1, 4) && alpha < Rational(1, 2), PreconditionViolated,
                      "four-color rule needs 1/4 <= alpha < 1/2");
    ConflictGraph cg = conflict_graph(fam, w, alpha);
    CYCLEPACK_REQUIRE(!cg.members.empty(), EmptyLevel, "empty level set");
    Rational heavy_cut = Rational(1) - alpha;

    std::vector<int> heavy, rest_idx;
    for (size_t i = 0; i < cg.members.size(); ++i) {
        if (w[cg.members[i]] > heavy_cut)
            heavy.push_back(cg.members[i]);
        else
            rest_idx.push_back(static_cast<int>(i));
    }
    // Color the non-heavy part of the conflict graph.
    std::vector<std::vector<int>> sub(rest_idx.size());
    std::vector<int> pos(cg.members.size(), -1);
    for (size_t i = 0; i < rest_idx.size(); ++i) pos[rest_idx[i]] = static_cast<int>(i);
    for (size_t i = 0; i < rest_idx.size(); ++i)
        for (int j : cg.adj[rest_idx[i]])
            if (pos[j] >= 0) sub[i].push_back(pos[j]);
    std::vector<int> color = four_color(sub);
    std::array<std::vector<int>, 4> classes;
    for (size_t i = 0; i < rest_idx.size(); ++i)
        classes[color[i]].push_back(cg.members[rest_idx[i]]);
    int best = 0;
    for (int c = 1; c < 4; ++c)
        if (classes[c].size() > classes[best].size()) best = c;

    CandidateSet out;
    out.rule = CandidateSet::Rule::FourColor;
    out.alpha = alpha;
    out.cycles = heavy;
    out.cycles.insert(out.cycles.end(), classes[best].begin(), classes[best].end());
    std::sort(out.cycles.begin(), out.cycles.end());
    require_pairwise_disjoint(fam, out.cycles, ErrorKind::Internal,
                              "four-color candidate must be a stable set");

    long long na = static_cast<long long>(cg.members.size());
    long long nh = static_cast<long long>(heavy.size());
    CYCLEPACK_REQUIRE(4 * static_cast<long long>(out.cycles.size()) >= 4 * nh + (na - nh),
                      GuaranteeViolated, "four-color size bound violated");

    out.removed_mass = union_neighbourhood_mass(fam, w, out.cycles);
    out.ratio = out.removed_mass / Rational(static_cast<int>(out.cycles.size()));
    ThresholdProfile p = threshold_profile(fam, w);
    Rational r_a = p.r_at(alpha), r_h = p.r_at(heavy_cut);
    CYCLEPACK_REQUIRE(out.ratio <= Rational(1) + Rational(4) * (Rational(1) - alpha) /
                                                     (r_a + Rational(3) * r_h),
                      GuaranteeViolated, "four-color ratio bound violated");
    return out;
}

CandidateSet choose_fstar(const LaminarFamily& fam, const std::vector<Rational>& w) {
    const auto& l1 = fam.one_sided_cycles();
    CYCLEPACK_REQUIRE(!l1.empty(), EmptySupport, "family has no one-sided cycles");
    ThresholdProfile p = threshold_profile(fam, w);

    std::vector<CandidateSet> cands;
    cands.push_back(candidate_single(fam, w));

    std::set<Rational> t_alphas{Rational(1, 2)};
    std::set<Rational> f_alphas{Rational(1, 4)};
    for (const Rational& lvl : p.levels) {
        if (lvl >= Rational(1, 2) && lvl < 1) t_alphas.insert(lvl);
        if (lvl > Rational(1, 4) && lvl < Rational(1, 2)) f_alphas.insert(lvl);
    }
    for (const Rational& a : t_alphas)
        if (p.count_above(a) > 0) cands.push_back(candidate_threshold(fam, w, a));
    for (const Rational& a : f_alphas)
        if (p.count_above(a) > 0) cands.push_back(candidate_fourcolor(fam, w, a));

    int best = 0;
    for (size_t i = 1; i < cands.size(); ++i)
        if (cands[i].ratio < cands[best].ratio) best = static_cast<int>(i);

    CYCLEPACK_REQUIRE(ratio_le_beta(cands[best].ratio), GuaranteeViolated,
                      "chosen candidate ratio exceeds (20+sqrt(130))/9");
    return cands[best];
}

RoundingResult round_solution(const EmbeddedGraph& g, const std::vector<Cycle>& cycles,
                              const FractionalSolution& x0) {
    CYCLEPACK_REQUIRE(x0.mode == Mode::Vertex, PreconditionViolated,
                      "rounding runs in vertex mode");
    RoundingResult res;
    res.initial_value = x0.value();
    FractionalSolution x = x0;

    for (int iter = 0; x.value() > 0; ++iter) {
        x = make_structured(g, cycles, x);
        std::vector<int> support = x.support();
        std::vector<Cycle> sup_cycles;
        for (int c : support) sup_cycles.push_back(cycles[c]);
        LaminarFamily fam(g, sup_cycles);

        for (int comp = 0; comp < fam.num_components(); ++comp) {
            auto [cf, local_map] = fam.component_family(comp);
            std::vector<int> to_global;
            std::vector<Rational> w;
            for (int li : local_map) {
                to_global.push_back(support[li]);
                w.push_back(x.weight(support[li]));
            }
            Rational before = 0;
            for (const Rational& v : w) before += v;

            CandidateSet cand = choose_fstar(cf, w);

            TraceEntry te;
            te.iteration = iter;
            te.component = comp;
            te.rule = cand.rule;
            te.alpha = cand.alpha;
            te.removed_mass = cand.removed_mass;
            te.ratio = cand.ratio;
            te.mass_before = before;
            te.mass_after = before - cand.removed_mass;
            std::set<int> wipe;
            for (int lc : cand.cycles) {
                te.fstar.push_back(to_global[lc]);
                auto [nb, nb1] = cf.neighbours(lc);
                for (int n : nb) wipe.insert(n);
            }
            std::sort(te.fstar.begin(), te.fstar.end());
            res.packing.insert(res.packing.end(), te.fstar.begin(), te.fstar.end());
            for (int lc : wipe) x.set(to_global[lc], 0);
            res.trace.push_back(std::move(te));
        }
    }

    // The output must be a vertex-disjoint packing meeting the guarantee.
    std::sort(res.packing.begin(), res.packing.end());
    for (size_t i = 0; i < res.packing.size(); ++i)
        for (size_t j = i + 1; j < res.packing.size(); ++j)
            for (int v : cycles[res.packing[i]].vertices())
                CYCLEPACK_REQUIRE(!cycles[res.packing[j]].contains_vertex(v), Internal,
                                  "rounded packing is not vertex-disjoint");
    res.guarantee_ok =
        n_beta_at_least(Int(static_cast<long long>(res.packing.size())), res.initial_value);
    CYCLEPACK_REQUIRE(res.guarantee_ok, GuaranteeViolated,
                      "packing misses the 9/(20+sqrt(130)) guarantee");
    return res;
}

} // namespace cyclepack
