#include "cyclepack/structure_cert.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>

#include "cyclepack/structured.hpp"

namespace cyclepack {

namespace {

std::vector<Incidence> one_sided_pair_incidences(const LaminarFamily& fam,
                                                 const std::vector<Incidence>& all, int c) {
    std::vector<Incidence> out;
    for (const Incidence& I : all) {
        int other = -1;
        if (I.cycles.first == c) other = I.cycles.second;
        if (I.cycles.second == c) other = I.cycles.first;
        if (other >= 0 && fam.one_sided(other)) out.push_back(I);
    }
    return out;
}

} // namespace

IncidenceMultiset build_base_mstar(const LaminarFamily& fam) {
    CYCLEPACK_REQUIRE(static_cast<int>(fam.one_sided_cycles().size()) == fam.size() &&
                          fam.size() >= 3,
                      PreconditionViolated,
                      "base construction needs an all-one-sided family of size >= 3");
    auto all = compute_incidences(fam);
    IncidenceMultiset M;
    for (const Incidence& I : all)
        if (!I.crossing) M[I] += 1;

    // k-3 copies per vertex on k >= 4 cycles, instantiated as the
    // lexicographically first crossing incidences at that vertex.
    const EmbeddedGraph& g = fam.graph();
    for (int v = 0; v < g.num_vertices(); ++v) {
        int k = 0;
        for (int c = 0; c < fam.size(); ++c)
            if (fam.cycle(c).contains_vertex(v)) ++k;
        if (k < 4) continue;
        std::vector<Incidence> at_v;
        for (const Incidence& I : all)
            if (I.crossing && I.vertices == std::vector<int>{v}) at_v.push_back(I);
        if (at_v.empty()) continue; // no crossing incidences: nothing to cover either
        for (int copy = 0; copy < k - 3; ++copy) M[at_v[copy % at_v.size()]] += 1;
    }
    return M;
}

namespace {

// Subfamily of cycles with a side inside the given side of cstar, plus
// cstar itself. Returns local family + mapping local -> parent index.
std::pair<LaminarFamily, std::vector<int>> side_family(const LaminarFamily& fam, int cstar,
                                                       const Bitset& side) {
    std::vector<Cycle> cycles;
    std::vector<int> map;
    for (int j = 0; j < fam.size(); ++j) {
        bool in = j == cstar || fam.sides(j).first.faces.subset_of(side) ||
                  fam.sides(j).second.faces.subset_of(side);
        if (in) {
            cycles.push_back(fam.cycle(j));
            map.push_back(j);
        }
    }
    return {LaminarFamily(fam.graph(), std::move(cycles)), std::move(map)};
}

Incidence remap(const Incidence& I, const std::vector<int>& to_parent) {
    Incidence out = I;
    int a = to_parent[I.cycles.first], b = to_parent[I.cycles.second];
    out.cycles = {std::min(a, b), std::max(a, b)};
    return out;
}

// Order of sub-incidences along the oriented host cycle. Contacts are keyed
// by the position of their first vertex along the arc spanned by V(I) (the
// arc starts right after the longest stretch of the host free of V(I)
// vertices), refined within a vertex by the rotational position of the
// partner cycle, sweeping from the host's incoming edge through the far
// side. The refinement is what makes the orders of overlapping host
// incidences agree with each other.
struct ArcOrder {
    const LaminarFamily& fam;
    const Cycle& host;
    const Bitset& far_side;
    std::vector<int> pos_of_vertex;
    int start, len;

    ArcOrder(const LaminarFamily& f, int host_cycle, const Bitset& far,
             const std::vector<int>& ivertices)
        : fam(f), host(f.cycle(host_cycle)), far_side(far),
          pos_of_vertex(f.graph().num_vertices(), -1), len(host.length()) {
        for (int i = 0; i < len; ++i) pos_of_vertex[host.vertices()[i]] = i;
        std::vector<int> ps;
        for (int v : ivertices) {
            CYCLEPACK_REQUIRE(pos_of_vertex[v] >= 0, Internal, "incidence vertex off host cycle");
            ps.push_back(pos_of_vertex[v]);
        }
        std::sort(ps.begin(), ps.end());
        int k = static_cast<int>(ps.size());
        int best_gap = -1;
        start = ps[0];
        for (int i = 0; i < k; ++i) {
            int gap = (ps[(i + 1) % k] - ps[i] + len) % len;
            if (gap == 0) gap = len; // single vertex
            int cand_start = ps[(i + 1) % k];
            if (gap > best_gap || (gap == best_gap && cand_start < start)) {
                best_gap = gap;
                start = cand_start;
            }
        }
    }

    // Rotational rank of cycle x's contact at host vertex v: sweep distance
    // from the host's incoming edge, through the far-side sectors. The host
    // itself ranks at its outgoing edge.
    int rank_at(int v, int x) const {
        const EmbeddedGraph& g = fam.graph();
        int pos = pos_of_vertex[v];
        int e_in = host.edges()[(pos + len - 1) % len];
        int e_out = host.edges()[pos];
        int d = static_cast<int>(g.rotation(v).size());
        int s_in = g.rotation_position(v, e_in);

        // Direction whose first corner face lies in the far side.
        int corner_plus = g.face_of(e_in, g.other_endpoint(e_in, v));
        int dir;
        if (far_side.test(corner_plus)) {
            dir = +1;
        } else {
            int prev_slot = (s_in + d - 1) % d;
            int e_prev = g.rotation(v)[prev_slot];
            int corner_minus = g.face_of(e_prev, g.other_endpoint(e_prev, v));
            CYCLEPACK_REQUIRE(far_side.test(corner_minus), Internal,
                              "no far-side corner next to the incoming edge");
            dir = -1;
        }
        auto sweep = [&](int slot) {
            return dir > 0 ? (slot - s_in + d) % d : (s_in - slot + d) % d;
        };
        if (x == -1) return sweep(g.rotation_position(v, e_out)); // the host itself
        auto [x1, x2] = fam.cycle(x).edges_at(v);
        return std::min(sweep(g.rotation_position(v, x1)), sweep(g.rotation_position(v, x2)));
    }

    // (arc offset of first contact, within-vertex rank) for a sub-incidence
    // between `partner` (fixed) and cycle x.
    std::pair<int, int> key(const std::vector<int>& vs, int x, int host_index) const {
        int best_off = len, best_rank = 0;
        for (int v : vs) {
            int off = (pos_of_vertex[v] - start + len) % len;
            int rank = rank_at(v, x == host_index ? -1 : x);
            if (off < best_off || (off == best_off && rank < best_rank)) {
                best_off = off;
                best_rank = rank;
            }
        }
        return {best_off, best_rank};
    }
};

} // namespace

namespace {
bool cert_trace_enabled() {
    static bool on = std::getenv("CYCLEPACK_CERT_TRACE") != nullptr;
    return on;
}
} // namespace

IncidenceMultiset build_good_structured(const LaminarFamily& fam) {
    CYCLEPACK_REQUIRE(fam.size() >= 2, PreconditionViolated,
                      "construction needs at least two cycles");
    int n = fam.size();
    int n1 = static_cast<int>(fam.one_sided_cycles().size());

    if (n1 == 2) return {}; // chain: all cycles homotopic, no incidences

    if (n == 3 && n1 == 3) {
        IncidenceMultiset M;
        for (const Incidence& I : compute_incidences(fam)) M[I] += 1;
        return M;
    }

    if (n1 == n) return build_base_mstar(fam);

    // Pick a two-sided cycle with an inclusion-minimal two-sided side; that
    // side contains no other two-sided cycle.
    int cstar = -1, sstar = -1;
    for (int i = 0; i < n; ++i) {
        if (fam.one_sided(i)) continue;
        for (int s = 0; s < 2; ++s) {
            const Bitset& S = s == 0 ? fam.sides(i).first.faces : fam.sides(i).second.faces;
            if (cstar != -1) {
                const Bitset& B =
                    sstar == 0 ? fam.sides(cstar).first.faces : fam.sides(cstar).second.faces;
                bool better = S.count() < B.count() ||
                              (S.count() == B.count() && S.lex_less(B)) ||
                              (S == B && i < cstar);
                if (!better) continue;
            }
            cstar = i;
            sstar = s;
        }
    }
    CYCLEPACK_REQUIRE(cstar != -1, Internal, "no two-sided cycle in mixed family");
    if (cert_trace_enabled()) {
        std::cerr << "level n=" << n << " cstar=" << cstar << " verts:";
        for (int v : fam.cycle(cstar).vertices()) std::cerr << " " << v;
        std::cerr << "\n";
    }
    const Bitset& S1 = sstar == 0 ? fam.sides(cstar).first.faces : fam.sides(cstar).second.faces;
    const Bitset& S2 = sstar == 0 ? fam.sides(cstar).second.faces : fam.sides(cstar).first.faces;
    for (int j : fam.cycles_inside_side(cstar, sstar))
        CYCLEPACK_REQUIRE(fam.one_sided(j), Internal,
                          "minimal two-sided side contains a two-sided cycle");

    auto [fam1, map1] = side_family(fam, cstar, S1);
    auto [fam2, map2] = side_family(fam, cstar, S2);
    CYCLEPACK_REQUIRE(fam1.size() < n && fam2.size() < n, Internal,
                      "side families must shrink");
    IncidenceMultiset M1 = build_good_structured(fam1);
    IncidenceMultiset M2 = build_good_structured(fam2);

    // Replacement slots: copies of non-crossing incidences between cstar and
    // one-sided subfamily cycles. Each slot may emit any minimal
    // sub-incidence toward the far side without hurting the subfamily
    // counts, so the cross-side requirements (every non-crossing one-sided
    // incidence of the full family, and enough v-incidences per vertex) are
    // covered by a matching over the slots first; leftover slots fall back
    // to the oriented first / first non-crossing rule.
    struct Slot {
        Incidence host;                   // the cstar incidence being replaced
        std::vector<Incidence> subs;      // ordered along cstar
        bool second;                      // far side is S1 (f2 semantics)
    };
    std::vector<Slot> slots;
    IncidenceMultiset M; // passthrough part

    auto gather_side = [&](const IncidenceMultiset& Mi, const LaminarFamily& fami,
                           const std::vector<int>& mapi, const Bitset& far_side, bool second) {
        int local_star = static_cast<int>(std::find(mapi.begin(), mapi.end(), cstar) -
                                          mapi.begin());
        for (const auto& [I, mult] : Mi) {
            Incidence g = remap(I, mapi);
            bool star_pair = g.cycles.first == cstar || g.cycles.second == cstar;
            int partner_local =
                I.cycles.first == local_star ? I.cycles.second : I.cycles.first;
            bool to_one_sided = star_pair && fami.one_sided(partner_local);
            if (!star_pair || !to_one_sided || I.crossing) {
                M[g] += mult;
                continue;
            }
            int partner = mapi[partner_local];
            const auto& psides = fam.sides(partner);
            const Bitset& pn = psides.first.faces.intersects(far_side) ? psides.second.faces
                                                                       : psides.first.faces;
            auto subs = sub_incidences(fam, g, far_side, pn);
            CYCLEPACK_REQUIRE(!subs.empty(), Internal, "sub-incidence set cannot be empty");
            ArcOrder order(fam, cstar, far_side, g.vertices);
            auto better = [&](const Incidence& x, const Incidence& y) {
                int px = x.cycles.first == partner ? x.cycles.second : x.cycles.first;
                int py = y.cycles.first == partner ? y.cycles.second : y.cycles.first;
                auto kx = order.key(x.vertices, px, cstar);
                auto ky = order.key(y.vertices, py, cstar);
                if (kx != ky) return kx < ky;
                return px < py;
            };
            std::sort(subs.begin(), subs.end(), better);
            for (int copy = 0; copy < mult; ++copy) slots.push_back(Slot{g, subs, second});
        }
    };
    gather_side(M1, fam1, map1, S2, false);
    gather_side(M2, fam2, map2, S1, true);

    // Requirements that must come out of the slots: the cross-side
    // non-crossing incidences between one-sided cycles, plus any v-incidence
    // counts the passthrough part does not already cover.
    auto side_of = [&](int c) { // 1, 2, or 0 for cstar
        if (c == cstar) return 0;
        if (fam.sides(c).first.faces.subset_of(S1) || fam.sides(c).second.faces.subset_of(S1))
            return 1;
        return 2;
    };
    auto all_inc = compute_incidences(fam);
    std::vector<Incidence> needed;
    for (const Incidence& J : all_inc) {
        if (J.crossing) continue;
        auto [a, b] = J.cycles;
        if (!fam.one_sided(a) || !fam.one_sided(b)) continue;
        int sa = side_of(a), sb = side_of(b);
        if (sa != 0 && sb != 0 && sa != sb) needed.push_back(J);
    }
    std::map<int, long long> have_v, need_v;
    for (const auto& [I, mult] : M)
        if (I.crossing && I.vertices.size() == 1) have_v[I.vertices.front()] += mult;
    for (int c : fam.one_sided_cycles()) {
        for (int v : fam.cycle(c).vertices()) {
            long long cnt = 0;
            for (const Incidence& J : all_inc) {
                if (!J.crossing || J.vertices != std::vector<int>{v}) continue;
                int other = J.cycles.first == c ? J.cycles.second
                            : J.cycles.second == c ? J.cycles.first
                                                   : -1;
                if (other >= 0 && fam.one_sided(other)) ++cnt;
            }
            need_v[v] = std::max(need_v[v], cnt);
        }
    }

    // Left side of the matching: one node per required incidence plus one
    // per missing v-incidence unit.
    struct Requirement {
        std::optional<Incidence> inc; // nullopt: any crossing incidence at `vertex`
        int vertex = -1;
    };
    std::vector<Requirement> reqs;
    for (const Incidence& J : needed) reqs.push_back({J, -1});
    for (const auto& [v, need] : need_v) {
        long long deficit = need - have_v[v];
        for (long long k = 0; k < deficit; ++k) reqs.push_back({std::nullopt, v});
    }
    auto slot_can = [&](const Slot& s, const Requirement& r) {
        for (const Incidence& cand : s.subs) {
            if (r.inc && cand == *r.inc) return true;
            if (!r.inc && cand.crossing && cand.vertices == std::vector<int>{r.vertex})
                return true;
        }
        return false;
    };
    std::vector<int> slot_req(slots.size(), -1);
    std::vector<int> req_slot(reqs.size(), -1);
    std::function<bool(int, std::vector<char>&)> augment = [&](int r, std::vector<char>& vis) {
        for (size_t s = 0; s < slots.size(); ++s) {
            if (vis[s] || !slot_can(slots[s], reqs[r])) continue;
            vis[s] = 1;
            if (slot_req[s] == -1 || augment(slot_req[s], vis)) {
                slot_req[s] = r;
                req_slot[r] = static_cast<int>(s);
                return true;
            }
        }
        return false;
    };
    for (size_t r = 0; r < reqs.size(); ++r) {
        std::vector<char> vis(slots.size(), 0);
        CYCLEPACK_REQUIRE(augment(static_cast<int>(r), vis), CheckerFailed,
                          "cannot cover a structured-set requirement with the slots");
    }

    for (size_t s = 0; s < slots.size(); ++s) {
        const Slot& slot = slots[s];
        Incidence chosen = slot.subs.front();
        if (slot_req[s] != -1) {
            const Requirement& r = reqs[slot_req[s]];
            if (r.inc) {
                chosen = *r.inc;
            } else {
                for (const Incidence& cand : slot.subs)
                    if (cand.crossing && cand.vertices == std::vector<int>{r.vertex}) {
                        chosen = cand;
                        break;
                    }
            }
        } else if (slot.second) {
            for (const Incidence& cand : slot.subs)
                if (!cand.crossing) {
                    chosen = cand;
                    break;
                }
        }
        if (cert_trace_enabled()) {
            auto cyc = [&](int c) {
                std::string t = "[";
                for (int v : fam.cycle(c).vertices()) t += std::to_string(v) + ",";
                return t + "]";
            };
            auto pr = [&](const Incidence& x) {
                std::string t = "{" + cyc(x.cycles.first) + cyc(x.cycles.second) + "}V(";
                for (int v : x.vertices) t += std::to_string(v) + " ";
                return t + ")" + (x.crossing ? "X" : "");
            };
            std::cerr << "  slot f" << (slot.second ? 2 : 1) << " cstar=" << cyc(cstar)
                      << " I=" << pr(slot.host) << (slot_req[s] != -1 ? " [matched]" : "")
                      << " -> " << pr(chosen) << "\n";
        }
        M[chosen] += 1;
    }
    return M;
}

VertexMultiset extract_mstar(const LaminarFamily& fam, const IncidenceMultiset& M) {
    // Family-level redundancy: a two-sided cycle homotopic to a one-sided
    // one has no incidences to it, so no incidence multiset can certify its
    // neighbour count.
    for (int i = 0; i < fam.size(); ++i)
        CYCLEPACK_REQUIRE(!is_redundant(fam, i), RedundantCyclePresent,
                          "certificate extraction needs a redundancy-free family");
    VertexMultiset out;
    for (const auto& [I, mult] : M) out[I.vertices.front()] += mult;

    // Homotopic one-sided pairs (chains) have no incidences but still count
    // as neighbours; cover their contacts through shared telescope vertices.
    const auto& l1 = fam.one_sided_cycles();
    for (size_t i = 0; i < l1.size(); ++i)
        for (size_t j = i + 1; j < l1.size(); ++j) {
            if (!fam.homotopic(l1[i], l1[j])) continue;
            for (int end : {l1[i], l1[j]}) {
                std::vector<int> common;
                for (int v : fam.cycle(end).vertices()) common.push_back(v);
                bool any_toucher = false;
                for (int x = 0; x < fam.size(); ++x) {
                    if (x == end) continue;
                    bool touches = false;
                    for (int v : fam.cycle(end).vertices())
                        if (fam.cycle(x).contains_vertex(v)) touches = true;
                    if (!touches) continue;
                    any_toucher = true;
                    std::vector<int> keep;
                    for (int v : common)
                        if (fam.cycle(x).contains_vertex(v)) keep.push_back(v);
                    common = keep;
                }
                if (!any_toucher) continue;
                CYCLEPACK_REQUIRE(!common.empty(), Internal,
                                  "chain touchers must share a vertex with the end cycle");
                out[*std::min_element(common.begin(), common.end())] += 1;
            }
        }
    return out;
}

CheckResult check_structured(const LaminarFamily& fam, const IncidenceMultiset& M) {
    CheckResult res;
    auto all = compute_incidences(fam);
    std::set<Incidence> valid(all.begin(), all.end());
    for (const auto& [I, mult] : M) {
        (void)mult;
        if (!valid.count(I)) res.flag("element is not an incidence of the family");
    }

    for (const Incidence& I : all) {
        if (I.crossing) continue;
        if (!fam.one_sided(I.cycles.first) || !fam.one_sided(I.cycles.second)) continue;
        auto it = M.find(I);
        if (it == M.end() || it->second < 1)
            res.flag("missing non-crossing one-sided incidence");
    }

    // v-incidence counts in M, by vertex.
    std::map<int, long long> have;
    for (const auto& [I, mult] : M)
        if (I.crossing && I.vertices.size() == 1) have[I.vertices.front()] += mult;
    for (int c : fam.one_sided_cycles()) {
        for (int v : fam.cycle(c).vertices()) {
            long long need = 0;
            for (const Incidence& I : all) {
                if (!I.crossing || I.vertices != std::vector<int>{v}) continue;
                int other = I.cycles.first == c ? I.cycles.second
                            : I.cycles.second == c ? I.cycles.first
                                                   : -1;
                if (other >= 0 && fam.one_sided(other)) ++need;
            }
            if (need > have[v]) res.flag("too few v-incidences at a shared vertex");
        }
    }
    return res;
}

CheckResult check_good(const LaminarFamily& fam, const IncidenceMultiset& M) {
    CheckResult res;
    long long n1 = static_cast<long long>(fam.one_sided_cycles().size());
    if (multiset_size(M) > 3 * n1 - 6) res.flag("size exceeds 3|L1|-6");
    auto all = compute_incidences(fam);
    for (int c = 0; c < fam.size(); ++c) {
        long long needed = static_cast<long long>(one_sided_pair_incidences(fam, all, c).size());
        long long hits = 0;
        for (const auto& [I, mult] : M)
            if (I.hits(fam.cycle(c))) hits += mult;
        if (hits < needed) res.flag("cycle " + std::to_string(c) + " is not M-good");
    }
    return res;
}

bool check_certificate(const LaminarFamily& fam, const VertexMultiset& mstar) {
    long long n1 = static_cast<long long>(fam.one_sided_cycles().size());
    if (vertex_multiset_size(mstar) > 3 * n1) return false;
    for (int c = 0; c < fam.size(); ++c) {
        auto [nb, nb1] = fam.neighbours(c);
        long long need = static_cast<long long>(nb1.size()) - (fam.one_sided(c) ? 1 : 0);
        long long got = 0;
        for (const auto& [v, mult] : mstar)
            if (fam.cycle(c).contains_vertex(v)) got += mult;
        if (got < need) return false;
    }
    return true;
}

std::vector<int> cover_for_set(const LaminarFamily& fam, const std::vector<int>& F) {
    if (F.empty()) return {};
    for (int c : F)
        CYCLEPACK_REQUIRE(fam.one_sided(c), PreconditionViolated, "F must be one-sided cycles");
    const EmbeddedGraph& g = fam.graph();
    int n = fam.size();

    // Interior orientation: away from a reference point outside every
    // one-sided side. If every face lies in some one-sided side, the
    // reference point sits on the lowest family edge instead, with cycles
    // through that edge oriented by their strand position.
    std::vector<const Bitset*> interior(n, nullptr);
    Bitset covered(g.num_faces());
    for (size_t k = 0; k < fam.one_sided_sides().size(); ++k)
        covered = covered | fam.oss_faces(static_cast<int>(k));
    int free_face = -1;
    for (int f = 0; f < g.num_faces(); ++f)
        if (!covered.test(f)) {
            free_face = f;
            break;
        }
    if (free_face >= 0) {
        for (int c = 0; c < n; ++c) {
            const auto& sd = fam.sides(c);
            interior[c] = sd.first.faces.test(free_face) ? &sd.second.faces : &sd.first.faces;
        }
    } else {
        int e = -1;
        for (int c = 0; c < n && e == -1; ++c)
            for (int ce : fam.cycle(c).sorted_edges()) {
                e = ce;
                break;
            }
        int fa = g.face_of(e, g.edge(e).first);
        int fb = g.face_of(e, g.edge(e).second);
        for (int c = 0; c < n; ++c) {
            const auto& sd = fam.sides(c);
            if (!fam.cycle(c).contains_edge(e)) {
                bool both_first = sd.first.faces.test(fa) && sd.first.faces.test(fb);
                interior[c] = both_first ? &sd.second.faces : &sd.first.faces;
            }
        }
        // Strand order along e: by inclusion of the fa-containing side.
        std::vector<int> strands;
        for (int c = 0; c < n; ++c)
            if (fam.cycle(c).contains_edge(e)) strands.push_back(c);
        auto fa_side = [&](int c) -> const Bitset& {
            const auto& sd = fam.sides(c);
            return sd.first.faces.test(fa) ? sd.first.faces : sd.second.faces;
        };
        std::sort(strands.begin(), strands.end(), [&](int x, int y) {
            return fa_side(x).count() < fa_side(y).count();
        });
        // One-sided strands: interior = minimal side; the B block starts at
        // the first strand whose minimal side contains fb.
        int cut = static_cast<int>(strands.size());
        for (size_t i = 0; i < strands.size(); ++i) {
            int c = strands[i];
            if (!fam.one_sided(c)) continue;
            const auto& sd = fam.sides(c);
            bool min_first = false;
            for (const auto& os : fam.one_sided_sides())
                if (os.cycle == c) min_first = os.side == 0;
            const Bitset& tmin = min_first ? sd.first.faces : sd.second.faces;
            if (tmin.test(fb)) {
                cut = std::min(cut, static_cast<int>(i));
            }
        }
        for (size_t i = 0; i < strands.size(); ++i) {
            int c = strands[i];
            const auto& sd = fam.sides(c);
            const Bitset& a_side = sd.first.faces.test(fa) ? sd.first.faces : sd.second.faces;
            const Bitset& b_side = sd.first.faces.test(fa) ? sd.second.faces : sd.first.faces;
            interior[c] = static_cast<int>(i) < cut ? &a_side : &b_side;
        }
    }

    auto inside = [&](int x, int y) { return interior[x]->subset_of(*interior[y]); };
    auto touches = [&](int x, int y) {
        for (int v : fam.cycle(x).vertices())
            if (fam.cycle(y).contains_vertex(v)) return true;
        return false;
    };

    // B_int: cycles containing and touching some F-cycle; hit via a common
    // telescope vertex per F-cycle.
    std::set<int> fset(F.begin(), F.end());
    std::vector<int> fmap(n, -1); // f(C) for members of B_int
    for (int c = 0; c < n; ++c)
        for (int fc : F)
            if (inside(fc, c) && touches(fc, c)) {
                fmap[c] = fc;
                break; // F sorted ascending: lowest id wins
            }
    std::set<int> M;
    for (int fc : F) {
        std::vector<int> commons = fam.cycle(fc).vertices();
        bool any = false;
        for (int c = 0; c < n; ++c) {
            if (fmap[c] != fc || c == fc) continue;
            any = true;
            std::vector<int> keep;
            for (int v : commons)
                if (fam.cycle(c).contains_vertex(v)) keep.push_back(v);
            commons = keep;
        }
        if (!any) {
            M.insert(*std::min_element(fam.cycle(fc).vertices().begin(),
                                       fam.cycle(fc).vertices().end()));
            continue;
        }
        CYCLEPACK_REQUIRE(!commons.empty(), Internal,
                          "telescope over an F-cycle must share a vertex");
        M.insert(*std::min_element(commons.begin(), commons.end()));
    }

    // B_ext peeling: repeatedly take the innermost remaining toucher that is
    // not in B_int, charge a shared vertex with an F-cycle, and delete
    // everything inside it plus the non-F cycles through that vertex.
    std::vector<char> alive(n, 1);
    while (true) {
        // Inclusion-minimal ext-toucher: smallest interior is minimal.
        int c1 = -1;
        for (int c = 0; c < n; ++c) {
            if (!alive[c] || fmap[c] != -1) continue;
            bool t = false;
            for (int fc : F)
                if (alive[fc] && touches(c, fc)) t = true;
            if (!t) continue;
            if (c1 == -1 || interior[c]->count() < interior[c1]->count()) c1 = c;
        }
        if (c1 == -1) break;
        int c2 = -1;
        for (int fc : F)
            if (alive[fc] && touches(c1, fc)) {
                c2 = fc;
                break;
            }
        CYCLEPACK_REQUIRE(c2 != -1, Internal, "peeled cycle lost its F contact");
        int v = -1;
        for (int u : fam.cycle(c1).vertices())
            if (fam.cycle(c2).contains_vertex(u) && (v == -1 || u < v)) v = u;
        M.insert(v);
        for (int c = 0; c < n; ++c) {
            if (!alive[c]) continue;
            if (inside(c, c1)) alive[c] = 0;
            if (!fset.count(c) && fam.cycle(c).contains_vertex(v)) alive[c] = 0;
        }
    }
    return std::vector<int>(M.begin(), M.end());
}

VertexMultiset brute_min_mstar(const LaminarFamily& fam) {
    const EmbeddedGraph& g = fam.graph();
    CYCLEPACK_REQUIRE(g.num_vertices() <= 15 && fam.size() <= 8, BudgetExceeded,
                      "brute_min_mstar budget: |V| <= 15 and |fam| <= 8");
    int n = fam.size();
    std::vector<long long> need(n);
    for (int c = 0; c < n; ++c) {
        auto [nb, nb1] = fam.neighbours(c);
        need[c] = static_cast<long long>(nb1.size()) - (fam.one_sided(c) ? 1 : 0);
    }
    VertexMultiset best;
    long long best_size = -1;
    VertexMultiset cur;

    std::function<void(long long)> rec = [&](long long size) {
        if (best_size != -1 && size >= best_size) return;
        int worst = -1;
        long long worst_def = 0;
        for (int c = 0; c < n; ++c) {
            long long got = 0;
            for (const auto& [v, k] : cur)
                if (fam.cycle(c).contains_vertex(v)) got += k;
            long long def = need[c] - got;
            if (def > worst_def) {
                worst_def = def;
                worst = c;
            }
        }
        if (worst == -1) {
            best = cur;
            best_size = size;
            return;
        }
        if (best_size != -1 && size + worst_def >= best_size) return;
        for (int v : fam.cycle(worst).vertices()) {
            cur[v] += 1;
            rec(size + 1);
            if (--cur[v] == 0) cur.erase(v);
        }
    };
    rec(0);
    CYCLEPACK_REQUIRE(best_size != -1, Internal, "certificate search found nothing");
    return best;
}

} // namespace cyclepack
