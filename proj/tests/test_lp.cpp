#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "cyclepack/generators.hpp"
#include "cyclepack/lp.hpp"
#include "cyclepack/oracles.hpp"
#include "cyclepack/structured.hpp"
#include "cyclepack/uncross.hpp"

using namespace cyclepack;

namespace {

// Independent LP oracle for tiny instances: enumerate all basic solutions of
// max 1'x s.t. Ax <= 1, x >= 0 by picking tight-constraint subsets and
// solving exactly; the optimum is attained at a vertex.
Rational brute_lp_optimum(const EmbeddedGraph& g, const std::vector<Cycle>& cycles, Mode mode) {
    int n = static_cast<int>(cycles.size());
    int ground = mode == Mode::Vertex ? g.num_vertices() : g.num_edges();
    std::vector<std::vector<Rational>> rows; // constraint coefficients
    for (int t = 0; t < ground; ++t) {
        std::vector<Rational> row(n, Rational(0));
        bool any = false;
        for (int c = 0; c < n; ++c) {
            bool in = mode == Mode::Vertex ? cycles[c].contains_vertex(t)
                                           : cycles[c].contains_edge(t);
            if (in) {
                row[c] = 1;
                any = true;
            }
        }
        if (any) rows.push_back(std::move(row));
    }
    // Candidate tight sets: n equations chosen from {constraints = 1} and
    // {variables = 0}; solve each square system by Gaussian elimination.
    int m = static_cast<int>(rows.size());
    REQUIRE(n <= 5);
    Rational best = 0;
    std::vector<int> pick;
    std::function<void(int)> go = [&](int next) {
        if (static_cast<int>(pick.size()) == n) {
            std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n + 1, Rational(0)));
            for (int i = 0; i < n; ++i) {
                int p = pick[i];
                if (p < m) {
                    for (int j = 0; j < n; ++j) A[i][j] = rows[p][j];
                    A[i][n] = 1;
                } else {
                    A[i][p - m] = 1;
                    A[i][n] = 0;
                }
            }
            // Gaussian elimination over rationals.
            int rank = 0;
            for (int col = 0; col < n && rank < n; ++col) {
                int piv = -1;
                for (int r = rank; r < n; ++r)
                    if (A[r][col] != 0) {
                        piv = r;
                        break;
                    }
                if (piv == -1) continue;
                std::swap(A[rank], A[piv]);
                Rational d = A[rank][col];
                for (auto& x : A[rank]) x /= d;
                for (int r = 0; r < n; ++r) {
                    if (r == rank || A[r][col] == 0) continue;
                    Rational f = A[r][col];
                    for (int j = 0; j <= n; ++j) A[r][j] -= f * A[rank][j];
                }
                ++rank;
            }
            if (rank < n) return;
            std::vector<Rational> x(n);
            for (int i = 0; i < n; ++i) {
                int lead = -1;
                for (int j = 0; j < n; ++j)
                    if (A[i][j] == 1) {
                        lead = j;
                        break;
                    }
                if (lead >= 0) x[lead] = A[i][n];
            }
            // Feasible?
            for (const Rational& v : x)
                if (v < 0 || v > 1) return;
            for (const auto& row : rows) {
                Rational s = 0;
                for (int j = 0; j < n; ++j) s += row[j] * x[j];
                if (s > 1) return;
            }
            Rational val = 0;
            for (const Rational& v : x) val += v;
            best = std::max(best, val);
            return;
        }
        for (int p = next; p < m + n; ++p) {
            pick.push_back(p);
            go(p + 1);
            pick.pop_back();
        }
    };
    go(0);
    return best;
}

} // namespace

TEST_CASE("theta LP optimum is 1, matching the basic-solution oracle") {
    auto t = make_theta();
    auto x = solve_packing_lp(*t.graph, t.family, Mode::Vertex);
    CHECK(x.value() == Rational(1));
    CHECK(brute_lp_optimum(*t.graph, t.family, Mode::Vertex) == Rational(1));
    CHECK(is_feasible(*t.graph, t.family, x));
}

TEST_CASE("single cycle and two disjoint cycles") {
    auto ch = make_chain(2);
    std::vector<Cycle> one = {ch.family[0]};
    CHECK(solve_packing_lp(*ch.graph, one, Mode::Vertex).value() == Rational(1));

    FamilyBuilder fb(3);
    fb.insert_floating(0, 0, 3);
    auto [g, cycles] = fb.finish();
    CHECK(solve_packing_lp(*g, cycles, Mode::Vertex).value() == Rational(2));
}

TEST_CASE("empty family yields the zero solution") {
    auto t = make_theta();
    auto x = solve_packing_lp(*t.graph, {}, Mode::Vertex);
    CHECK(x.value() == Rational(0));
    CHECK(x.support().empty());
}

TEST_CASE("simplex matches the basic-solution oracle on micro instances") {
    auto k4 = make_k4();
    std::vector<Cycle> tri(k4.family.begin(), k4.family.begin() + 4);
    for (Mode mode : {Mode::Vertex, Mode::Edge}) {
        auto x = solve_packing_lp(*k4.graph, tri, mode);
        CHECK(x.value() == brute_lp_optimum(*k4.graph, tri, mode));
    }
    auto t = make_theta();
    CHECK(solve_packing_lp(*t.graph, t.family, Mode::Edge).value() ==
          brute_lp_optimum(*t.graph, t.family, Mode::Edge));
}

TEST_CASE("LP value dominates the integral packing on generated instances") {
    for (uint64_t seed : {0, 2, 4, 6, 8}) {
        auto b = gen_nested(NestedProfile{9, 2, 2, 25}, seed);
        for (Mode mode : {Mode::Vertex, Mode::Edge}) {
            auto x = solve_packing_lp(*b.graph, b.family, mode);
            auto nu = brute_max_packing(*b.graph, b.family, mode);
            CHECK(x.value() >= Rational(nu.nu));
        }
    }
}

TEST_CASE("uncrossing: already-laminar and empty supports are unchanged") {
    auto t = make_theta();
    auto x = solve_packing_lp(*t.graph, t.family, Mode::Vertex);
    auto y = uncross_support(*t.graph, t.family, x);
    CHECK(y.weights == x.weights);
    FractionalSolution empty;
    CHECK(uncross_support(*t.graph, t.family, empty).weights.empty());
}

TEST_CASE("uncrossing two crossing K4 quads at one half each") {
    auto k4 = make_k4();
    FractionalSolution x;
    x.mode = Mode::Vertex;
    x.set(4, Rational(1, 2)); // quad 0-1-2-3
    x.set(5, Rational(1, 2)); // quad 0-1-3-2
    REQUIRE(is_feasible(*k4.graph, k4.family, x));
    std::vector<Cycle> sup = {k4.family[4], k4.family[5]};
    REQUIRE(!is_laminar(*k4.graph, sup).laminar);

    auto y = uncross_support(*k4.graph, k4.family, x);
    CHECK(y.value() == Rational(1));
    CHECK(is_feasible(*k4.graph, k4.family, y));
    std::vector<Cycle> sup2;
    for (int c : y.support()) sup2.push_back(k4.family[c]);
    CHECK(is_laminar(*k4.graph, sup2).laminar);
}

TEST_CASE("uncrossing stalls when the family holds no replacement") {
    // Only the three quads of K4: the exchange would need triangles.
    auto k4 = make_k4();
    std::vector<Cycle> quads(k4.family.begin() + 4, k4.family.end());
    FractionalSolution x;
    x.mode = Mode::Vertex;
    x.set(0, Rational(1, 2));
    x.set(1, Rational(1, 2));
    REQUIRE(is_feasible(*k4.graph, quads, x));
    try {
        uncross_support(*k4.graph, quads, x);
        FAIL("expected UncrossingStalled");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UncrossingStalled);
    }
}

TEST_CASE("redundancy in the six-cycle nesting") {
    auto f1 = make_six_nesting();
    LaminarFamily fam(*f1.graph, f1.family);
    CHECK(is_redundant(fam, 0)); // a
    CHECK(is_redundant(fam, 1)); // b
    CHECK(is_redundant(fam, 4)); // e
    CHECK(!is_redundant(fam, 2));
    CHECK(!is_redundant(fam, 3));
    CHECK(!is_redundant(fam, 5));

    // Right image: in the component of a alone, a is one-sided, hence not
    // redundant.
    std::vector<Cycle> right = {f1.family[0]};
    LaminarFamily comp_a(*f1.graph, right);
    CHECK(!is_redundant(comp_a, 0));
}

TEST_CASE("structured transform reproduces the six-cycle reference shifts") {
    auto f1 = make_six_nesting();
    FractionalSolution x;
    x.mode = Mode::Vertex;
    x.set(0, Rational(2, 3)); // a
    x.set(1, Rational(1, 3)); // b
    x.set(2, Rational(1, 3)); // c
    x.set(3, Rational(1, 3)); // d
    x.set(4, Rational(1, 3)); // e
    x.set(5, Rational(2, 3)); // f
    REQUIRE(is_feasible(*f1.graph, f1.family, x));

    auto y = make_structured(*f1.graph, f1.family, x);
    CHECK(y.weight(0) == Rational(2, 3));
    CHECK(y.weight(1) == Rational(0));
    CHECK(y.weight(2) == Rational(1, 3));
    CHECK(y.weight(3) == Rational(2, 3));
    CHECK(y.weight(4) == Rational(0));
    CHECK(y.weight(5) == Rational(1));
    CHECK(y.value() == x.value());

    // Fixed point: structuring again changes nothing.
    auto z = make_structured(*f1.graph, f1.family, y);
    CHECK(z.weights == y.weights);
}

TEST_CASE("a chain of two one-sided cycles is already structured") {
    auto ch = make_chain(2);
    FractionalSolution x;
    x.mode = Mode::Vertex;
    x.set(0, Rational(1, 4));
    x.set(1, Rational(1, 2));
    auto y = make_structured(*ch.graph, ch.family, x);
    CHECK(y.weights == x.weights);
}

TEST_CASE("structured transform preserves value and feasibility on the LP optimum") {
    for (uint64_t seed : {1, 3, 5, 7}) {
        auto b = gen_nested(NestedProfile{12, 3, 1, 20}, seed);
        auto x = solve_packing_lp(*b.graph, b.family, Mode::Vertex);
        auto y = make_structured(*b.graph, b.family, x);
        CHECK(y.value() == x.value());
        CHECK(is_feasible(*b.graph, b.family, y));
        // No redundant cycles remain in any support component.
        std::vector<int> sup = y.support();
        std::vector<Cycle> sc;
        for (int c : sup) sc.push_back(b.family[c]);
        LaminarFamily fam(*b.graph, sc);
        for (int comp = 0; comp < fam.num_components(); ++comp) {
            auto [cf, _] = fam.component_family(comp);
            for (int i = 0; i < cf.size(); ++i) CHECK(!is_redundant(cf, i));
        }
    }
}

TEST_CASE("rational serialization") {
    CHECK(to_pq(Rational(1)) == "1/1");
    CHECK(to_pq(Rational(8, 3)) == "8/3");
    CHECK(parse_pq("8/3") == Rational(8, 3));
    CHECK(parse_pq("-2/5") == Rational(-2, 5));
    CHECK(parse_pq("7") == Rational(7));
    CHECK_THROWS_AS(parse_pq("x/y"), Error);
    CHECK_THROWS_AS(parse_pq("1/0"), Error);
}
