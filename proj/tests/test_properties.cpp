#include <doctest.h>

#include <algorithm>
#include <set>

#include "adjmin/classify.hpp"
#include "adjmin/fiber.hpp"
#include "adjmin/fixtures.hpp"
#include "adjmin/groebner.hpp"
#include "adjmin/io.hpp"
#include "adjmin/primes.hpp"
#include "testutil.hpp"

using namespace adjmin;
using testutil::Rng;

TEST_CASE("marked orders realize random markings") {
    Rng rng(101);
    for (int i = 0; i < 150; ++i) {
        Configuration c = testutil::random_configuration(rng, 4, 8);
        Marking m;
        for (const Cell& a : c.anchors())
            m[a] = rng.below(2) ? MarkChoice::Diagonal : MarkChoice::AntiDiagonal;
        // marked_order verifies internally and throws on failure.
        VariableRanking r = marked_order(c, m);
        CHECK(r.size() == c.vertex_set().size());
    }
}

TEST_CASE("4-cycle-free chessboards have at least two free minors") {
    Rng rng(202);
    for (int i = 0; i < 150; ++i) {
        Configuration c = testutil::random_chessboard_no_four_cycle(rng);
        CHECK(free_minors(c).size() >= 2);
    }
}

TEST_CASE("moves preserve margins") {
    // Per-component margins are the lattice data of vertex-disjoint
    // components; configurations whose components overlap in single vertices
    // are outside this invariant's domain.
    Rng rng(303);
    int cases = 0;
    while (cases < 150) {
        Configuration c = testutil::random_configuration(rng, 4, 6);
        if (!testutil::components_vertex_disjoint(c)) continue;
        auto verts = c.vertex_set();
        std::map<Cell, long long> entries;
        for (const Cell& v : verts) entries[v] = rng.below(4);
        Table t(entries);
        const Cell& a = c.anchors()[rng.below(c.size())];
        int sign = rng.below(2) ? 1 : -1;
        auto moved = apply_move(t, Move{UnitMinor{a}, sign}, c);
        if (!moved) continue;
        CHECK(margins(*moved, c) == margins(t, c));
        ++cases;
    }
}

TEST_CASE("admissible sets match the subset brute force") {
    Rng rng(404);
    for (int i = 0; i < 120; ++i) {
        Configuration c = testutil::random_configuration(rng, 3, 3); // |V| <= 12
        REQUIRE(c.vertex_set().size() <= 12);
        auto fast = admissible_sets(c);
        auto slow = testutil::brute_force_admissible(c);
        CHECK(fast == slow);
    }
}

TEST_CASE("component containment is a partial order") {
    Rng rng(505);
    int cases = 0;
    while (cases < 100) {
        Configuration c = testutil::random_connected_configuration(rng, 5);
        if (!is_special(c)) continue;
        auto sets = admissible_sets(c);
        std::vector<PrimeComponent> comps;
        for (const AdmissibleSet& w : sets) comps.push_back(prime_component(c, w));
        std::size_t n = comps.size();
        const PrimeComponent& p = comps[rng.below(n)];
        const PrimeComponent& q = comps[rng.below(n)];
        const PrimeComponent& r = comps[rng.below(n)];
        CHECK(component_contains(p, p));
        if (component_contains(p, q) && component_contains(q, p))
            CHECK((p.admissible == q.admissible && p.inner == q.inner));
        if (component_contains(p, q) && component_contains(q, r))
            CHECK(component_contains(p, r));
        ++cases;
    }
}

TEST_CASE("reduced bases are unique under generator shuffling") {
    Rng rng(606);
    for (int i = 0; i < 100; ++i) {
        Configuration c = testutil::random_configuration(rng, 3, 5);
        std::vector<BinomialElement> gens;
        for (const Cell& a : c.anchors()) gens.push_back(binomial_of(UnitMinor{a}));
        VariableRanking ranking = row_major_ranking(c.vertex_set());
        GroebnerBasis reference = reduced_basis(gens, ranking, 40);
        for (int k = 0; k < 3; ++k) {
            for (std::size_t j = gens.size(); j > 1; --j)
                std::swap(gens[j - 1], gens[rng.below(j)]);
            CHECK(reduced_basis(gens, ranking, 40).elements == reference.elements);
        }
    }
}

TEST_CASE("vertex counts and chessboard graphs") {
    Rng rng(707);
    for (int i = 0; i < 120; ++i) {
        Configuration c = testutil::random_configuration(rng, 5, 8);
        CHECK(c.vertex_set().size() <= 4 * c.size());
        if (is_chessboard(c)) CHECK(component_graph(c).is_simple());
    }
}

TEST_CASE("monotone paths are exactly the motif-free connected configurations") {
    Rng rng(808);
    int cases = 0;
    while (cases < 120) {
        Configuration c = testutil::random_connected_configuration(rng, 6);
        bool monotone = classify_shape(c).monotone();
        CHECK(monotone == detect_motifs(c).empty());
        CHECK(monotone == testutil::brute_force_monotone_path(c));
        ++cases;
    }
}

TEST_CASE("syntactic containment agrees with ideal membership") {
    // The combinatorial criterion on (W, inner) pairs against the algebraic
    // oracle: P_V is contained in P_W iff every generator of P_V reduces to
    // zero modulo a basis of P_W.
    Rng rng(333);
    int cases = 0;
    while (cases < 40) {
        Configuration c = testutil::random_connected_configuration(rng, 4);
        if (!is_special(c)) continue;
        auto sets = admissible_sets(c);
        std::vector<PrimeComponent> comps;
        for (const AdmissibleSet& w : sets) comps.push_back(prime_component(c, w));
        VariableRanking ranking = row_major_ranking(c.vertex_set());
        auto ideal_basis = [&](const PrimeComponent& p) {
            std::vector<BinomialElement> gens;
            for (const Cell& v : p.admissible.cells)
                gens.push_back(BinomialElement{Monomial::variable(v), std::nullopt});
            for (const GeneralMinor& m : p.inner) gens.push_back(binomial_of(m));
            return reduced_basis(gens, ranking, 40);
        };
        const PrimeComponent& p = comps[rng.below(comps.size())];
        const PrimeComponent& q = comps[rng.below(comps.size())];
        GroebnerBasis qb = ideal_basis(q);
        bool algebraic = true;
        for (const Cell& v : p.admissible.cells)
            if (!member(BinomialElement{Monomial::variable(v), std::nullopt}, qb))
                algebraic = false;
        for (const GeneralMinor& m : p.inner)
            if (!member(binomial_of(m), qb)) algebraic = false;
        CHECK(component_contains(p, q) == algebraic);
        ++cases;
    }
}

TEST_CASE("fiber reachability coincides with ideal membership of the pair binomial") {
    // Two tables are joined by moves exactly when their difference binomial
    // lies in the configuration ideal; checked exhaustively at small total
    // sums on a radical fixture.
    Configuration c = find_fixture("CFG-L")->config;
    auto verts = c.vertex_set();
    std::vector<BinomialElement> gens;
    for (const Cell& a : c.anchors()) gens.push_back(binomial_of(UnitMinor{a}));
    GroebnerBasis basis = reduced_basis(gens, row_major_ranking(verts));

    std::vector<Table> tables;
    std::vector<long long> vals(verts.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, long long left) -> void {
        if (i == verts.size()) {
            std::map<Cell, long long> m;
            for (std::size_t k = 0; k < verts.size(); ++k)
                if (vals[k]) m[verts[k]] = vals[k];
            tables.push_back(Table(std::move(m)));
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            vals[i] = v;
            self(self, i + 1, left - v);
        }
        vals[i] = 0;
    };
    rec(rec, 0, 3);

    auto monomial_of = [](const Table& t) {
        std::map<Cell, int> exps;
        for (const auto& [cell, v] : t.entries()) exps[cell] = static_cast<int>(v);
        return Monomial(exps);
    };
    std::map<MarginVector, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < tables.size(); ++i)
        classes[margins(tables[i], c)].push_back(i);
    for (const auto& [mv, idx] : classes) {
        for (std::size_t a = 0; a < idx.size(); ++a) {
            auto fiber = bfs_fiber(c, tables[idx[a]]);
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                Monomial ma = monomial_of(tables[idx[a]].normalized());
                Monomial mb = monomial_of(tables[idx[b]].normalized());
                bool in_ideal =
                    ma == mb || member(BinomialElement{ma, mb}, basis);
                bool reachable = std::binary_search(fiber.begin(), fiber.end(),
                                                    tables[idx[b]].normalized());
                CHECK(in_ideal == reachable);
            }
        }
    }
}

TEST_CASE("parse of serialize is the identity") {
    Rng rng(909);
    for (int i = 0; i < 100; ++i) {
        Configuration c = testutil::random_configuration(rng, 6, 10);
        CHECK(parse_configuration(serialize_configuration(c)) == c);
        CHECK(parse_configuration(ascii_grid(c)) == c);
    }
}

TEST_CASE("prime configurations never get a NotRadical verdict") {
    Rng rng(111);
    for (int i = 0; i < 100; ++i) {
        Configuration c = testutil::random_configuration(rng, 4, 6);
        if (!is_prime(c).prime) continue;
        CHECK(radical_verdict(c).status != RadicalStatus::NotRadical);
    }
}

TEST_CASE("fiber search stays inside the margin class") {
    Rng rng(222);
    int cases = 0;
    while (cases < 60) {
        Configuration c = testutil::random_configuration(rng, 3, 3);
        if (!testutil::components_vertex_disjoint(c)) continue;
        std::map<Cell, long long> entries;
        for (const Cell& v : c.vertex_set()) entries[v] = rng.below(3);
        Table t(entries);
        MarginVector base = margins(t, c);
        for (const Table& x : bfs_fiber(c, t, 200000)) CHECK(margins(x, c) == base);
        ++cases;
    }
}
