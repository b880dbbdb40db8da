#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "latres/bipartite.hpp"
#include "latres/monomial.hpp"
#include "latres/simplicial.hpp"

using namespace latres;
using namespace testgen;

namespace {

std::set<Mask> mask_set(const std::vector<Mask>& v) { return {v.begin(), v.end()}; }

// Edge ideal {x_i y_j : p_i <= p_j} over the H_P variable universe.
MonomialIdeal dual_edge_ideal(const Poset& p) {
    MonomialIdeal ideal;
    ideal.variables = hp_variable_names(p);
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) ideal.generators.push_back(bit(i) | bit(n + j));
    minimize_generators(ideal);
    return ideal;
}

} // namespace

TEST_CASE("complex from ideal on two vertices") {
    MonomialIdeal both; // (x, y): every vertex is a nonface
    both.variables = {"x", "y"};
    both.generators = {0b01, 0b10};
    SimplicialComplex c = complex_from_ideal(both);
    CHECK(c.facets == std::vector<Mask>{0});
    CHECK(c.dim() == -1);

    MonomialIdeal edge; // (xy): facets {x}, {y}
    edge.variables = {"x", "y"};
    edge.generators = {0b11};
    c = complex_from_ideal(edge);
    CHECK(mask_set(c.facets) == std::set<Mask>{0b01, 0b10});
}

TEST_CASE("minimal nonfaces of the running example recover the generators") {
    Poset p = example_poset();
    MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
    SimplicialComplex c = complex_from_ideal(hp);
    CHECK(mask_set(minimal_nonfaces(c)) == mask_set(hp.generators));
}

TEST_CASE("Stanley-Reisner round trip") {
    Poset p = example_poset();
    MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
    MonomialIdeal back = sr_ideal(complex_from_ideal(hp));
    CHECK(mask_set(back.generators) == mask_set(hp.generators));
}

TEST_CASE("alexander dual is an involution") {
    std::mt19937_64 rng(9001);
    for (int t = 0; t < 20; ++t) {
        // Random complexes on 5 vertices from random candidate facets.
        // The full simplex is excluded: its dual is the void complex, which
        // the facet representation cannot express.
        std::vector<Mask> facets;
        int count = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < count; ++i) facets.push_back(rng() % 31);
        SimplicialComplex c =
            make_complex({"v1", "v2", "v3", "v4", "v5"}, facets);
        SimplicialComplex dd = alexander_dual(alexander_dual(c));
        CHECK(mask_set(dd.facets) == mask_set(c.facets));
    }
}

TEST_CASE("dual ideal of the running example is the order edge ideal") {
    Poset p = example_poset();
    MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
    MonomialIdeal dual = sr_ideal(alexander_dual(complex_from_ideal(hp)));
    MonomialIdeal expected = dual_edge_ideal(p);
    CHECK(dual.generators.size() == 7);
    CHECK(mask_set(dual.generators) == mask_set(expected.generators));
}

TEST_CASE("dual ideal equals the order edge ideal for all posets through size 4") {
    for (int n = 1; n <= 4; ++n)
        for (const Poset& p : canonical_posets(n)) {
            MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
            MonomialIdeal dual = sr_ideal(alexander_dual(complex_from_ideal(hp)));
            CHECK(mask_set(dual.generators) == mask_set(dual_edge_ideal(p).generators));
        }
}

TEST_CASE("one element dual ideal") {
    Poset p = make_poset({"p"}, {});
    MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
    MonomialIdeal dual = sr_ideal(alexander_dual(complex_from_ideal(hp)));
    CHECK(dual.generators == std::vector<Mask>{0b11});
}

TEST_CASE("Reisner criterion on basic complexes") {
    SimplicialComplex simplex = make_complex({"a", "b", "c"}, {0b111});
    CHECK(reisner_cm_check(simplex, FieldSpec::rationals()).cm);

    // Two disjoint edges: disconnected, dimension 1, not CM.
    SimplicialComplex disjoint = make_complex({"x1", "x2", "y1", "y2"}, {0b0011, 0b1100});
    CMReport rep = reisner_cm_check(disjoint, FieldSpec::rationals());
    CHECK_FALSE(rep.cm);
    CHECK_FALSE(rep.witness.empty());

    // Hollow triangle: nonzero top homology only, still CM.
    SimplicialComplex hollow = make_complex({"a", "b", "c"}, {0b011, 0b101, 0b110});
    CHECK(reisner_cm_check(hollow, FieldSpec::rationals()).cm);
}

TEST_CASE("dual of the H_P complex is CM over three fields") {
    for (int n = 1; n <= 4; ++n)
        for (const Poset& p : canonical_posets(n)) {
            MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
            SimplicialComplex dual = alexander_dual(complex_from_ideal(hp));
            CHECK(reisner_cm_check(dual, FieldSpec::rationals()).cm);
            CHECK(reisner_cm_check(dual, FieldSpec::gf(2)).cm);
            CHECK(reisner_cm_check(dual, FieldSpec::gf(3)).cm);
        }
}

TEST_CASE("pure and strongly connected checks") {
    SimplicialComplex single = make_complex({"a", "b"}, {0b11});
    PureStrongReport rep = pure_strong_check(single);
    CHECK(rep.pure);
    CHECK(rep.strongly_connected);

    SimplicialComplex disjoint = make_complex({"x1", "x2", "y1", "y2"}, {0b0011, 0b1100});
    rep = pure_strong_check(disjoint);
    CHECK(rep.pure);
    CHECK_FALSE(rep.strongly_connected);

    SimplicialComplex impure = make_complex({"a", "b", "c"}, {0b011, 0b100});
    CHECK_FALSE(pure_strong_check(impure).pure);
}

TEST_CASE("reisner verdict matches pure plus strongly connected on small graphs") {
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (const BipartiteGraph& g : all_bipartite(a, b)) {
                SimplicialComplex ind = independence_complex(g);
                PureStrongReport ps = pure_strong_check(ind);
                bool cm = reisner_cm_check(ind, FieldSpec::rationals()).cm;
                CHECK(cm == (ps.pure && ps.strongly_connected));
            }
}

TEST_CASE("parallel and serial Reisner checks agree") {
    Poset p = example_poset();
    MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
    SimplicialComplex dual = alexander_dual(complex_from_ideal(hp));
    CHECK(reisner_cm_check(dual, FieldSpec::rationals(), 16, true).cm ==
          reisner_cm_check(dual, FieldSpec::rationals(), 16, false).cm);
}

TEST_CASE("guards and validation") {
    MonomialIdeal unit;
    unit.variables = {"x"};
    unit.generators = {0};
    CHECK_THROWS_AS(complex_from_ideal(unit), input_error);
    SimplicialComplex c = make_complex({"a", "b", "c"}, {0b111});
    CHECK_THROWS_AS(reisner_cm_check(c, FieldSpec::rationals(), 2), resource_error);
    CHECK_THROWS_AS(make_complex({"a", "a"}, {0b11}), input_error);
}
