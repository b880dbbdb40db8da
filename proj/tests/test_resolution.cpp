#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "latres/monomial.hpp"
#include "latres/resolution.hpp"

using namespace latres;
using namespace testgen;

namespace {

void check_all(const Poset& p) {
    DistributiveLattice lat = enumerate_ideals(p);
    FreeComplex f = build_resolution(p, lat);
    CHECK(verify_complex(p, lat, f).pass());
    BettiReport betti = betti_table(p, lat, f);
    CHECK(betti.pass());
    CHECK(strand_exactness(p, lat, f, -1, FieldSpec::rationals()).pass());
    MonomialIdeal hp = build_hp(p, lat);
    auto oracle = taylor_tor_oracle(hp, FieldSpec::rationals(), 16);
    CHECK(f.ranks() == oracle);
    CHECK(multiplicity_checks(p, lat).pass());
}

} // namespace

TEST_CASE("running example resolution has the printed shape") {
    Poset p = example_poset();
    DistributiveLattice lat = enumerate_ideals(p);
    FreeComplex f = build_resolution(p, lat);
    CHECK(f.ranks() == std::vector<long long>{8, 10, 3});
    BettiReport betti = betti_table(p, lat, f);
    REQUIRE(betti.rows.size() == 3);
    CHECK(betti.rows[0].internal_degree == 4);
    CHECK(betti.rows[1].internal_degree == 5);
    CHECK(betti.rows[2].internal_degree == 6);
    CHECK(betti.projective_dimension == 2);
    CHECK(betti.euler == 1);
    CHECK(betti.pass());
}

TEST_CASE("one element poset gives the Koszul complex") {
    Poset p = make_poset({"p"}, {});
    DistributiveLattice lat = enumerate_ideals(p);
    FreeComplex f = build_resolution(p, lat);
    CHECK(f.ranks() == std::vector<long long>{2, 1});
    CHECK(verify_complex(p, lat, f).pass());
    // The single degree-1 column is (x, -y) or (-x, y) up to ordering.
    REQUIRE(f.diff[1].size() == 1);
    CHECK(f.diff[1][0].size() == 2);
}

TEST_CASE("two chain resolution") {
    Poset p = poset_from_strict(2, {{0, 1}});
    DistributiveLattice lat = enumerate_ideals(p);
    FreeComplex f = build_resolution(p, lat);
    CHECK(f.ranks() == std::vector<long long>{3, 2});
    check_all(p);
}

TEST_CASE("basis counts follow the binomial identity") {
    std::mt19937_64 rng(8001);
    for (int t = 0; t < 10; ++t) {
        Poset p = random_poset(rng, 5);
        DistributiveLattice lat = enumerate_ideals(p);
        FreeComplex f = build_resolution(p, lat);
        CHECK(f.ranks() == boolean_interval_counts(p, lat));
    }
}

TEST_CASE("complex verification over random size-5 posets") {
    std::mt19937_64 rng(8002);
    for (int t = 0; t < 15; ++t) {
        Poset p = random_poset(rng, 5);
        DistributiveLattice lat = enumerate_ideals(p);
        FreeComplex f = build_resolution(p, lat);
        CHECK(verify_complex(p, lat, f).pass());
    }
}

TEST_CASE("full checks for every poset through size 3") {
    for (int n = 1; n <= 3; ++n)
        for (const Poset& p : canonical_posets(n)) check_all(p);
}

TEST_CASE("sign rule antisymmetry") {
    Poset p = example_poset();
    auto ext = linear_extension(p);
    std::vector<int> pos(p.size());
    for (int k = 0; k < p.size(); ++k) pos[ext[k]] = k;
    auto sigma = [&](Mask q, int e) {
        int s = 0;
        for (int i = 0; i < p.size(); ++i)
            if (i != e && ((q >> i) & 1) && pos[i] < pos[e]) ++s;
        return s;
    };
    for (Mask l = 0; l < (Mask{1} << p.size()); ++l)
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b) {
                if (a == b || !((l >> a) & 1) || !((l >> b) & 1)) continue;
                int lhs = sigma(l, a) + sigma(l & ~bit(a), b);
                int rhs = sigma(l, b) + sigma(l & ~bit(b), a);
                CHECK((lhs + rhs) % 2 == 1);
            }
}

TEST_CASE("differential signs depend on the extension but ranks do not") {
    Poset p = example_poset();
    DistributiveLattice lat = enumerate_ideals(p);
    FreeComplex a = build_resolution(p, lat);
    FreeComplex b = build_resolution(p, lat, {1, 0, 3, 2});
    CHECK(verify_complex(p, lat, b).pass());
    CHECK(a.ranks() == b.ranks());
    CHECK(strand_exactness(p, lat, b, -1, FieldSpec::rationals()).pass());
}

TEST_CASE("corrupting a sign breaks the complex") {
    Poset p = example_poset();
    DistributiveLattice lat = enumerate_ideals(p);
    FreeComplex f = build_resolution(p, lat);
    f.diff[2][0][0].sign = -f.diff[2][0][0].sign;
    ComplexReport rep = verify_complex(p, lat, f);
    CHECK_FALSE(rep.dd_zero);
    CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("corrupting the differential breaks strand exactness") {
    Poset p = example_poset();
    DistributiveLattice lat = enumerate_ideals(p);
    FreeComplex f = build_resolution(p, lat);
    f.diff[1][0].clear();
    StrandReport rep = strand_exactness(p, lat, f, -1, FieldSpec::rationals());
    CHECK_FALSE(rep.exact);
    CHECK(rep.fail_degree >= p.size());
}

TEST_CASE("Taylor oracle on fixed ideals") {
    MonomialIdeal koszul;
    koszul.variables = {"x", "y"};
    koszul.generators = {0b01, 0b10};
    CHECK(taylor_tor_oracle(koszul, FieldSpec::rationals()) == std::vector<long long>{2, 1});

    MonomialIdeal chain; // y1y2, x1y2, x1x2 over x1,x2,y1,y2
    chain.variables = {"x1", "x2", "y1", "y2"};
    chain.generators = {0b1100, 0b1001, 0b0011};
    CHECK(taylor_tor_oracle(chain, FieldSpec::rationals()) == std::vector<long long>{3, 2});
}

TEST_CASE("blocked and direct Taylor oracles agree") {
    std::mt19937_64 rng(8003);
    for (int t = 0; t < 8; ++t) {
        Poset p = random_poset(rng, 4);
        MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
        if (hp.generators.size() > 12) continue;
        auto a = taylor_tor_oracle(hp, FieldSpec::rationals());
        auto b = taylor_tor_oracle_direct(hp, FieldSpec::rationals());
        CHECK(a == b);
    }
}

TEST_CASE("Taylor oracle agrees across fields") {
    for (const Poset& p : canonical_posets(3)) {
        MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
        auto rational = taylor_tor_oracle(hp, FieldSpec::rationals());
        CHECK(rational == taylor_tor_oracle(hp, FieldSpec::gf(32003)));
        CHECK(rational == taylor_tor_oracle(hp, FieldSpec::gf(2)));
    }
}

TEST_CASE("parallel and serial kernels agree") {
    Poset p = example_poset();
    DistributiveLattice lat = enumerate_ideals(p);
    FreeComplex f = build_resolution(p, lat);
    StrandReport s1 = strand_exactness(p, lat, f, -1, FieldSpec::rationals(), true);
    StrandReport s0 = strand_exactness(p, lat, f, -1, FieldSpec::rationals(), false);
    CHECK(s1.exact == s0.exact);
    MonomialIdeal hp = build_hp(p, lat);
    CHECK(taylor_tor_oracle(hp, FieldSpec::rationals(), 14, true) ==
          taylor_tor_oracle(hp, FieldSpec::rationals(), 14, false));
}

TEST_CASE("multiplicity formulas") {
    Poset p = example_poset();
    MultiplicityReport rep = multiplicity_checks(p, enumerate_ideals(p));
    CHECK(rep.pair_count == 7);
    CHECK(rep.formula_value == 7);
    CHECK(rep.height_two_checked);
    CHECK(rep.pass());

    Poset single = make_poset({"p"}, {});
    rep = multiplicity_checks(single, enumerate_ideals(single));
    CHECK(rep.pair_count == 1);
    CHECK(rep.formula_value == 1);
    CHECK(rep.pass());

    Poset anti2 = poset_from_strict(2, {});
    rep = multiplicity_checks(anti2, enumerate_ideals(anti2));
    CHECK(rep.pair_count == 2);
    CHECK(rep.formula_value == 2);
    CHECK(rep.pass());
}

TEST_CASE("resource guards") {
    Poset p = example_poset();
    DistributiveLattice lat = enumerate_ideals(p);
    CHECK_THROWS_AS(build_resolution(p, lat, std::size_t{5}), resource_error);
    MonomialIdeal hp = build_hp(p, lat);
    CHECK_THROWS_AS(taylor_tor_oracle(hp, FieldSpec::rationals(), 4), resource_error);
}
