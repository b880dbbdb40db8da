#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "generators.hpp"
#include "latres/monomial.hpp"

using namespace latres;
using namespace testgen;

namespace {

std::vector<std::string> generator_strings(const MonomialIdeal& ideal) {
    std::vector<std::string> out;
    for (Mask g : ideal.generators) out.push_back(monomial_string(ideal, g));
    return out;
}

} // namespace

TEST_CASE("u_I of the running example") {
    Poset p = example_poset();
    SquarefreeMonomial u = monomial_of_ideal(p, 0);
    CHECK(u.x_support == 0);
    CHECK(u.y_support == 0b1111);
    Mask bd = bit(p.index_of("b")) | bit(p.index_of("d"));
    u = monomial_of_ideal(p, bd);
    CHECK(u.x_support == bd);
    CHECK(u.y_support == (Mask{0b1111} & ~bd));
    u = monomial_of_ideal(p, 0b1111);
    CHECK(u.y_support == 0);
    CHECK_THROWS_AS(monomial_of_ideal(p, bit(p.index_of("c"))), invalid_ideal_error);
}

TEST_CASE("H_P of the running example matches the printed generators") {
    Poset p = example_poset();
    MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
    CHECK(generator_strings(hp) ==
          std::vector<std::string>{"uvwx", "avwx", "buwx", "abwx", "bduw", "abcx", "abdw",
                                   "abcd"});
}

TEST_CASE("H_P for tiny posets") {
    Poset single = make_poset({"p"}, {});
    MonomialIdeal hp = build_hp(single, enumerate_ideals(single));
    CHECK(generator_strings(hp) == std::vector<std::string>{"y_p", "x_p"});

    Poset chain = make_poset({"p1", "p2"}, {{"p1", "p2"}});
    hp = build_hp(chain, enumerate_ideals(chain));
    CHECK(generator_strings(hp) ==
          std::vector<std::string>{"y_p1*y_p2", "x_p1*y_p2", "x_p1*x_p2"});
}

TEST_CASE("H_P degree and injectivity invariants") {
    for (int n = 1; n <= 4; ++n)
        for (const Poset& p : canonical_posets(n)) {
            DistributiveLattice lat = enumerate_ideals(p);
            MonomialIdeal hp = build_hp(p, lat);
            CHECK(hp.generators.size() == static_cast<std::size_t>(lat.size()));
            std::set<Mask> distinct(hp.generators.begin(), hp.generators.end());
            CHECK(distinct.size() == hp.generators.size());
            for (Mask g : hp.generators) CHECK(popcount(g) == n);
            MonomialIdeal copy = hp;
            minimize_generators(copy);
            CHECK(copy.generators.size() == hp.generators.size());
        }
}

TEST_CASE("lattice operations match monomial products") {
    // u_{I^J} u_{IvJ} = u_I u_J as exponent vectors.
    for (const Poset& p : canonical_posets(4)) {
        DistributiveLattice lat = enumerate_ideals(p);
        for (Mask a : lat.ideals)
            for (Mask b : lat.ideals) {
                SquarefreeMonomial ua = monomial_of_ideal(p, a);
                SquarefreeMonomial ub = monomial_of_ideal(p, b);
                SquarefreeMonomial um = monomial_of_ideal(p, a & b);
                SquarefreeMonomial uj = monomial_of_ideal(p, a | b);
                for (int i = 0; i < p.size(); ++i) {
                    int lhs = ((ua.x_support >> i) & 1) + ((ub.x_support >> i) & 1);
                    int rhs = ((um.x_support >> i) & 1) + ((uj.x_support >> i) & 1);
                    CHECK(lhs == rhs);
                    lhs = ((ua.y_support >> i) & 1) + ((ub.y_support >> i) & 1);
                    rhs = ((um.y_support >> i) & 1) + ((uj.y_support >> i) & 1);
                    CHECK(lhs == rhs);
                }
            }
    }
}

TEST_CASE("minimize_generators removes divisible generators") {
    MonomialIdeal ideal;
    ideal.variables = {"x1", "x2", "y1"};
    ideal.generators = {0b001, 0b011, 0b100, 0b101};
    minimize_generators(ideal);
    CHECK(ideal.generators == std::vector<Mask>{0b001, 0b100});
}

TEST_CASE("linear quotients on two variables") {
    Poset single = make_poset({"p"}, {});
    MonomialIdeal hp = build_hp(single, enumerate_ideals(single));
    auto cert = verify_linear_quotients(hp, {0, 1});
    CHECK(cert.ok);
    REQUIRE(cert.colon_variables.size() == 2);
    CHECK(cert.colon_variables[1] == std::vector<std::string>{"y_p"});
}

TEST_CASE("linear quotients fails with a gap in the chain") {
    MonomialIdeal ideal;
    ideal.variables = {"x1", "x2", "y1", "y2"};
    ideal.generators = {0b1100, 0b0011}; // y1y2 and x1x2
    auto cert = verify_linear_quotients(ideal, {0, 1});
    CHECK_FALSE(cert.ok);
    CHECK(cert.failed_step == 1);
}

TEST_CASE("linear quotients for canonical posets through size 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : canonical_posets(n)) {
            MonomialIdeal hp = build_hp(p, enumerate_ideals(p));
            std::vector<int> order(hp.generators.size());
            std::iota(order.begin(), order.end(), 0);
            auto cert = verify_linear_quotients(hp, order);
            CHECK(cert.ok);
            for (std::size_t k = 1; k < cert.colon_variables.size(); ++k)
                CHECK_FALSE(cert.colon_variables[k].empty());
        }
}

TEST_CASE("monomial_string renders multi-letter variables with separators") {
    MonomialIdeal ideal;
    ideal.variables = {"x_p1", "y_p1"};
    CHECK(monomial_string(ideal, 0b11) == "x_p1*y_p1");
    CHECK(monomial_string(ideal, 0) == "1");
}

TEST_CASE("ordering size mismatch is rejected") {
    Poset single = make_poset({"p"}, {});
    MonomialIdeal hp = build_hp(single, enumerate_ideals(single));
    CHECK_THROWS_AS(verify_linear_quotients(hp, {0}), input_error);
}
