#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "latres/bipartite.hpp"

using namespace latres;
using namespace testgen;

namespace {

BipartiteGraph k22() {
    return make_bipartite({"x1", "x2"}, {"y1", "y2"},
                          {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

bool disjoint_edges(const BipartiteGraph& g) {
    if (g.left.size() != g.right.size() || g.edges.size() != g.left.size()) return false;
    std::set<int> ls, rs;
    for (const auto& [l, r] : g.edges) {
        ls.insert(l);
        rs.insert(r);
    }
    return ls.size() == g.edges.size() && rs.size() == g.edges.size();
}

} // namespace

TEST_CASE("graph of the running example poset") {
    BipartiteGraph g = graph_of_poset(example_poset());
    CHECK(g.edges.size() == 7);
    CHECK(g.has_edge(0, 2)); // a <= c
    CHECK_FALSE(g.has_edge(2, 0));
}

TEST_CASE("graph of a chain is a path") {
    Poset chain = make_poset({"p1", "p2"}, {{"p1", "p2"}});
    BipartiteGraph g = graph_of_poset(chain);
    std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
    CHECK(edges == std::set<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("graph of an antichain is a perfect matching") {
    BipartiteGraph g = graph_of_poset(poset_from_strict(3, {}));
    CHECK(disjoint_edges(g));
}

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(make_bipartite({"a"}, {"b"}, {}), input_error);
    CHECK_THROWS_AS(make_bipartite({"a", "c"}, {"b"}, {{0, 0}}), input_error);
    CHECK_THROWS_AS(make_bipartite({"a"}, {"b"}, {{0, 5}}), input_error);
    CHECK_THROWS_AS(make_bipartite({"a"}, {"a"}, {{0, 0}}), input_error);
}

TEST_CASE("cover analysis") {
    CoverReport rep = cover_analysis(k22());
    REQUIRE(rep.minimal_covers.size() == 2);
    CHECK(std::set<Mask>(rep.minimal_covers.begin(), rep.minimal_covers.end()) ==
          std::set<Mask>{0b0011, 0b1100});
    CHECK(rep.unmixed);

    BipartiteGraph single = make_bipartite({"x1"}, {"y1"}, {{0, 0}});
    rep = cover_analysis(single);
    CHECK(rep.minimal_covers.size() == 2);
    CHECK(rep.unmixed);

    BipartiteGraph path = make_bipartite({"x1"}, {"y1", "y2"}, {{0, 0}, {0, 1}});
    rep = cover_analysis(path);
    CHECK(rep.minimal_covers.size() == 2);
    CHECK_FALSE(rep.unmixed);
}

TEST_CASE("K22 is not CM") {
    RecognitionResult res = recognize_cm(k22());
    CHECK_FALSE(res.cm);
    CHECK(res.failure_witness.find("antisymmetry") != std::string::npos);
    CHECK(res.matchings_tried == 2);
    CHECK_THROWS_AS(gorenstein_and_type(res), usage_error);
}

TEST_CASE("unequal parts are rejected immediately") {
    BipartiteGraph path = make_bipartite({"x1"}, {"y1", "y2"}, {{0, 0}, {0, 1}});
    RecognitionResult res = recognize_cm(path);
    CHECK_FALSE(res.cm);
    CHECK(res.matchings_tried == 0);
}

TEST_CASE("round trip through graph_of_poset") {
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : canonical_posets(n)) {
            RecognitionResult res = recognize_cm(graph_of_poset(p));
            REQUIRE(res.cm);
            CHECK(poset_isomorphic(res.poset, p));
            GorensteinReport gor = gorenstein_and_type(res);
            bool antichain = p.relation_pair_count() == p.size();
            CHECK(gor.gorenstein == antichain);
            CHECK(gor.gorenstein == disjoint_edges(res.graph));
        }
}

TEST_CASE("CM type of the running example is 3") {
    RecognitionResult res = recognize_cm(graph_of_poset(example_poset()));
    REQUIRE(res.cm);
    GorensteinReport gor = gorenstein_and_type(res);
    CHECK(gor.cm_type == 3);
    CHECK_FALSE(gor.gorenstein);
}

TEST_CASE("disjoint edges are Gorenstein of type 1") {
    BipartiteGraph g =
        make_bipartite(part_labels('x', 3), part_labels('y', 3), {{0, 0}, {1, 1}, {2, 2}});
    RecognitionResult res = recognize_cm(g);
    REQUIRE(res.cm);
    CHECK(res.poset.relation_pair_count() == 3);
    GorensteinReport gor = gorenstein_and_type(res);
    CHECK(gor.gorenstein);
    CHECK(gor.cm_type == 1);
}

TEST_CASE("chain of 3 has type 3") {
    Poset chain = poset_from_strict(3, {{0, 1}, {1, 2}});
    RecognitionResult res = recognize_cm(graph_of_poset(chain));
    REQUIRE(res.cm);
    CHECK(gorenstein_and_type(res).cm_type == 3);
}

TEST_CASE("recognizer agrees with the Reisner oracle exhaustively") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const BipartiteGraph& g : all_bipartite(a, b)) {
                RecognitionResult res = recognize_cm(g);
                bool oracle = reisner_cm_check(independence_complex(g),
                                               FieldSpec::rationals())
                                  .cm;
                CHECK(res.cm == oracle);
                if (res.cm) CHECK(cover_analysis(g).unmixed);
            }
}

TEST_CASE("recognizer agrees with the Reisner oracle on random graphs") {
    std::mt19937_64 rng(10001);
    for (int t = 0; t < 50; ++t) {
        BipartiteGraph g = random_bipartite(rng, 4, 4);
        RecognitionResult res = recognize_cm(g);
        bool oracle = reisner_cm_check(independence_complex(g), FieldSpec::rationals()).cm;
        CHECK(res.cm == oracle);
    }
}

TEST_CASE("Hall condition holds for unmixed graphs") {
    for (const BipartiteGraph& g : all_bipartite(3, 3)) {
        if (!cover_analysis(g).unmixed) continue;
        const int nl = static_cast<int>(g.left.size());
        for (Mask u = 1; u < (Mask{1} << nl); ++u) {
            Mask nbhd = 0;
            for (const auto& [l, r] : g.edges)
                if ((u >> l) & 1) nbhd |= bit(r);
            CHECK(popcount(u) <= popcount(nbhd));
        }
    }
}

TEST_CASE("matching guard") {
    BipartiteGraph g = make_bipartite(part_labels('x', 4), part_labels('y', 4),
                                      [] {
                                          std::vector<std::pair<int, int>> e;
                                          for (int l = 0; l < 4; ++l)
                                              for (int r = 0; r < 4; ++r) e.emplace_back(l, r);
                                          return e;
                                      }());
    CHECK_THROWS_AS(recognize_cm(g, 3), resource_error);
}
