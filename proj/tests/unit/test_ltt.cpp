#include <doctest.h>

#include <random>

#include "iwg/catalog.hpp"
#include "iwg/id_diagram.hpp"
#include "iwg/ltt.hpp"
#include "oracles.hpp"

using namespace iwg;

namespace {
const Alphabet al;
Direction D(const char* s) { return al.parse_direction(s); }

RoseMap worked_example() {
    return RoseMap(Rank(3), {al.parse_path("abacbabac'abacbaba"), al.parse_path("bac'"),
                             al.parse_path("ca'b'a'b'a'b'c'a'b'a'c")});
}

LttStructure purple_cycle_r2() {
    // r = 2, red vertex b', purple triangle on a, a', b.
    return LttStructure::from_turns(Rank(2), 4, {{1, 2}, {2, 3}, {1, 3}, {4, 1}});
}
}  // namespace

TEST_CASE("structure accessors") {
    LttStructure g = purple_cycle_r2();
    CHECK(g.red_vertex() == 4);
    CHECK(g.red_edge() == Turn(1, 4));
    CHECK(g.twice_achieved() == 2);
    CHECK(g.purple_edges().size() == 3);
    CHECK(g.purple_vertices() == std::vector<Direction>{1, 2, 3});
    CHECK(g.color_of(Turn(1, 4)) == EdgeColor::Red);
    CHECK(g.color_of(Turn(1, 2)) == EdgeColor::Purple);
    CHECK_FALSE(g.color_of(Turn(3, 4)));
    CHECK(validate_ltt(g).valid());
}

TEST_CASE("validation rejects malformed structures") {
    Rank r(2);
    CHECK_FALSE(validate_ltt(LttStructure::from_turns(r, 4, {{1, 2}, {2, 3}, {1, 3}})).valid());
    CHECK_FALSE(
        validate_ltt(LttStructure::from_turns(r, 4, {{1, 2}, {2, 3}, {1, 3}, {4, 1}, {4, 2}})).valid());
    CHECK_FALSE(validate_ltt(LttStructure::from_turns(r, 4, {{1, 2}, {2, 3}, {4, 3}})).valid());
    CHECK_FALSE(validate_ltt(LttStructure(r, 4, {{Turn(1, 2), EdgeColor::Red}, {Turn(4, 1), EdgeColor::Red}}))
                    .valid());
}

TEST_CASE("structure of the worked example") {
    LttStructure g = ltt_of_map(worked_example());
    CHECK(validate_ltt(g).valid());
    CHECK(g.red_vertex() == D("b'"));
    CHECK(g.red_edge() == Turn(D("a"), D("b'")));
    CHECK(g.purple_edges().size() == 5);
    CHECK(matches_target(g, ideal_whitehead_graph(worked_example())));
    CHECK(is_birecurrent(g).birecurrent);
    CHECK(brute_force_birecurrent(g, 2 * TransitionDigraph(g).node_count()));
    CHECK_THROWS_AS(ltt_of_map(RoseMap::identity(Rank(3))), std::invalid_argument);
}

TEST_CASE("transition digraph") {
    LttStructure g = purple_cycle_r2();
    TransitionDigraph t(g);
    CHECK(t.edge_count() == 6);
    CHECK(t.node_count() == 12);
    CHECK(t.is_black(0));
    CHECK_FALSE(t.is_black(2));
    for (int v = 0; v < t.node_count(); ++v) {
        CHECK(t.tail(TransitionDigraph::reverse(v)) == t.head(v));
        for (int w : t.successors(v)) {
            CHECK(t.head(v) == t.tail(w));
            CHECK(t.is_black(TransitionDigraph::edge_of(v)) != t.is_black(TransitionDigraph::edge_of(w)));
            CHECK(w != TransitionDigraph::reverse(v));
        }
    }
    std::size_t covered = 0;
    for (const auto& c : t.components()) covered += c.size();
    CHECK(covered == 12);
}

TEST_CASE("no structure over the rank-3 star is birecurrent") {
    auto all = enumerate_structures(star_graph(5), Rank(3), false);
    CHECK_FALSE(all.empty());
    for (const LttStructure& g : all) {
        CHECK_FALSE(is_birecurrent(g).birecurrent);
        CHECK_FALSE(brute_force_birecurrent(g, 2 * TransitionDigraph(g).node_count()));
    }
}

TEST_CASE("birecurrency agrees with path search on enumerated structures") {
    Rank r(3);
    int birecurrent = 0, total = 0;
    for (const auto& entry : connected_graph_catalog(5)) {
        if (entry.graph.edge_count() > 6) continue;
        for (const LttStructure& g : enumerate_structures(entry.graph, r, false)) {
            bool fast = is_birecurrent(g).birecurrent;
            CHECK(fast == brute_force_birecurrent(g, 2 * TransitionDigraph(g).node_count()));
            birecurrent += fast;
            ++total;
        }
    }
    CHECK(total > 1000);
    CHECK(birecurrent > 0);
}

TEST_CASE("edge images lift to smooth paths") {
    LttStructure g = ltt_of_map(worked_example());
    TransitionDigraph t(g);
    for (Direction d = 1; d <= 6; ++d) {
        auto lift = smooth_lift(g, worked_example().image(d));
        REQUIRE(lift);
        CHECK(lift->size() == 2 * worked_example().image(d).size() - 1);
        CHECK(is_smooth(t, *lift));
    }
    CHECK_FALSE(smooth_lift(g, al.parse_path("ab'")));
    CHECK(smooth_lift(g, al.parse_path("a")));
}

TEST_CASE("random ideal-shaped maps lift smoothly") {
    std::mt19937 rng(17);
    int accepted = 0;
    for (int trial = 0; trial < 3000 && accepted < 40; ++trial) {
        Rank r(3);
        RoseMap m = RoseMap::identity(r);
        for (const Generator& gen : oracle::random_generators(r, 3 + trial % 6, rng))
            m = compose(gen.as_map(r), m);
        LttStructure g;
        try {
            g = ltt_of_map(m);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++accepted;
        TransitionDigraph t(g);
        for (Direction d = 1; d <= r.directions(); ++d) {
            auto lift = smooth_lift(g, m.image(d));
            REQUIRE(lift);
            CHECK(is_smooth(t, *lift));
        }
    }
    CHECK(accepted > 5);
}
