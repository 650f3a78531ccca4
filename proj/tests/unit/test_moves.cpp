#include <doctest.h>

#include "iwg/catalog.hpp"
#include "iwg/epp.hpp"
#include "iwg/id_diagram.hpp"
#include "iwg/moves.hpp"

using namespace iwg;

namespace {
const Rank r3(3);
// x, y, z are a, b, c.
const Direction x = 1, xb = 2, y = 3, yb = 4, z = 5, zb = 6;

LttStructure g2() {
    return LttStructure::from_turns(r3, xb, {{zb, y}, {zb, yb}, {zb, z}, {x, y}, {xb, z}});
}

std::vector<GeneratingTriple> all_moves(const std::vector<LttStructure>& structures) {
    std::vector<GeneratingTriple> out;
    for (const LttStructure& dest : structures)
        for (const Turn& det : determining_edges(dest))
            for (MoveKind k : {MoveKind::Extension, MoveKind::Switch}) {
                try {
                    out.push_back(make_move(k, dest, det));
                } catch (const std::invalid_argument&) {
                }
            }
    return out;
}
}  // namespace

TEST_CASE("generator and determining edges of a destination") {
    LttStructure g = g2();
    REQUIRE(validate_ltt(g).valid());
    CHECK(generator_for(g) == Generator(r3, zb, xb));
    CHECK(determining_edges(g) == std::vector<Turn>{{y, zb}, {yb, zb}, {z, zb}});
    // x -> xz on petals.
    CHECK(generator_for(g).as_map(r3).images()[0] == EdgePath{x, z});
}

TEST_CASE("switch along a determining edge") {
    GeneratingTriple t = switch_move(g2(), Turn(zb, yb));
    CHECK(t.gen == Generator(r3, zb, xb));
    CHECK(t.dest == g2());
    CHECK(t.source.red_vertex() == zb);
    CHECK(t.source.red_edge() == Turn(zb, yb));
    CHECK(t.source.purple_edges() == std::vector<Turn>{{x, y}, {xb, y}, {xb, yb}, {xb, z}});
    CHECK(validate_ltt(t.source).valid());
    CHECK(classify(t) == MoveKind::Switch);

    AmReport am = check_am(t);
    CHECK(am.valid_structures);
    CHECK(am.II);
    CHECK(am.III);
    CHECK(am.IV);
    CHECK(am.V);
    CHECK(am.VI);
    CHECK(am.VII);
    CHECK(induced_colored_map(t).ok());
}

TEST_CASE("extension along a determining edge") {
    GeneratingTriple t = extension(g2(), Turn(zb, yb));
    CHECK(t.source.red_vertex() == xb);
    CHECK(t.source.red_edge() == Turn(xb, yb));
    CHECK(t.source.purple_edges() == g2().purple_edges());
    CHECK(classify(t) == MoveKind::Extension);
    CHECK_THROWS_AS(extension(g2(), Turn(x, y)), std::invalid_argument);
    CHECK_THROWS_AS(switch_move(g2(), Turn(x, y)), std::invalid_argument);
}

TEST_CASE("check_am flags broken triples") {
    GeneratingTriple t = switch_move(g2(), Turn(zb, yb));
    GeneratingTriple wrong_gen = t;
    wrong_gen.gen = Generator(r3, z, xb);
    CHECK_FALSE(check_am(wrong_gen).all());
    CHECK_FALSE(classify(wrong_gen));

    GeneratingTriple swapped{t.gen, t.dest, t.source};
    CHECK_FALSE(check_am(swapped).III);
    CHECK_FALSE(is_admissible(swapped));
    CHECK_FALSE(check_am(swapped).failures().empty());
}

TEST_CASE("AM properties hold exactly for admissible moves") {
    Rank r(3);
    int admissible = 0, checked = 0;
    for (const auto& entry : connected_graph_catalog(5)) {
        if (entry.graph.edge_count() != 5) continue;
        auto structures = enumerate_structures(entry.graph, r, false);
        for (const GeneratingTriple& t : all_moves(structures)) {
            bool am = check_am(t).all();
            CHECK(am == is_admissible(t));
            CHECK(classify(t).has_value());
            admissible += am;
            ++checked;
        }
    }
    CHECK(checked > 1000);
    CHECK(admissible > 0);
}

TEST_CASE("moves commute with edge pair permutations") {
    auto group = epp_group(r3);
    CHECK(group.size() == 48);
    GeneratingTriple base = switch_move(g2(), Turn(zb, yb));
    for (const auto& p : group) {
        LttStructure d = epp_apply(p, g2());
        Turn det = epp_apply(p, Turn(zb, yb));
        CHECK(switch_move(d, det) == epp_apply(p, base));
        CHECK(extension(d, det) == epp_apply(p, extension(g2(), Turn(zb, yb))));
        CHECK(check_am(epp_apply(p, base)).all() == check_am(base).all());
        CHECK(epp_canonical(d) == epp_canonical(g2()));
        CHECK(epp_apply(epp_inverse(p), d) == g2());
    }
}
