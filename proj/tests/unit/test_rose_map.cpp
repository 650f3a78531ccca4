#include <doctest.h>

#include <algorithm>
#include <random>

#include "iwg/rose_map.hpp"
#include "oracles.hpp"

using namespace iwg;

namespace {
const Alphabet al;
EdgePath P(const char* s) { return al.parse_path(s); }

RoseMap map_of(int r, std::vector<const char*> words) {
    std::vector<EdgePath> images;
    for (const char* w : words) images.push_back(P(w));
    return RoseMap(Rank(r), std::move(images));
}

RoseMap worked_example() { return map_of(3, {"abacbabac'abacbaba", "bac'", "ca'b'a'b'a'b'c'a'b'a'c"}); }

RoseMap compose_generators(Rank r, const std::vector<Generator>& gens) {
    RoseMap m = RoseMap::identity(r);
    for (const Generator& g : gens) m = compose(g.as_map(r), m);
    return m;
}

bool cancels_along_the_way(Rank r, const std::vector<Generator>& gens) {
    RoseMap m = RoseMap::identity(r);
    for (const Generator& g : gens) {
        for (const EdgePath& w : m.images())
            if (iwg::apply(g.as_map(r), w).cancelled) return true;
        m = compose(g.as_map(r), m);
    }
    return false;
}

std::set<std::set<int>> as_sets(const std::vector<std::vector<Direction>>& gs) {
    std::set<std::set<int>> out;
    for (const auto& g : gs) out.insert(std::set<int>(g.begin(), g.end()));
    return out;
}
}  // namespace

TEST_CASE("construction rejects bad images") {
    CHECK_THROWS_AS(map_of(2, {"ab", ""}), std::invalid_argument);
    CHECK_THROWS_AS(map_of(2, {"aa'b", "b"}), std::invalid_argument);
    CHECK_THROWS_AS(map_of(2, {"ac", "b"}), std::invalid_argument);
    CHECK_THROWS(Generator(Rank(2), 1, 1));
    CHECK_THROWS(Generator(Rank(2), 2, 1));
}

TEST_CASE("apply and compose agree with string substitution") {
    RoseMap m = map_of(2, {"ab", "ba"});
    CHECK(iwg::apply(m, P("a")).path == P("ab"));
    CHECK(iwg::apply(m, P("a'")).path == P("b'a'"));
    CHECK_FALSE(iwg::apply(m, P("ab'")).cancelled);
    Applied x = iwg::apply(map_of(2, {"ab", "b"}), P("ab'"));
    CHECK(x.path == P("a"));
    CHECK(x.cancelled);
    RoseMap sq = compose(m, m);
    CHECK(oracle::words_of(sq) == std::vector<std::string>{"abba", "baab"});
    CHECK(compose(RoseMap::identity(Rank(2)), m) == m);
    CHECK(compose(m, RoseMap::identity(Rank(2))) == m);
    CHECK(power(m, 3) == compose(m, sq));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Rank r(2 + trial % 3);
        RoseMap outer = compose_generators(r, oracle::random_generators(r, 1 + trial % 4, rng));
        RoseMap inner = compose_generators(r, oracle::random_generators(r, 1 + trial % 5, rng));
        auto ow = oracle::words_of(outer);
        std::vector<std::string> want;
        for (const auto& w : oracle::words_of(inner)) want.push_back(oracle::substitute(ow, w));
        CHECK(oracle::words_of(compose(outer, inner)) == want);
    }
}

TEST_CASE("compose rejects collapse and rank mismatch") {
    RoseMap m = map_of(2, {"a", "a"});
    CHECK_THROWS_AS(compose(m, map_of(2, {"ab'", "b"})), std::domain_error);
    CHECK_THROWS_AS(compose(m, RoseMap::identity(Rank(3))), std::invalid_argument);
}

TEST_CASE("direction map on the worked example") {
    RoseMap g = worked_example();
    DirectionMap dg = direction_map(g);
    CHECK(dg[al.parse_direction("b'")] == al.parse_direction("c"));
    CHECK(dg[al.parse_direction("a")] == al.parse_direction("a"));
    auto want = oracle::direction_map(oracle::words_of(g));
    for (Direction d = 1; d <= 6; ++d) CHECK(dg[d] == want[d]);

    PeriodicDirections pf = periodic_and_fixed_directions(g);
    CHECK(pf.fixed == std::vector<Direction>{1, 2, 3, 5, 6});
    CHECK(pf.periodic == pf.fixed);
}

TEST_CASE("periodic and fixed directions of a rotation") {
    RoseMap m = map_of(2, {"b", "a'"});
    DirectionMap dg = direction_map(m);
    CHECK(dg[1] == 3);
    CHECK(dg[3] == 2);
    CHECK(dg[2] == 4);
    CHECK(dg[4] == 1);
    PeriodicDirections pf = periodic_and_fixed_directions(m);
    CHECK(pf.periodic == std::vector<Direction>{1, 2, 3, 4});
    CHECK(pf.fixed.empty());
    CHECK(gates(m).size() == 4);
}

TEST_CASE("gates") {
    CHECK(as_sets(gates(worked_example())) == std::set<std::set<int>>{{1}, {2}, {3}, {4, 5}, {6}});
    CHECK(gates(RoseMap::identity(Rank(3))).size() == 6);

    Rank r(4);
    for (Direction u = 1; u <= 8; ++u)
        for (Direction a = 1; a <= 8; ++a) {
            if (a == u || a == bar(u)) continue;
            auto gs = gates(Generator(r, a, u).as_map(r));
            CHECK(gs.size() == 7);
            CHECK(as_sets(gs).count({std::min(a, u), std::max(a, u)}) == 1);
        }

    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        Rank rr(2 + trial % 4);
        RoseMap m = compose_generators(rr, oracle::random_generators(rr, 1 + trial % 6, rng));
        CHECK(as_sets(gates(m)) == oracle::gates(oracle::words_of(m)));
    }
}

TEST_CASE("turn closure on the worked example") {
    TurnClosure c = turns_taken_closure(worked_example());
    CHECK_FALSE(c.degenerate_witness);
    auto D = [](const char* x) { return al.parse_direction(x); };
    TurnSet want{{D("a"), D("b'")}, {D("a'"), D("c'")}, {D("b"), D("a'")},
                 {D("b"), D("c'")}, {D("c"), D("a'")}, {D("a"), D("c")}};
    CHECK(c.turns == want);
    CHECK(turns_taken_closure(RoseMap::identity(Rank(3))).turns.empty());
}

TEST_CASE("turn closure matches iteration once iteration stabilises") {
    std::mt19937 rng(3);
    int compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Rank r(2 + trial % 3);
        auto gens = oracle::random_generators(r, 2 + trial % 4, rng);
        RoseMap m = compose_generators(r, gens);
        if (!is_train_track(m).train_track) continue;
        TurnClosure c = turns_taken_closure(m);
        REQUIRE_FALSE(c.degenerate_witness);
        auto words = oracle::words_of(m);
        auto t4 = oracle::turns_by_iteration(words, 4);
        auto t5 = oracle::turns_by_iteration(words, 5);
        std::set<Turn> got4;
        for (auto [x, y] : t4) got4.insert(Turn(x, y));
        for (const Turn& t : got4) CHECK(c.turns.count(t) == 1);
        if (t4 == t5) {
            ++compared;
            CHECK(got4 == c.turns);
        }
    }
    CHECK(compared > 20);
}

TEST_CASE("train track check") {
    CHECK(is_train_track(worked_example()).train_track);
    CHECK(is_train_track(RoseMap::identity(Rank(2))).train_track);

    RoseMap m = map_of(2, {"ab", "b'a'"});
    TrainTrackVerdict v = is_train_track(m);
    CHECK_FALSE(v.train_track);
    REQUIRE(v.illegal_turn);
    CHECK(is_illegal(gates(m), *v.illegal_turn));

    std::mt19937 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        Rank r(2 + trial % 3);
        RoseMap g = compose_generators(r, oracle::random_generators(r, 1 + trial % 5, rng));
        if (!is_train_track(g).train_track) continue;
        for (int k = 1; k <= 4; ++k) {
            RoseMap gk = power(g, k);
            for (const EdgePath& w : g.images()) CHECK_FALSE(iwg::apply(gk, w).cancelled);
            if (std::any_of(gk.images().begin(), gk.images().end(),
                            [](const EdgePath& w) { return w.size() > 20000; }))
                break;
        }
    }
}

TEST_CASE("local and stable Whitehead graphs of the worked example") {
    WhiteheadGraph lw = local_whitehead_graph(worked_example());
    CHECK(lw.edge_count() == 6);
    CHECK(lw.has_edge(1, 4));
    WhiteheadGraph sw = stable_whitehead_graph(worked_example());
    CHECK(sw.edge_count() == 5);
    CHECK_FALSE(sw.has_vertex(4));
    for (const Turn& t : sw.edges()) CHECK(lw.has_edge(t.first, t.second));
    CHECK(ideal_whitehead_graph(worked_example()) == sw);
    CHECK_THROWS_AS(local_whitehead_graph(map_of(2, {"ab", "b'a'"})), std::invalid_argument);
}

TEST_CASE("fold decomposition of a single generator") {
    Rank r(2);
    Generator g(r, 4, 2);
    CHECK(oracle::words_of(g.as_map(r)) == std::vector<std::string>{"ab", "b"});
    FoldResult fr = stallings_fold_decomposition(g.as_map(r));
    REQUIRE(std::holds_alternative<FoldDecomposition>(fr));
    const auto& d = std::get<FoldDecomposition>(fr);
    CHECK(d.generators == std::vector<Generator>{g});
    CHECK(d.final_permutation.is_identity());
}

TEST_CASE("fold decomposition recovers two generators in order") {
    Rank r(3);
    Generator g1(r, 4, 2), g2(r, 6, 4);
    RoseMap m = compose(g2.as_map(r), g1.as_map(r));
    CHECK(oracle::words_of(m) == std::vector<std::string>{"abc", "bc", "c"});
    FoldResult fr = stallings_fold_decomposition(m);
    REQUIRE(std::holds_alternative<FoldDecomposition>(fr));
    CHECK(std::get<FoldDecomposition>(fr).generators == std::vector<Generator>{g1, g2});
}

TEST_CASE("fold decomposition reports a partial fold") {
    FoldResult fr = stallings_fold_decomposition(map_of(2, {"a", "b'b'ab"}));
    REQUIRE(std::holds_alternative<NotProperFullFolds>(fr));
    CHECK(std::get<NotProperFullFolds>(fr).step == 0);
    CHECK(std::get<NotProperFullFolds>(fr).description.find("partial fold") != std::string::npos);

    // Composition with cancellation leaves only partial folds.
    fr = stallings_fold_decomposition(map_of(4, {"abb", "aba'", "ab'a'c", "d"}));
    CHECK(std::holds_alternative<NotProperFullFolds>(fr));
}

TEST_CASE("fold decomposition round-trips and absorbs permutations") {
    std::mt19937 rng(21);
    int clean = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Rank r(3 + trial % 3);
        auto gens = oracle::random_generators(r, 2 + trial % 7, rng);
        RoseMap m = compose_generators(r, gens);
        FoldResult fr = stallings_fold_decomposition(m);
        if (auto* d = std::get_if<FoldDecomposition>(&fr)) {
            CHECK(d->compose_all() == m);
        } else {
            CHECK(cancels_along_the_way(r, gens));
        }
        if (!cancels_along_the_way(r, gens)) {
            ++clean;
            CHECK(std::holds_alternative<FoldDecomposition>(fr));
        }
    }
    CHECK(clean > 100);

    Rank r(3);
    EdgePermutation p{{3, 6, 2}};
    RoseMap m = compose(p.as_map(r), Generator(r, 3, 1).as_map(r));
    FoldResult fr = stallings_fold_decomposition(m);
    REQUIRE(std::holds_alternative<FoldDecomposition>(fr));
    CHECK(std::get<FoldDecomposition>(fr).final_permutation == p);
    CHECK(std::get<FoldDecomposition>(fr).compose_all() == m);
}

TEST_CASE("the worked example decomposes ideally") {
    FoldResult fr = stallings_fold_decomposition(worked_example());
    REQUIRE(std::holds_alternative<FoldDecomposition>(fr));
    const auto& d = std::get<FoldDecomposition>(fr);
    CHECK(d.compose_all() == worked_example());
    DecompositionReport rep = validate_ideal_decomposition(d);
    CHECK(rep.ideal());
    CHECK(rep.violations.size() ==
          static_cast<std::size_t>(!rep.am_unachieved_every_pair + !rep.am_twice_achieved_every_pair));
}

TEST_CASE("ideal decomposition validation") {
    Rank r(3);
    FoldDecomposition empty;
    empty.rank = r;
    empty.final_permutation = EdgePermutation::identity(r);
    DecompositionReport rep = validate_ideal_decomposition(empty);
    CHECK_FALSE(rep.nonempty);
    CHECK_FALSE(rep.ideal());

    FoldDecomposition rep3;
    rep3.rank = r;
    rep3.final_permutation = EdgePermutation::identity(r);
    rep3.generators.assign(3, Generator(r, 3, 1));
    rep = validate_ideal_decomposition(rep3);
    CHECK(rep.generator_shapes);
    CHECK(rep.fixes_all_but_last_u);
    CHECK(rep.last_u_not_fixed);
    CHECK_FALSE(rep.am_unachieved_every_pair);
    CHECK_FALSE(rep.am_twice_achieved_every_pair);
    CHECK_FALSE(rep.all());

    rep3.final_permutation = EdgePermutation{{3, 1, 5}};
    CHECK_FALSE(validate_ideal_decomposition(rep3).trivial_permutation);
}
