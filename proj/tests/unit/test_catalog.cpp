#include <doctest.h>

#include <set>

#include "iwg/catalog.hpp"
#include "oracles.hpp"

using namespace iwg;

TEST_CASE("catalog sizes match brute-force class counts") {
    for (int n = 1; n <= 5; ++n) {
        auto cat = connected_graph_catalog(n);
        CHECK(cat.size() == oracle::connected_class_count(n));
    }
    CHECK(connected_graph_catalog(5).size() == 21);
    CHECK(connected_graph_catalog(6).size() == 112);
    CHECK(connected_graph_catalog(7).size() == 853);
}

TEST_CASE("catalog entries are connected, distinct and stable") {
    auto cat = connected_graph_catalog(5);
    std::set<std::uint64_t> codes;
    for (const auto& e : cat) {
        CHECK(e.graph.connected());
        CHECK(canonical_code(e.graph) == e.code);
        codes.insert(e.code);
    }
    CHECK(codes.size() == cat.size());
    auto by_subsets = connected_codes_by_edge_subsets(5);
    CHECK(std::vector<std::uint64_t>(codes.begin(), codes.end()) == by_subsets);
    auto again = connected_graph_catalog(5);
    for (std::size_t i = 0; i < cat.size(); ++i) CHECK(again[i].id == cat[i].id);
}

TEST_CASE("named graphs") {
    CHECK(star_graph(5).edge_count() == 4);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(star_graph(5).degree(0) == 4);
}
