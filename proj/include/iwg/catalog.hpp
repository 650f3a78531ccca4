#pragma once

// Connected simple graphs on n vertices, one per isomorphism class.

#include <cstdint>
#include <string>
#include <vector>

#include "iwg/whitehead.hpp"

namespace iwg {

struct GraphCatalogEntry {
    std::string id;        // "n5-e4-<hex code>"
    std::uint64_t code = 0;
    WhiteheadGraph graph;  // on 0..n-1, rebuilt from the code
};

/// Built by attaching a new vertex to every nonempty subset of vertices of
/// each graph one size smaller; every connected graph has a non-cut vertex.
/// Ordered by edge count, then code.  n <= 9.
std::vector<GraphCatalogEntry> connected_graph_catalog(int n);

/// Edge-subset enumeration with isomorphism rejection; slow, for testing.
std::vector<std::uint64_t> connected_codes_by_edge_subsets(int n);

std::string catalog_id(int n, const WhiteheadGraph& g, std::uint64_t code);

WhiteheadGraph star_graph(int n);
WhiteheadGraph path_graph(int n);
WhiteheadGraph cycle_graph(int n);
WhiteheadGraph complete_graph(int n);

}  // namespace iwg
