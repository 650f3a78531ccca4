#pragma once

// Simple vertex-labelled graphs.  One type serves for local, stable and ideal
// Whitehead graphs (vertices are directions) and for abstract target graphs
// (vertices 0..n-1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwg/rose.hpp"

namespace iwg {

class WhiteheadGraph {
public:
    WhiteheadGraph() = default;
    /// Throws std::invalid_argument on loops or endpoints outside `vertices`.
    /// Duplicate edges are merged.
    WhiteheadGraph(std::vector<int> vertices, std::vector<Turn> edges);

    /// Abstract graph on 0..n-1.
    static WhiteheadGraph on_range(int n, const std::vector<std::pair<int, int>>& edges);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Turn>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(int v) const;
    bool has_edge(int a, int b) const;
    int degree(int v) const;

    /// Induced subgraph on the given vertex subset.
    WhiteheadGraph restricted_to(const std::vector<int>& keep) const;

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    std::vector<std::vector<int>> components() const;
    bool connected() const;

    /// Same graph with every vertex v renamed to relabel(v).
    template <class F>
    WhiteheadGraph relabeled(F&& relabel) const {
        std::vector<int> vs;
        std::vector<Turn> es;
        for (int v : vertices_) vs.push_back(relabel(v));
        for (const Turn& t : edges_) es.emplace_back(relabel(t.first), relabel(t.second));
        return WhiteheadGraph(std::move(vs), std::move(es));
    }

    bool operator==(const WhiteheadGraph&) const = default;

private:
    std::vector<int> vertices_;
    std::vector<Turn> edges_;
};

struct Rational {
    int num = 0;
    int den = 1;
    bool operator==(const Rational&) const = default;
    std::string str() const;
};

/// One entry 1 - k/2 per component with k vertices, sorted ascending.
std::vector<Rational> index_list(const WhiteheadGraph& w);

/// Label-forgetting isomorphism test.  Backtracking over vertex bijections
/// with degree pruning; intended for graphs with at most a dozen vertices.
bool isomorphic(const WhiteheadGraph& a, const WhiteheadGraph& b);

/// An isomorphism a -> b as (vertex of a, vertex of b) pairs, if any.
std::optional<std::vector<std::pair<int, int>>> find_isomorphism(const WhiteheadGraph& a,
                                                                 const WhiteheadGraph& b);

/// Number of automorphisms.
std::uint64_t automorphism_count(const WhiteheadGraph& g);

/// Canonical adjacency code: minimum upper-triangle bit string over all
/// relabelings consistent with a degree ordering.  Two graphs on the same
/// number of vertices are isomorphic iff their codes are equal.
std::uint64_t canonical_code(const WhiteheadGraph& g);

/// Rebuilds a graph on 0..n-1 from a canonical code.
WhiteheadGraph from_canonical_code(int n, std::uint64_t code);

}  // namespace iwg
