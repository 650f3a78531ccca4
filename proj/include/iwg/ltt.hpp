#pragma once

// Lamination train track structures on the rose.
//
// A structure has one vertex per direction.  Black edges join each pair
// {d, bar d} and are implicit.  Colored edges are purple (both ends purple)
// or red (an end at the red vertex).  Every vertex except the red one is
// purple.

#include <optional>
#include <string>
#include <vector>

#include "iwg/rose.hpp"
#include "iwg/rose_map.hpp"
#include "iwg/whitehead.hpp"

namespace iwg {

enum class EdgeColor { Purple, Red };

struct ColoredEdge {
    Turn turn;
    EdgeColor color = EdgeColor::Purple;
    auto operator<=>(const ColoredEdge&) const = default;
};

class LttStructure {
public:
    /// Stores the edges sorted and deduplicated.  No validation; see
    /// validate_ltt.
    LttStructure(Rank rank, Direction red_vertex, std::vector<ColoredEdge> colored_edges);
    LttStructure() : rank_(1), red_vertex_(1) {}

    /// Builds a structure whose colors follow from the red vertex.
    static LttStructure from_turns(Rank rank, Direction red_vertex, const std::vector<Turn>& turns);

    Rank rank() const { return rank_; }
    Direction red_vertex() const { return red_vertex_; }
    const std::vector<ColoredEdge>& colored_edges() const { return edges_; }

    std::vector<Turn> purple_edges() const;
    std::vector<Turn> red_edges() const;
    std::vector<Direction> purple_vertices() const;

    /// The unique red edge; throws std::logic_error if there is not exactly one.
    Turn red_edge() const;
    /// bar of the red edge's purple endpoint (the twice-achieved direction).
    Direction twice_achieved() const;

    bool has_colored_edge(const Turn& t) const;
    std::optional<EdgeColor> color_of(const Turn& t) const;

    auto operator<=>(const LttStructure&) const = default;

private:
    Rank rank_;
    Direction red_vertex_;
    std::vector<ColoredEdge> edges_;
};

struct LttReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

/// Checks ltt1-ltt3, ltt(*)4 and tt1-tt3.  Also rejects a red edge joining
/// the two directions of one petal: its purple end would make the twice
/// achieved direction equal the red vertex.
LttReport validate_ltt(const LttStructure& g);

/// Purple subgraph.
WhiteheadGraph pi_graph(const LttStructure& g);

/// Label-forgetting comparison of the purple subgraph with a target graph.
bool matches_target(const LttStructure& g, const WhiteheadGraph& target);

/// Structure whose colored edges are the turns taken by iterates of m.
/// Requires a train track with exactly one non-periodic direction; throws
/// std::invalid_argument otherwise.
LttStructure ltt_of_map(const RoseMap& m);

// --- smooth paths ----------------------------------------------------------

/// Edges of a structure, numbered: petal i is edge i (black, endpoints
/// 2i+1 and 2i+2), colored edges follow in stored order.  A directed edge is
/// 2*edge + orientation, orientation 0 running from `tail` to `head` of the
/// edge as stored (for colored edges, turn.first to turn.second).
class TransitionDigraph {
public:
    explicit TransitionDigraph(const LttStructure& g);

    int edge_count() const { return static_cast<int>(ends_.size()); }
    int node_count() const { return 2 * edge_count(); }
    bool is_black(int edge) const { return edge < black_count_; }
    Direction tail(int node) const;
    Direction head(int node) const;
    static int reverse(int node) { return node ^ 1; }
    static int edge_of(int node) { return node / 2; }

    /// Nodes f with e -> f a smooth, non-backtracking step.
    const std::vector<int>& successors(int node) const { return succ_[node]; }

    /// Strongly connected components (Tarjan), each sorted.
    std::vector<std::vector<int>> components() const;

private:
    int black_count_;
    std::vector<std::pair<Direction, Direction>> ends_;
    std::vector<std::vector<int>> succ_;
};

struct Birecurrency {
    bool birecurrent = false;
    /// Transition-digraph nodes of a covering component, when birecurrent.
    std::vector<int> witness;
};

/// True iff some strongly connected component with an internal arc uses
/// every edge (black and colored) in at least one orientation.
Birecurrency is_birecurrent(const LttStructure& g);

/// Oracle: searches states (current directed edge, set of edges crossed) for
/// a closed smooth path of length at most `bound` crossing every edge.
bool brute_force_birecurrent(const LttStructure& g, int bound);

/// Smooth path in g realizing the edge path w: the black edge of each letter
/// joined by the colored edge of each turn.  Empty when some turn of w has
/// no colored edge.  Entries are transition-digraph nodes.
std::optional<std::vector<int>> smooth_lift(const LttStructure& g, const EdgePath& w);

/// Colors alternate and no step reverses the previous one.
bool is_smooth(const TransitionDigraph& t, const std::vector<int>& path);

}  // namespace iwg
