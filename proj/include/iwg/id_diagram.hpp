#pragma once

// Structure enumeration for a target graph, the preliminary diagram of
// admissible moves, its strongly connected part, and the tests run on it.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iwg/ltt.hpp"
#include "iwg/moves.hpp"
#include "iwg/whitehead.hpp"

namespace iwg {

class InvalidTarget : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws InvalidTarget unless g is connected, simple and has 2r-1 vertices.
void validate_target(const WhiteheadGraph& g, Rank rank);

/// Every structure whose purple subgraph is isomorphic to the target: a red
/// vertex, a labelling of the remaining directions by target vertices and a
/// red edge to a purple vertex other than the red vertex's partner.  Sorted.
std::vector<LttStructure> enumerate_structures(const WhiteheadGraph& target, Rank rank,
                                               bool admissible_only);

struct DiagramEdge {
    int source = 0;
    int dest = 0;
    MoveKind kind = MoveKind::Extension;
    Turn det;
    GeneratingTriple triple;
};

struct Component {
    std::vector<int> nodes;
    std::vector<int> edges;
    std::vector<Direction> red_census;  // red vertices of the nodes, sorted
};

struct IdDiagram {
    Rank rank{1};
    std::vector<LttStructure> nodes;  // sorted
    std::vector<DiagramEdge> edges;   // sorted by (source, dest, kind, det)
    std::vector<Component> components;

    std::optional<int> find(const LttStructure& g) const;
};

/// Nodes are the admissible structures; each node gets an incoming edge per
/// determining edge and move whose source is admissible.  `components` is
/// left empty.
IdDiagram build_preliminary(const WhiteheadGraph& target, Rank rank);

/// Strongly connected components of a digraph given by edge list.
std::vector<std::vector<int>> strongly_connected_components(
    int node_count, const std::vector<std::pair<int, int>>& edges);

/// Restriction of a preliminary diagram to its strongly connected components
/// that contain an edge.
IdDiagram id_diagram(const IdDiagram& preliminary);
IdDiagram id_diagram(const WhiteheadGraph& target, Rank rank);

struct PotentialTest {
    std::vector<bool> component_passes;
    /// Some component passes.  When false the target is unachieved.
    bool passes = false;
};

/// A component passes when every edge pair meets its red census.
bool census_covers_all_pairs(const std::vector<Direction>& census, Rank rank);
PotentialTest irreducibility_potential_test(const IdDiagram& d);

/// Components grouped by EPP equivalence.  Classes ordered by smallest
/// member; members sorted.
std::vector<std::vector<int>> epp_classes(const IdDiagram& d);

/// Census up to EPP: the least relabelled census over the group.
std::vector<Direction> canonical_census(const std::vector<Direction>& census, Rank rank);

/// Simple directed cycles through `node`, as edge index lists, with at most
/// `max_len` edges; stops after `limit` loops.
std::vector<std::vector<int>> find_loops(const IdDiagram& d, int node, int max_len,
                                         std::size_t limit = 1000);

struct LoopReport {
    RoseMap composite = RoseMap::identity(Rank(1));
    bool train_track = false;
    DecompositionReport decomposition;
    bool ltt_matches_basepoint = false;
    std::vector<std::string> notes;
};

/// Composes g_n after ... after g_1 along the loop and checks the composite.
/// Throws std::invalid_argument for empty, non-consecutive or open sequences.
LoopReport verify_loop(const IdDiagram& d, const std::vector<int>& edges);

enum class Verdict { UnachievedByBirecurrency, UnachievedByIrreducibilityPotential, Inconclusive };

std::string to_string(Verdict v);

struct Analysis {
    Verdict verdict = Verdict::Inconclusive;
    std::size_t structure_count = 0;
    std::size_t admissible_count = 0;
    IdDiagram preliminary;
    IdDiagram diagram;
    PotentialTest potential;
    std::vector<std::vector<int>> classes;
};

Analysis analyze_target(const WhiteheadGraph& target, Rank rank);
Verdict verdict(const WhiteheadGraph& target, Rank rank);

}  // namespace iwg
