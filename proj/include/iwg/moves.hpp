#pragma once

// Generating triples and the two moves that produce a source structure from
// a destination structure.
//
// Every structure lives on the same direction alphabet, so a triple
// (g, G_{k-1}, G_k) with g = {a, u} reads: u is the red vertex of G_k, the
// red edge of G_k is {u, bar a}, and Dg sends u to a while fixing every
// other direction.

#include <optional>
#include <string>
#include <vector>

#include "iwg/ltt.hpp"
#include "iwg/rose_map.hpp"

namespace iwg {

struct GeneratingTriple {
    Generator gen;
    LttStructure source;
    LttStructure dest;

    auto operator<=>(const GeneratingTriple&) const = default;
};

enum class MoveKind { Extension, Switch };

std::string to_string(MoveKind k);

/// Purple edges at bar of the red edge's purple endpoint, sorted.
std::vector<Turn> determining_edges(const LttStructure& g);

/// Keeps the purple edges and the red vertex; the red edge becomes
/// {red vertex, d_l}.  Throws std::invalid_argument if det is not a purple
/// edge at the twice-achieved direction.
GeneratingTriple extension(const LttStructure& dest, const Turn& det);

/// Moves the purple edges at a onto the old red vertex u; a turns red with
/// red edge {a, d_l}.
GeneratingTriple switch_move(const LttStructure& dest, const Turn& det);

GeneratingTriple make_move(MoveKind kind, const LttStructure& dest, const Turn& det);

/// The generator a triple for `dest` must use: u the red vertex, a the
/// twice-achieved direction.
Generator generator_for(const LttStructure& dest);

struct ColoredEdgeImage {
    Turn from;
    Turn to;
};

struct InducedColoredMap {
    DirectionMap vertex_map;  // entry 0 unused
    std::vector<ColoredEdgeImage> edges;
    std::optional<Turn> missing;  // first source edge whose image is not colored in dest
    bool ok() const { return !missing.has_value(); }
};

/// Vertex map Dg and the linear edge map on colored edges.  Fails when an
/// image is degenerate or absent from dest, or when the purple subgraphs do
/// not correspond.
InducedColoredMap induced_colored_map(const GeneratingTriple& t);

struct AmReport {
    bool valid_structures = false;  // both pass validate_ltt
    bool I = false;    // both birecurrent
    bool II = false;   // source red vertex in {a, u}
    bool III = false;  // red vertex and red edge placement
    bool IV = false;   // source colored edges map to dest purple edges
    bool V = false;    // red edge is the only colored edge at the red vertex
    bool VI = false;   // generator shape
    bool VII = false;  // Dg restricts to an isomorphism of purple subgraphs

    bool all() const { return valid_structures && I && II && III && IV && V && VI && VII; }
    std::vector<std::string> failures() const;
};

AmReport check_am(const GeneratingTriple& t);

/// Both structures valid and birecurrent, and t is the extension or switch
/// of its destination along one of its determining edges.
bool is_admissible(const GeneratingTriple& t);

/// Which move produced t, if any.
std::optional<MoveKind> classify(const GeneratingTriple& t);

}  // namespace iwg
