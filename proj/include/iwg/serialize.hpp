#pragma once

// JSON and DOT forms.  Directions are signed petal numbers in JSON (+i for
// E_i, -i for its reverse); edge images of maps use the letter alphabet.

#include <string>
#include <string_view>

#include <json.hpp>

#include "iwg/id_diagram.hpp"
#include "iwg/ltt.hpp"
#include "iwg/moves.hpp"
#include "iwg/rose_map.hpp"
#include "iwg/whitehead.hpp"

namespace iwg {

using Json = nlohmann::ordered_json;

int to_signed(Direction d);
Direction from_signed(int s, Rank rank);

/// Parses text, reporting syntax errors as ParseError with line and column.
Json parse_json(std::string_view text);

Json to_json(const RoseMap& m, const Alphabet& alphabet = Alphabet());
/// Accepts images as strings or arrays of signed petal numbers, keyed by
/// letter in an object or given as an array.
RoseMap rose_map_from_json(const Json& j, const Alphabet& alphabet = Alphabet());

Json to_json(const WhiteheadGraph& g);
/// {"vertices": n | [..], "edges": [[v, w], ...]}
WhiteheadGraph graph_from_json(const Json& j);

Json to_json(const LttStructure& g);
LttStructure ltt_from_json(const Json& j);

Json to_json(const GeneratingTriple& t);
GeneratingTriple triple_from_json(const Json& j);

Json to_json(const IdDiagram& d);
IdDiagram diagram_from_json(const Json& j);

std::string ltt_to_dot(const LttStructure& g, const Alphabet& alphabet = Alphabet());
/// Nodes are numbered; each label spells the red vertex and colored edges.
std::string diagram_to_dot(const IdDiagram& d, const Alphabet& alphabet = Alphabet());

}  // namespace iwg
