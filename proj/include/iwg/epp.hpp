#pragma once

// Edge pair permutations: permute petals and flip orientations.  The group
// has r! * 2^r elements and acts on every labelled object.

#include <vector>

#include "iwg/ltt.hpp"
#include "iwg/moves.hpp"
#include "iwg/rose_map.hpp"

namespace iwg {

using EppPermutation = EdgePermutation;

/// Every element, identity first.
std::vector<EppPermutation> epp_group(Rank rank);

Direction epp_apply(const EppPermutation& p, Direction d);
Turn epp_apply(const EppPermutation& p, const Turn& t);
Generator epp_apply(const EppPermutation& p, const Generator& g);
LttStructure epp_apply(const EppPermutation& p, const LttStructure& g);
GeneratingTriple epp_apply(const EppPermutation& p, const GeneratingTriple& t);
/// Relabels both sides: x -> p(m(p^-1(x))).
RoseMap epp_conjugate(const EppPermutation& p, const RoseMap& m);

EppPermutation epp_inverse(const EppPermutation& p);

/// Least image of g under the group.
LttStructure epp_canonical(const LttStructure& g);

}  // namespace iwg
