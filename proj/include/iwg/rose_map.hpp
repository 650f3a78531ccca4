#pragma once

// Tight self-maps of the rose and the machinery built on them: direction
// maps, gates, turn closure, train track checks, Whitehead graphs and
// Stallings fold decompositions into proper full folds.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "iwg/rose.hpp"
#include "iwg/whitehead.hpp"

namespace iwg {

/// A graph map of the rose, given by the images of the positively oriented
/// petals.  Images are nontrivial tight words.
class RoseMap {
public:
    /// Throws std::invalid_argument when an image is empty, untight, or uses
    /// a direction outside the rank.
    RoseMap(Rank rank, std::vector<EdgePath> images);

    static RoseMap identity(Rank rank);

    Rank rank() const { return rank_; }
    const std::vector<EdgePath>& images() const { return images_; }

    /// Image of the oriented edge whose initial direction is d.
    EdgePath image(Direction d) const;

    bool operator==(const RoseMap&) const = default;

private:
    Rank rank_;
    std::vector<EdgePath> images_;
};

/// The proper full fold of roses sending the oriented edge with initial
/// direction u over the path a·u.  Every other oriented edge is fixed.
struct Generator {
    Direction a = 0;
    Direction u = 0;

    /// Throws std::invalid_argument if a is u or bar(u), or either is out of
    /// range.
    Generator(Rank rank, Direction a, Direction u);
    Generator() = default;

    RoseMap as_map(Rank rank) const;

    auto operator<=>(const Generator&) const = default;
};

/// Per-petal permutation with orientation flips: petal i goes to
/// `forward_image[i]` (a direction, so the orientation flip is encoded).
struct EdgePermutation {
    std::vector<Direction> forward_image;

    static EdgePermutation identity(Rank rank);
    bool is_identity() const;
    RoseMap as_map(Rank rank) const;
    bool operator==(const EdgePermutation&) const = default;
};

struct FoldDecomposition {
    Rank rank{1};
    std::vector<Generator> generators;  // first fold first
    EdgePermutation final_permutation;

    /// Permutation after g_n after ... after g_1.
    RoseMap compose_all() const;
};

struct Applied {
    EdgePath path;
    bool cancelled = false;
};

/// m(p), tightened.
Applied apply(const RoseMap& m, const EdgePath& p);

/// outer after inner.  Throws std::invalid_argument on rank mismatch and
/// std::domain_error if an image collapses to the trivial path.
RoseMap compose(const RoseMap& outer, const RoseMap& inner);

/// m^k for k >= 1.
RoseMap power(const RoseMap& m, int k);

/// Dg as a table indexed by direction (entry 0 unused).
using DirectionMap = std::vector<Direction>;

DirectionMap direction_map(const RoseMap& m);

struct PeriodicDirections {
    std::vector<Direction> periodic;
    std::vector<Direction> fixed;
};

PeriodicDirections periodic_and_fixed_directions(const RoseMap& m);

/// Gates: d and d' share a gate iff some iterate of Dg identifies them.
/// Each gate sorted; gates ordered by smallest member.
std::vector<std::vector<Direction>> gates(const RoseMap& m);

/// Illegal: both directions in one gate.
bool is_illegal(const std::vector<std::vector<Direction>>& gate_partition, const Turn& t);

struct TurnClosure {
    TurnSet turns;
    /// Set when some iterate cancels; `turns` is then incomplete.
    std::optional<Turn> degenerate_witness;
};

/// Least turn set containing the turns of every edge image and closed under
/// the induced map on turns.
TurnClosure turns_taken_closure(const RoseMap& m);

struct TrainTrackVerdict {
    bool train_track = false;
    std::optional<Turn> illegal_turn;
};

TrainTrackVerdict is_train_track(const RoseMap& m);

/// Vertices are the directions met by closure turns.  Throws
/// std::invalid_argument for non train track maps.
WhiteheadGraph local_whitehead_graph(const RoseMap& m);
/// The local Whitehead graph restricted to periodic directions.
WhiteheadGraph stable_whitehead_graph(const RoseMap& m);
/// Equal to the stable Whitehead graph.  Only valid when m has no periodic
/// Nielsen paths, which is assumed and not checked.
WhiteheadGraph ideal_whitehead_graph(const RoseMap& m);

// --- folding ---------------------------------------------------------------

struct NotProperFullFolds {
    int step = 0;  // 0-based index of the fold that failed
    std::string description;
};

using FoldResult = std::variant<FoldDecomposition, NotProperFullFolds>;

/// Greedy Stallings folding restricted to proper full folds of roses.
/// At each step the illegal order-one turns {d1, d2} (Dg(d1) = Dg(d2)) are
/// examined in canonical order and the first one whose maximal fold is a
/// proper full fold is folded.
FoldResult stallings_fold_decomposition(const RoseMap& m);

struct DecompositionReport {
    bool nonempty = false;
    bool generator_shapes = false;       // a not in {u, bar u}
    bool trivial_permutation = false;    // no homeomorphism factor left over
    bool fixes_all_but_last_u = false;   // Dh(d) = d for every d != u_n
    bool last_u_not_fixed = false;       // u_n is the unachieved direction
    bool rotationless_proxy = false;     // periodic directions of h are fixed
    bool am_unachieved_every_pair = false;      // each petal is some u_k
    bool am_twice_achieved_every_pair = false;  // each petal is some a_k
    std::vector<std::string> violations;

    bool ideal() const {
        return nonempty && generator_shapes && trivial_permutation && fixes_all_but_last_u &&
               last_u_not_fixed && rotationless_proxy;
    }
    bool all() const {
        return ideal() && am_unachieved_every_pair && am_twice_achieved_every_pair;
    }
};

DecompositionReport validate_ideal_decomposition(const FoldDecomposition& d);

}  // namespace iwg
