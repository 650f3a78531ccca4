#pragma once

// Directions, turns and edge paths on an r-petaled rose.
//
// Directions are the integers 1..2r.  Edge E_i read forward is direction
// 2i-1 and read backward is 2i, so bar() is a parity flip.  Because a rose
// has a single vertex, an edge path is just a word in directions.

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iwg {

using Direction = int;

/// Number of petals of the rose.
class Rank {
public:
    explicit Rank(int r);
    int value() const { return r_; }
    int directions() const { return 2 * r_; }
    bool contains(Direction d) const { return d >= 1 && d <= 2 * r_; }
    auto operator<=>(const Rank&) const = default;

private:
    int r_;
};

inline constexpr int kMaxRank = 8;

constexpr Direction bar(Direction d) { return (d % 2 == 1) ? d + 1 : d - 1; }

/// Range-checked bar.
Direction bar(Rank rank, Direction d);

/// 0-based index of the petal that direction d runs along.
constexpr int edge_index(Direction d) { return (d - 1) / 2; }
constexpr bool is_forward(Direction d) { return d % 2 == 1; }
constexpr Direction forward_direction(int edge) { return 2 * edge + 1; }

/// An unordered pair of directions, stored sorted.
struct Turn {
    Direction first = 0;
    Direction second = 0;

    Turn() = default;
    Turn(Direction a, Direction b) : first(a < b ? a : b), second(a < b ? b : a) {}

    bool degenerate() const { return first == second; }
    bool contains(Direction d) const { return first == d || second == d; }
    /// The endpoint that is not d; d must be an endpoint.
    Direction other(Direction d) const { return first == d ? second : first; }

    auto operator<=>(const Turn&) const = default;
};

using TurnSet = std::set<Turn>;

using EdgePath = std::vector<Direction>;

struct Tightened {
    EdgePath path;
    bool cancelled = false;
};

/// Free reduction of a word.
Tightened tighten(const EdgePath& p);

bool is_tight(const EdgePath& p);

/// The path traversed backwards.
EdgePath reversed(const EdgePath& p);

/// Turns {bar(e_i), e_{i+1}} crossed by p.
TurnSet turns_of(const EdgePath& p);

// --- text form -------------------------------------------------------------

enum class InverseStyle { Prime, Minus };

/// Maps petals to letters.  Reverse directions are written with a trailing
/// prime (a') or a leading minus (-a).
class Alphabet {
public:
    explicit Alphabet(std::string letters = "abcdefgh",
                      InverseStyle style = InverseStyle::Prime);

    std::string format(Direction d) const;
    std::string format(const EdgePath& p) const;
    std::string format(const Turn& t) const;

    /// Parses one word such as "aba'c" or "ab-a c".  Both inverse styles are
    /// always accepted on input.
    EdgePath parse_path(std::string_view text) const;
    Direction parse_direction(std::string_view text) const;

    const std::string& letters() const { return letters_; }
    InverseStyle style() const { return style_; }

private:
    std::string letters_;
    InverseStyle style_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace iwg
