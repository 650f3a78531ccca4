#include "iwg/rose.hpp"

#include <algorithm>
#include <cctype>

namespace iwg {

Rank::Rank(int r) : r_(r) {
    if (r < 1 || r > kMaxRank)
        throw std::invalid_argument("rank must lie in [1, " + std::to_string(kMaxRank) +
                                    "], got " + std::to_string(r));
}

Direction bar(Rank rank, Direction d) {
    if (!rank.contains(d))
        throw std::out_of_range("direction " + std::to_string(d) + " outside [1, " +
                                std::to_string(rank.directions()) + "]");
    return bar(d);
}

Tightened tighten(const EdgePath& p) {
    Tightened out;
    out.path.reserve(p.size());
    for (Direction d : p) {
        if (!out.path.empty() && out.path.back() == bar(d)) {
            out.path.pop_back();
            out.cancelled = true;
        } else {
            out.path.push_back(d);
        }
    }
    return out;
}

bool is_tight(const EdgePath& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] == bar(p[i - 1])) return false;
    return true;
}

EdgePath reversed(const EdgePath& p) {
    EdgePath out(p.rbegin(), p.rend());
    for (Direction& d : out) d = bar(d);
    return out;
}

TurnSet turns_of(const EdgePath& p) {
    TurnSet out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace(bar(p[i]), p[i + 1]);
    return out;
}

Alphabet::Alphabet(std::string letters, InverseStyle style)
    : letters_(std::move(letters)), style_(style) {
    if (letters_.empty()) throw std::invalid_argument("empty alphabet");
    for (char c : letters_)
        if (!std::islower(static_cast<unsigned char>(c)))
            throw std::invalid_argument("alphabet letters must be lowercase");
}

std::string Alphabet::format(Direction d) const {
    int e = edge_index(d);
    if (d < 1 || e >= static_cast<int>(letters_.size()))
        throw std::out_of_range("direction " + std::to_string(d) + " has no letter");
    std::string s(1, letters_[e]);
    if (is_forward(d)) return s;
    return style_ == InverseStyle::Prime ? s + "'" : "-" + s;
}

std::string Alphabet::format(const EdgePath& p) const {
    std::string out;
    for (Direction d : p) out += format(d);
    return out;
}

std::string Alphabet::format(const Turn& t) const {
    return "{" + format(t.first) + "," + format(t.second) + "}";
}

EdgePath Alphabet::parse_path(std::string_view text) const {
    EdgePath out;
    bool pending_minus = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '-') {
            if (pending_minus) throw ParseError("doubled '-'", i);
            pending_minus = true;
            continue;
        }
        if (c == '\'') {
            if (out.empty() || pending_minus) throw ParseError("stray prime", i);
            out.back() = bar(out.back());
            continue;
        }
        auto pos = letters_.find(c);
        if (pos == std::string::npos)
            throw ParseError(std::string("unknown letter '") + c + "'", i);
        Direction d = forward_direction(static_cast<int>(pos));
        out.push_back(pending_minus ? bar(d) : d);
        pending_minus = false;
    }
    if (pending_minus) throw ParseError("dangling '-'", text.size());
    return out;
}

Direction Alphabet::parse_direction(std::string_view text) const {
    EdgePath p = parse_path(text);
    if (p.size() != 1) throw ParseError("expected a single direction", 0);
    return p.front();
}

}  // namespace iwg
