#include "iwg/moves.hpp"

#include <algorithm>
#include <stdexcept>

namespace iwg {

std::string to_string(MoveKind k) { return k == MoveKind::Extension ? "extension" : "switch"; }

std::vector<Turn> determining_edges(const LttStructure& g) {
    Direction da = g.twice_achieved();
    std::vector<Turn> out;
    for (const Turn& t : g.purple_edges())
        if (t.contains(da)) out.push_back(t);
    return out;
}

Generator generator_for(const LttStructure& dest) {
    return Generator(dest.rank(), dest.twice_achieved(), dest.red_vertex());
}

namespace {

Direction check_det(const LttStructure& dest, const Turn& det) {
    Direction da = dest.twice_achieved();
    if (!det.contains(da))
        throw std::invalid_argument("determining edge must contain the twice-achieved direction");
    if (dest.color_of(det) != EdgeColor::Purple)
        throw std::invalid_argument("determining edge must be a purple edge of the destination");
    return det.other(da);
}

}  // namespace

GeneratingTriple extension(const LttStructure& dest, const Turn& det) {
    Direction dl = check_det(dest, det);
    Generator gen = generator_for(dest);
    std::vector<ColoredEdge> edges;
    for (const Turn& t : dest.purple_edges()) edges.push_back({t, EdgeColor::Purple});
    edges.push_back({Turn(gen.u, dl), EdgeColor::Red});
    return {gen, LttStructure(dest.rank(), gen.u, std::move(edges)), dest};
}

GeneratingTriple switch_move(const LttStructure& dest, const Turn& det) {
    Direction dl = check_det(dest, det);
    Generator gen = generator_for(dest);
    std::vector<ColoredEdge> edges;
    for (const Turn& t : dest.purple_edges()) {
        auto relabel = [&](Direction d) { return d == gen.a ? gen.u : d; };
        edges.push_back({Turn(relabel(t.first), relabel(t.second)), EdgeColor::Purple});
    }
    edges.push_back({Turn(gen.a, dl), EdgeColor::Red});
    return {gen, LttStructure(dest.rank(), gen.a, std::move(edges)), dest};
}

GeneratingTriple make_move(MoveKind kind, const LttStructure& dest, const Turn& det) {
    return kind == MoveKind::Extension ? extension(dest, det) : switch_move(dest, det);
}

namespace {

bool generator_in_range(const GeneratingTriple& t) {
    Rank r = t.dest.rank();
    return r.contains(t.gen.a) && r.contains(t.gen.u);
}

DirectionMap generator_direction_map(const GeneratingTriple& t) {
    int n = t.source.rank().directions();
    DirectionMap dg(n + 1, 0);
    for (Direction d = 1; d <= n; ++d) dg[d] = d;
    if (generator_in_range(t)) dg[t.gen.u] = t.gen.a;
    return dg;
}

int colored_degree(const LttStructure& g, Direction d) {
    int k = 0;
    for (const auto& e : g.colored_edges()) k += e.turn.contains(d) ? 1 : 0;
    return k;
}

// Dg maps purple vertices of the source bijectively onto those of the dest,
// and purple edges bijectively onto purple edges.
bool purple_isomorphism(const GeneratingTriple& t, const DirectionMap& dg) {
    std::vector<Direction> sv = t.source.purple_vertices(), dv = t.dest.purple_vertices();
    std::vector<Direction> img;
    for (Direction d : sv) img.push_back(dg[d]);
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end() || img != dv) return false;
    std::vector<Turn> mapped;
    for (const Turn& e : t.source.purple_edges()) mapped.emplace_back(dg[e.first], dg[e.second]);
    std::sort(mapped.begin(), mapped.end());
    return mapped == t.dest.purple_edges();
}

}  // namespace

InducedColoredMap induced_colored_map(const GeneratingTriple& t) {
    InducedColoredMap out;
    out.vertex_map = generator_direction_map(t);
    const DirectionMap& dg = out.vertex_map;
    for (const auto& e : t.source.colored_edges()) {
        Turn img(dg[e.turn.first], dg[e.turn.second]);
        if (img.degenerate() || !t.dest.has_colored_edge(img)) {
            out.missing = e.turn;
            return out;
        }
        out.edges.push_back({e.turn, img});
    }
    if (!purple_isomorphism(t, dg)) out.missing = Turn();
    return out;
}

std::vector<std::string> AmReport::failures() const {
    std::vector<std::string> out;
    if (!valid_structures) out.push_back("valid");
    if (!I) out.push_back("I");
    if (!II) out.push_back("II");
    if (!III) out.push_back("III");
    if (!IV) out.push_back("IV");
    if (!V) out.push_back("V");
    if (!VI) out.push_back("VI");
    if (!VII) out.push_back("VII");
    return out;
}

AmReport check_am(const GeneratingTriple& t) {
    AmReport r;
    const LttStructure& s = t.source;
    const LttStructure& d = t.dest;
    if (s.rank() != d.rank()) return r;
    r.valid_structures = validate_ltt(s).valid() && validate_ltt(d).valid();
    r.I = is_birecurrent(s).birecurrent && is_birecurrent(d).birecurrent;

    bool in_range = generator_in_range(t);
    Direction a = t.gen.a, u = t.gen.u;
    r.II = in_range && (s.red_vertex() == a || s.red_vertex() == u);

    bool dest_red_edge = in_range && d.color_of(Turn(u, bar(a))) == EdgeColor::Red;
    bool source_red_edge = false;
    for (const Turn& e : s.red_edges()) source_red_edge |= e.contains(s.red_vertex());
    r.III = in_range && d.red_vertex() == u && dest_red_edge && source_red_edge;

    DirectionMap dg = generator_direction_map(t);
    r.IV = in_range;
    for (const auto& e : s.colored_edges()) {
        if (!r.IV) break;
        Turn img(dg[e.turn.first], dg[e.turn.second]);
        r.IV = !img.degenerate() && d.color_of(img) == EdgeColor::Purple;
    }

    r.V = s.red_edges().size() == 1 && d.red_edges().size() == 1 &&
          colored_degree(s, s.red_vertex()) == 1 && colored_degree(d, d.red_vertex()) == 1;

    r.VI = in_range && a != u && a != bar(u) && d.red_vertex() == u;
    if (r.VI) {
        auto reds = d.red_edges();
        r.VI = reds.size() == 1 && reds.front().contains(u) && reds.front().other(u) == bar(a);
    }

    r.VII = in_range && purple_isomorphism(t, dg);
    return r;
}

std::optional<MoveKind> classify(const GeneratingTriple& t) {
    if (!validate_ltt(t.dest).valid()) return std::nullopt;
    if (t.gen != generator_for(t.dest)) return std::nullopt;
    for (const Turn& det : determining_edges(t.dest))
        for (MoveKind k : {MoveKind::Extension, MoveKind::Switch})
            if (make_move(k, t.dest, det) == t) return k;
    return std::nullopt;
}

bool is_admissible(const GeneratingTriple& t) {
    if (t.source.rank() != t.dest.rank()) return false;
    if (!validate_ltt(t.source).valid() || !validate_ltt(t.dest).valid()) return false;
    if (!is_birecurrent(t.source).birecurrent || !is_birecurrent(t.dest).birecurrent) return false;
    return classify(t).has_value();
}

}  // namespace iwg
