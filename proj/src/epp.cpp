#include "iwg/epp.hpp"

#include <algorithm>
#include <numeric>

namespace iwg {

std::vector<EppPermutation> epp_group(Rank rank) {
    int r = rank.value();
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<EppPermutation> out;
    do {
        for (unsigned flips = 0; flips < (1u << r); ++flips) {
            EppPermutation p;
            for (int i = 0; i < r; ++i)
                p.forward_image.push_back(forward_direction(perm[i]) + ((flips >> i) & 1u));
            out.push_back(std::move(p));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Direction epp_apply(const EppPermutation& p, Direction d) {
    Direction img = p.forward_image[edge_index(d)];
    return is_forward(d) ? img : bar(img);
}

Turn epp_apply(const EppPermutation& p, const Turn& t) {
    return Turn(epp_apply(p, t.first), epp_apply(p, t.second));
}

Generator epp_apply(const EppPermutation& p, const Generator& g) {
    Generator out;
    out.a = epp_apply(p, g.a);
    out.u = epp_apply(p, g.u);
    return out;
}

LttStructure epp_apply(const EppPermutation& p, const LttStructure& g) {
    std::vector<ColoredEdge> edges;
    for (const auto& e : g.colored_edges()) edges.push_back({epp_apply(p, e.turn), e.color});
    return LttStructure(g.rank(), epp_apply(p, g.red_vertex()), std::move(edges));
}

GeneratingTriple epp_apply(const EppPermutation& p, const GeneratingTriple& t) {
    return {epp_apply(p, t.gen), epp_apply(p, t.source), epp_apply(p, t.dest)};
}

EppPermutation epp_inverse(const EppPermutation& p) {
    EppPermutation out;
    out.forward_image.assign(p.forward_image.size(), 0);
    for (std::size_t i = 0; i < p.forward_image.size(); ++i) {
        Direction img = p.forward_image[i];
        Direction src = forward_direction(static_cast<int>(i));
        out.forward_image[edge_index(img)] = is_forward(img) ? src : bar(src);
    }
    return out;
}

RoseMap epp_conjugate(const EppPermutation& p, const RoseMap& m) {
    EppPermutation inv = epp_inverse(p);
    std::vector<EdgePath> images;
    for (int i = 0; i < m.rank().value(); ++i) {
        EdgePath w;
        for (Direction d : m.image(epp_apply(inv, forward_direction(i)))) w.push_back(epp_apply(p, d));
        images.push_back(std::move(w));
    }
    return RoseMap(m.rank(), std::move(images));
}

LttStructure epp_canonical(const LttStructure& g) {
    LttStructure best = g;
    for (const auto& p : epp_group(g.rank())) {
        LttStructure h = epp_apply(p, g);
        if (h < best) best = std::move(h);
    }
    return best;
}

}  // namespace iwg
