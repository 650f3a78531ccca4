#include "iwg/rose_map.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace iwg {

RoseMap::RoseMap(Rank rank, std::vector<EdgePath> images)
    : rank_(rank), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != rank_.value())
        throw std::invalid_argument("expected " + std::to_string(rank_.value()) +
                                    " edge images, got " + std::to_string(images_.size()));
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const EdgePath& w = images_[i];
        if (w.empty())
            throw std::invalid_argument("image of edge " + std::to_string(i + 1) + " is trivial");
        for (Direction d : w)
            if (!rank_.contains(d))
                throw std::invalid_argument("image of edge " + std::to_string(i + 1) +
                                            " uses direction " + std::to_string(d));
        if (!is_tight(w))
            throw std::invalid_argument("image of edge " + std::to_string(i + 1) +
                                        " is not tight");
    }
}

RoseMap RoseMap::identity(Rank rank) {
    std::vector<EdgePath> images;
    for (int i = 0; i < rank.value(); ++i) images.push_back({forward_direction(i)});
    return RoseMap(rank, std::move(images));
}

EdgePath RoseMap::image(Direction d) const {
    if (!rank_.contains(d)) throw std::out_of_range("direction out of range");
    const EdgePath& w = images_[edge_index(d)];
    return is_forward(d) ? w : reversed(w);
}

Generator::Generator(Rank rank, Direction a_, Direction u_) : a(a_), u(u_) {
    if (!rank.contains(a) || !rank.contains(u))
        throw std::invalid_argument("generator direction out of range");
    if (a == u || a == bar(u))
        throw std::invalid_argument("generator needs a outside {u, bar u}");
}

RoseMap Generator::as_map(Rank rank) const {
    RoseMap id = RoseMap::identity(rank);
    std::vector<EdgePath> images = id.images();
    EdgePath w{a, u};
    images[edge_index(u)] = is_forward(u) ? w : reversed(w);
    return RoseMap(rank, std::move(images));
}

EdgePermutation EdgePermutation::identity(Rank rank) {
    EdgePermutation p;
    for (int i = 0; i < rank.value(); ++i) p.forward_image.push_back(forward_direction(i));
    return p;
}

bool EdgePermutation::is_identity() const {
    for (std::size_t i = 0; i < forward_image.size(); ++i)
        if (forward_image[i] != forward_direction(static_cast<int>(i))) return false;
    return true;
}

RoseMap EdgePermutation::as_map(Rank rank) const {
    std::vector<EdgePath> images;
    for (Direction d : forward_image) images.push_back({d});
    return RoseMap(rank, std::move(images));
}

RoseMap FoldDecomposition::compose_all() const {
    RoseMap out = RoseMap::identity(rank);
    for (const Generator& g : generators) out = compose(g.as_map(rank), out);
    return compose(final_permutation.as_map(rank), out);
}

Applied apply(const RoseMap& m, const EdgePath& p) {
    EdgePath raw;
    for (Direction d : p) {
        EdgePath w = m.image(d);
        raw.insert(raw.end(), w.begin(), w.end());
    }
    Tightened t = tighten(raw);
    return {std::move(t.path), t.cancelled};
}

RoseMap compose(const RoseMap& outer, const RoseMap& inner) {
    if (outer.rank() != inner.rank()) throw std::invalid_argument("rank mismatch in compose");
    std::vector<EdgePath> images;
    for (const EdgePath& w : inner.images()) {
        Applied a = apply(outer, w);
        if (a.path.empty()) throw std::domain_error("composite collapses an edge");
        images.push_back(std::move(a.path));
    }
    return RoseMap(outer.rank(), std::move(images));
}

RoseMap power(const RoseMap& m, int k) {
    if (k < 1) throw std::invalid_argument("power needs k >= 1");
    RoseMap out = m;
    for (int i = 1; i < k; ++i) out = compose(m, out);
    return out;
}

DirectionMap direction_map(const RoseMap& m) {
    int n = m.rank().directions();
    DirectionMap dg(n + 1, 0);
    for (Direction d = 1; d <= n; ++d) {
        const EdgePath& w = m.images()[edge_index(d)];
        dg[d] = is_forward(d) ? w.front() : bar(w.back());
    }
    return dg;
}

PeriodicDirections periodic_and_fixed_directions(const RoseMap& m) {
    DirectionMap dg = direction_map(m);
    int n = m.rank().directions();
    PeriodicDirections out;
    for (Direction d = 1; d <= n; ++d) {
        Direction x = d;
        bool periodic = false;
        for (int k = 1; k <= n; ++k) {
            x = dg[x];
            if (x == d) {
                periodic = true;
                break;
            }
        }
        if (periodic) out.periodic.push_back(d);
        if (dg[d] == d) out.fixed.push_back(d);
    }
    return out;
}

std::vector<std::vector<Direction>> gates(const RoseMap& m) {
    DirectionMap dg = direction_map(m);
    int n = m.rank().directions();
    // Dg^k(d) = Dg^k(d') for some k implies equality for all larger k, and the
    // functional graph on n points has preperiod below n.
    std::map<Direction, std::vector<Direction>> by_image;
    for (Direction d = 1; d <= n; ++d) {
        Direction x = d;
        for (int k = 0; k < n; ++k) x = dg[x];
        by_image[x].push_back(d);
    }
    std::vector<std::vector<Direction>> out;
    for (auto& [img, members] : by_image) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_illegal(const std::vector<std::vector<Direction>>& gate_partition, const Turn& t) {
    if (t.degenerate()) return true;
    for (const auto& g : gate_partition) {
        bool a = std::find(g.begin(), g.end(), t.first) != g.end();
        bool b = std::find(g.begin(), g.end(), t.second) != g.end();
        if (a || b) return a && b;
    }
    return false;
}

TurnClosure turns_taken_closure(const RoseMap& m) {
    DirectionMap dg = direction_map(m);
    TurnClosure out;
    std::vector<Turn> frontier;
    for (const EdgePath& w : m.images())
        for (const Turn& t : turns_of(w))
            if (out.turns.insert(t).second) frontier.push_back(t);
    int n = m.rank().directions();
    int cap = n * (n - 1) / 2 + 1;
    for (int round = 0; round < cap && !frontier.empty(); ++round) {
        std::vector<Turn> next;
        for (const Turn& t : frontier) {
            Turn img(dg[t.first], dg[t.second]);
            if (img.degenerate()) {
                out.degenerate_witness = t;
                return out;
            }
            if (out.turns.insert(img).second) next.push_back(img);
        }
        frontier = std::move(next);
    }
    return out;
}

TrainTrackVerdict is_train_track(const RoseMap& m) {
    TurnClosure c = turns_taken_closure(m);
    if (c.degenerate_witness) return {false, c.degenerate_witness};
    auto g = gates(m);
    for (const Turn& t : c.turns)
        if (is_illegal(g, t)) return {false, t};
    return {true, std::nullopt};
}

WhiteheadGraph local_whitehead_graph(const RoseMap& m) {
    TrainTrackVerdict v = is_train_track(m);
    if (!v.train_track) throw std::invalid_argument("map is not a train track");
    TurnClosure c = turns_taken_closure(m);
    std::vector<int> vs;
    for (const Turn& t : c.turns) {
        vs.push_back(t.first);
        vs.push_back(t.second);
    }
    return WhiteheadGraph(std::move(vs), std::vector<Turn>(c.turns.begin(), c.turns.end()));
}

WhiteheadGraph stable_whitehead_graph(const RoseMap& m) {
    return local_whitehead_graph(m).restricted_to(periodic_and_fixed_directions(m).periodic);
}

WhiteheadGraph ideal_whitehead_graph(const RoseMap& m) { return stable_whitehead_graph(m); }

namespace {

struct FoldSearch {
    Rank rank;
    std::set<std::vector<EdgePath>> dead;
    std::optional<NotProperFullFolds> first_failure;
    std::vector<Generator> generators;
    EdgePermutation permutation;

    EdgePath image_of(const std::vector<EdgePath>& images, Direction d) const {
        const EdgePath& w = images[edge_index(d)];
        return is_forward(d) ? w : reversed(w);
    }

    void fail(int step, std::string why) {
        if (!first_failure) first_failure = NotProperFullFolds{step, std::move(why)};
    }

    // Depth-first over proper full folds in canonical turn order.  Each fold
    // shortens the total image length, so the search is finite.
    bool run(const std::vector<EdgePath>& images, int step) {
        if (dead.count(images)) return false;
        int n = rank.directions();
        std::vector<Turn> illegal;
        for (Direction d1 = 1; d1 <= n; ++d1)
            for (Direction d2 = d1 + 1; d2 <= n; ++d2)
                if (image_of(images, d1).front() == image_of(images, d2).front())
                    illegal.emplace_back(d1, d2);

        if (illegal.empty()) {
            EdgePermutation perm;
            std::vector<char> seen(rank.value(), 0);
            for (int i = 0; i < rank.value(); ++i) {
                if (images[i].size() != 1) {
                    fail(step, "no illegal turn left but edge " + std::to_string(i + 1) +
                                   " still has image of length " + std::to_string(images[i].size()));
                    dead.insert(images);
                    return false;
                }
                Direction d = images[i].front();
                if (seen[edge_index(d)]) {
                    fail(step, "final map is not a permutation of petals");
                    dead.insert(images);
                    return false;
                }
                seen[edge_index(d)] = 1;
                perm.forward_image.push_back(d);
            }
            permutation = std::move(perm);
            return true;
        }

        for (const Turn& t : illegal) {
            EdgePath w1 = image_of(images, t.first), w2 = image_of(images, t.second);
            std::size_t len = 0;
            while (len < w1.size() && len < w2.size() && w1[len] == w2[len]) ++len;
            Direction full = 0, partial = 0;
            std::string reason;
            if (len == w1.size() && len == w2.size()) {
                reason = "improper full fold";
            } else if (len == w1.size()) {
                full = t.first;
                partial = t.second;
            } else if (len == w2.size()) {
                full = t.second;
                partial = t.first;
            } else {
                reason = "partial fold";
            }
            if (full != 0 && full == bar(partial)) {
                reason = "fold of a petal with its own inverse leaves a non-rose";
                full = 0;
            }
            if (full == 0) {
                fail(step, reason + " at turn {" + std::to_string(t.first) + "," +
                               std::to_string(t.second) + "}");
                continue;
            }
            std::vector<EdgePath> next = images;
            EdgePath rest = image_of(images, partial);
            rest.erase(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(len));
            next[edge_index(partial)] = is_forward(partial) ? rest : reversed(rest);
            generators.emplace_back(rank, full, partial);
            if (run(next, step + 1)) return true;
            generators.pop_back();
        }
        dead.insert(images);
        return false;
    }
};

}  // namespace

FoldResult stallings_fold_decomposition(const RoseMap& m) {
    FoldSearch search{m.rank(), {}, {}, {}, {}};
    if (!search.run(m.images(), 0)) {
        if (!search.first_failure) search.first_failure = NotProperFullFolds{0, "no proper full fold"};
        return *search.first_failure;
    }
    FoldDecomposition out;
    out.rank = m.rank();
    out.generators = std::move(search.generators);
    out.final_permutation = std::move(search.permutation);
    return out;
}

DecompositionReport validate_ideal_decomposition(const FoldDecomposition& d) {
    DecompositionReport r;
    r.nonempty = !d.generators.empty();
    if (!r.nonempty) {
        r.violations.push_back("decomposition has no generators");
        return r;
    }
    r.generator_shapes = std::all_of(d.generators.begin(), d.generators.end(),
                                     [](const Generator& g) {
                                         return g.a != g.u && g.a != bar(g.u) && g.a > 0 &&
                                                g.u > 0;
                                     });
    if (!r.generator_shapes) r.violations.push_back("generator with a in {u, bar u}");
    r.trivial_permutation = d.final_permutation.is_identity();
    if (!r.trivial_permutation) r.violations.push_back("nontrivial final permutation");

    RoseMap h = d.compose_all();
    DirectionMap dh = direction_map(h);
    Direction last_u = d.generators.back().u;
    int n = d.rank.directions();
    r.fixes_all_but_last_u = true;
    for (Direction x = 1; x <= n; ++x)
        if (x != last_u && dh[x] != x) r.fixes_all_but_last_u = false;
    if (!r.fixes_all_but_last_u)
        r.violations.push_back("composite moves a direction other than the last u");
    r.last_u_not_fixed = dh[last_u] != last_u;
    if (!r.last_u_not_fixed) r.violations.push_back("composite fixes the last u");

    PeriodicDirections pf = periodic_and_fixed_directions(h);
    r.rotationless_proxy = pf.periodic == pf.fixed;
    if (!r.rotationless_proxy) r.violations.push_back("periodic direction that is not fixed");

    std::vector<char> u_seen(d.rank.value(), 0), a_seen(d.rank.value(), 0);
    for (const Generator& g : d.generators) {
        u_seen[edge_index(g.u)] = 1;
        a_seen[edge_index(g.a)] = 1;
    }
    r.am_unachieved_every_pair = std::all_of(u_seen.begin(), u_seen.end(), [](char c) { return c; });
    r.am_twice_achieved_every_pair =
        std::all_of(a_seen.begin(), a_seen.end(), [](char c) { return c; });
    for (int i = 0; i < d.rank.value(); ++i) {
        if (!u_seen[i])
            r.violations.push_back("petal " + std::to_string(i + 1) + " is never unachieved");
        if (!a_seen[i])
            r.violations.push_back("petal " + std::to_string(i + 1) + " is never twice-achieved");
    }
    return r;
}

}  // namespace iwg
