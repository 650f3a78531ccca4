#include "iwg/ltt.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace iwg {

LttStructure::LttStructure(Rank rank, Direction red_vertex, std::vector<ColoredEdge> colored_edges)
    : rank_(rank), red_vertex_(red_vertex), edges_(std::move(colored_edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

LttStructure LttStructure::from_turns(Rank rank, Direction red_vertex,
                                      const std::vector<Turn>& turns) {
    std::vector<ColoredEdge> edges;
    for (const Turn& t : turns)
        edges.push_back({t, t.contains(red_vertex) ? EdgeColor::Red : EdgeColor::Purple});
    return LttStructure(rank, red_vertex, std::move(edges));
}

std::vector<Turn> LttStructure::purple_edges() const {
    std::vector<Turn> out;
    for (const auto& e : edges_)
        if (e.color == EdgeColor::Purple) out.push_back(e.turn);
    return out;
}

std::vector<Turn> LttStructure::red_edges() const {
    std::vector<Turn> out;
    for (const auto& e : edges_)
        if (e.color == EdgeColor::Red) out.push_back(e.turn);
    return out;
}

std::vector<Direction> LttStructure::purple_vertices() const {
    std::vector<Direction> out;
    for (Direction d = 1; d <= rank_.directions(); ++d)
        if (d != red_vertex_) out.push_back(d);
    return out;
}

Turn LttStructure::red_edge() const {
    auto reds = red_edges();
    if (reds.size() != 1) throw std::logic_error("structure does not have a unique red edge");
    return reds.front();
}

Direction LttStructure::twice_achieved() const {
    Turn t = red_edge();
    if (!t.contains(red_vertex_)) throw std::logic_error("red edge misses the red vertex");
    return bar(t.other(red_vertex_));
}

bool LttStructure::has_colored_edge(const Turn& t) const { return color_of(t).has_value(); }

std::optional<EdgeColor> LttStructure::color_of(const Turn& t) const {
    for (const auto& e : edges_)
        if (e.turn == t) return e.color;
    return std::nullopt;
}

LttReport validate_ltt(const LttStructure& g) {
    LttReport r;
    auto& v = r.violations;
    Rank rank = g.rank();
    int n = rank.directions();
    if (!rank.contains(g.red_vertex())) {
        v.push_back("red vertex out of range");
        return r;
    }
    std::vector<int> colored_degree(n + 1, 0);
    int red_count = 0;
    for (std::size_t i = 0; i < g.colored_edges().size(); ++i) {
        const ColoredEdge& e = g.colored_edges()[i];
        if (!rank.contains(e.turn.first) || !rank.contains(e.turn.second)) {
            v.push_back("colored edge endpoint out of range");
            continue;
        }
        if (e.turn.degenerate()) v.push_back("ltt3/tt2: colored loop");
        bool touches_red = e.turn.contains(g.red_vertex());
        if (touches_red && e.color != EdgeColor::Red)
            v.push_back("ltt2: edge at the red vertex is not red");
        if (!touches_red && e.color != EdgeColor::Purple)
            v.push_back("ltt2: edge between purple vertices is not purple");
        if (i > 0 && g.colored_edges()[i - 1].turn == e.turn)
            v.push_back("ltt3: two colored edges join the same pair");
        if (e.color == EdgeColor::Red) {
            ++red_count;
            if (e.turn.first == bar(e.turn.second))
                v.push_back("red edge joins the two directions of one petal");
        }
        ++colored_degree[e.turn.first];
        if (!e.turn.degenerate()) ++colored_degree[e.turn.second];
    }
    if (red_count != 1)
        v.push_back("ltt(*)4: expected a unique red edge, found " + std::to_string(red_count));
    for (Direction d = 1; d <= n; ++d)
        if (colored_degree[d] == 0)
            v.push_back("tt3: vertex " + std::to_string(d) + " has no colored edge");
    return r;
}

WhiteheadGraph pi_graph(const LttStructure& g) {
    return WhiteheadGraph(g.purple_vertices(), g.purple_edges());
}

bool matches_target(const LttStructure& g, const WhiteheadGraph& target) {
    return isomorphic(pi_graph(g), target);
}

LttStructure ltt_of_map(const RoseMap& m) {
    TrainTrackVerdict tt = is_train_track(m);
    if (!tt.train_track) throw std::invalid_argument("ltt_of_map: map is not a train track");
    PeriodicDirections pf = periodic_and_fixed_directions(m);
    int n = m.rank().directions();
    if (static_cast<int>(pf.periodic.size()) != n - 1)
        throw std::invalid_argument("ltt_of_map: expected exactly one non-periodic direction, found " +
                                    std::to_string(n - static_cast<int>(pf.periodic.size())));
    Direction red = 0;
    for (Direction d = 1; d <= n; ++d)
        if (!std::binary_search(pf.periodic.begin(), pf.periodic.end(), d)) red = d;
    TurnClosure c = turns_taken_closure(m);
    return LttStructure::from_turns(m.rank(), red, std::vector<Turn>(c.turns.begin(), c.turns.end()));
}

// --- transition digraph ------------------------------------------------------

TransitionDigraph::TransitionDigraph(const LttStructure& g) : black_count_(g.rank().value()) {
    for (int i = 0; i < black_count_; ++i)
        ends_.emplace_back(forward_direction(i), bar(forward_direction(i)));
    for (const auto& e : g.colored_edges()) ends_.emplace_back(e.turn.first, e.turn.second);

    int nodes = node_count();
    succ_.assign(nodes, {});
    // Index outgoing nodes by tail vertex.
    std::vector<std::vector<int>> leaving(g.rank().directions() + 1);
    for (int x = 0; x < nodes; ++x) leaving[tail(x)].push_back(x);
    for (int x = 0; x < nodes; ++x)
        for (int y : leaving[head(x)])
            if (is_black(edge_of(x)) != is_black(edge_of(y)) && y != reverse(x))
                succ_[x].push_back(y);
}

Direction TransitionDigraph::tail(int node) const {
    const auto& e = ends_[edge_of(node)];
    return (node & 1) ? e.second : e.first;
}

Direction TransitionDigraph::head(int node) const {
    const auto& e = ends_[edge_of(node)];
    return (node & 1) ? e.first : e.second;
}

std::vector<std::vector<int>> TransitionDigraph::components() const {
    int n = node_count();
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<char> on_stack(n, 0);
    std::vector<std::vector<int>> out;
    int counter = 0;
    // Iterative Tarjan.
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<std::pair<int, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, it] = call.back();
            if (it < succ_[v].size()) {
                int w = succ_[v][it++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                int done = v;
                call.pop_back();
                if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
                if (low[done] == index[done]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != done);
                    std::sort(comp.begin(), comp.end());
                    out.push_back(std::move(comp));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Birecurrency is_birecurrent(const LttStructure& g) {
    TransitionDigraph t(g);
    for (auto& comp : t.components()) {
        bool has_arc = false;
        std::vector<char> covered(t.edge_count(), 0);
        for (int x : comp) {
            covered[TransitionDigraph::edge_of(x)] = 1;
            for (int y : t.successors(x))
                if (std::binary_search(comp.begin(), comp.end(), y)) has_arc = true;
        }
        if (has_arc && std::all_of(covered.begin(), covered.end(), [](char c) { return c; }))
            return {true, std::move(comp)};
    }
    return {};
}

bool brute_force_birecurrent(const LttStructure& g, int bound) {
    TransitionDigraph t(g);
    int edges = t.edge_count();
    if (edges > 40) throw std::invalid_argument("too many edges for the brute-force oracle");
    const std::uint64_t full = (std::uint64_t{1} << edges) - 1;
    const std::uint64_t nodes = static_cast<std::uint64_t>(t.node_count());
    const bool dense = edges <= 22;

    // Any covering closed path crosses black edge 0, so it can be rotated to
    // start on one of its two orientations.
    for (int start : {0, 1}) {
        std::vector<std::uint64_t> bits;
        std::unordered_set<std::uint64_t> hashed;
        if (dense) bits.assign(((nodes << edges) >> 6) + 1, 0);
        auto visit = [&](int node, std::uint64_t mask) {
            std::uint64_t key = (mask * nodes) + static_cast<std::uint64_t>(node);
            if (!dense) return hashed.insert(key).second;
            std::uint64_t& word = bits[key >> 6];
            std::uint64_t bit = std::uint64_t{1} << (key & 63);
            if (word & bit) return false;
            word |= bit;
            return true;
        };
        std::vector<std::pair<int, std::uint64_t>> frontier{{start, 1}}, next;
        visit(start, 1);
        for (int length = 1; length <= bound && !frontier.empty(); ++length) {
            next.clear();
            for (auto [node, mask] : frontier) {
                const auto& succ = t.successors(node);
                if (mask == full && length >= 2 &&
                    std::find(succ.begin(), succ.end(), start) != succ.end())
                    return true;
                for (int y : succ) {
                    std::uint64_t m2 = mask | (std::uint64_t{1} << TransitionDigraph::edge_of(y));
                    if (visit(y, m2)) next.emplace_back(y, m2);
                }
            }
            std::swap(frontier, next);
        }
    }
    return false;
}

std::optional<std::vector<int>> smooth_lift(const LttStructure& g, const EdgePath& w) {
    std::vector<int> path;
    const auto& colored = g.colored_edges();
    int black = g.rank().value();
    for (std::size_t i = 0; i < w.size(); ++i) {
        Direction d = w[i];
        // Black edge from d to bar d.
        path.push_back(2 * edge_index(d) + (is_forward(d) ? 0 : 1));
        if (i + 1 == w.size()) break;
        Direction from = bar(d), to = w[i + 1];
        Turn t(from, to);
        auto it = std::find_if(colored.begin(), colored.end(),
                               [&](const ColoredEdge& e) { return e.turn == t; });
        if (it == colored.end()) return std::nullopt;
        int edge = black + static_cast<int>(it - colored.begin());
        path.push_back(2 * edge + (it->turn.first == from ? 0 : 1));
    }
    return path;
}

bool is_smooth(const TransitionDigraph& t, const std::vector<int>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int x = path[i], y = path[i + 1];
        if (t.head(x) != t.tail(y)) return false;
        if (t.is_black(TransitionDigraph::edge_of(x)) == t.is_black(TransitionDigraph::edge_of(y)))
            return false;
        if (y == TransitionDigraph::reverse(x)) return false;
    }
    return true;
}

}  // namespace iwg
