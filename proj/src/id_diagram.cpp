#include "iwg/id_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "iwg/epp.hpp"

namespace iwg {

void validate_target(const WhiteheadGraph& g, Rank rank) {
    int want = rank.directions() - 1;
    if (static_cast<int>(g.vertex_count()) != want)
        throw InvalidTarget("target graph needs " + std::to_string(want) + " vertices, has " +
                            std::to_string(g.vertex_count()));
    if (!g.connected()) throw InvalidTarget("target graph is not connected");
}

namespace {

// Distinct edge sets obtained by placing the target's vertices on slots
// 0..n-1, as lists of slot pairs.
std::vector<std::vector<std::pair<int, int>>> slot_labellings(const WhiteheadGraph& target) {
    const auto& vs = target.vertices();
    int n = static_cast<int>(vs.size());
    auto index = [&](int v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::vector<std::pair<int, int>> edges;
    for (const Turn& t : target.edges()) edges.emplace_back(index(t.first), index(t.second));

    auto bit = [n](int i, int j) {
        if (i > j) std::swap(i, j);
        return i * n + j;
    };
    std::set<std::vector<char>> seen;
    std::vector<int> slot(n);
    std::iota(slot.begin(), slot.end(), 0);
    do {
        std::vector<char> mask(static_cast<std::size_t>(n * n), 0);
        for (auto [i, j] : edges) mask[bit(slot[i], slot[j])] = 1;
        seen.insert(std::move(mask));
    } while (std::next_permutation(slot.begin(), slot.end()));

    std::vector<std::vector<std::pair<int, int>>> out;
    for (const auto& mask : seen) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (mask[bit(i, j)]) es.emplace_back(i, j);
        out.push_back(std::move(es));
    }
    return out;
}

}  // namespace

std::vector<LttStructure> enumerate_structures(const WhiteheadGraph& target, Rank rank,
                                               bool admissible_only) {
    validate_target(target, rank);
    auto labellings = slot_labellings(target);
    std::vector<LttStructure> out;
    int n = rank.directions();
    for (Direction red = 1; red <= n; ++red) {
        std::vector<Direction> purple;
        for (Direction d = 1; d <= n; ++d)
            if (d != red) purple.push_back(d);
        for (const auto& lab : labellings) {
            std::vector<ColoredEdge> base;
            for (auto [i, j] : lab) base.push_back({Turn(purple[i], purple[j]), EdgeColor::Purple});
            for (Direction end : purple) {
                if (end == bar(red)) continue;
                auto edges = base;
                edges.push_back({Turn(red, end), EdgeColor::Red});
                LttStructure g(rank, red, std::move(edges));
                if (admissible_only && !is_birecurrent(g).birecurrent) continue;
                out.push_back(std::move(g));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> IdDiagram::find(const LttStructure& g) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), g);
    if (it == nodes.end() || *it != g) return std::nullopt;
    return static_cast<int>(it - nodes.begin());
}

IdDiagram build_preliminary(const WhiteheadGraph& target, Rank rank) {
    IdDiagram d;
    d.rank = rank;
    d.nodes = enumerate_structures(target, rank, true);
    for (int k = 0; k < static_cast<int>(d.nodes.size()); ++k) {
        const LttStructure& dest = d.nodes[k];
        for (const Turn& det : determining_edges(dest)) {
            for (MoveKind kind : {MoveKind::Extension, MoveKind::Switch}) {
                GeneratingTriple t = make_move(kind, dest, det);
                auto src = d.find(t.source);
                if (!src) continue;
                d.edges.push_back({*src, k, kind, det, std::move(t)});
            }
        }
    }
    std::sort(d.edges.begin(), d.edges.end(), [](const DiagramEdge& x, const DiagramEdge& y) {
        return std::tie(x.source, x.dest, x.kind, x.det) < std::tie(y.source, y.dest, y.kind, y.det);
    });
    return d;
}

std::vector<std::vector<int>> strongly_connected_components(
    int node_count, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> succ(node_count);
    for (auto [a, b] : edges) succ[a].push_back(b);
    std::vector<int> index(node_count, -1), low(node_count, 0), stack;
    std::vector<char> on_stack(node_count, 0);
    std::vector<std::vector<int>> out;
    int counter = 0;
    for (int root = 0; root < node_count; ++root) {
        if (index[root] != -1) continue;
        std::vector<std::pair<int, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, it] = call.back();
            if (it < succ[v].size()) {
                int w = succ[v][it++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] != index[done]) continue;
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
    std::sort(out.begin(), out.end());
    return out;
}

IdDiagram id_diagram(const IdDiagram& pre) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& e : pre.edges) arcs.emplace_back(e.source, e.dest);
    auto sccs = strongly_connected_components(static_cast<int>(pre.nodes.size()), arcs);

    std::vector<int> comp_of(pre.nodes.size(), -1);
    for (std::size_t c = 0; c < sccs.size(); ++c)
        for (int v : sccs[c]) comp_of[v] = static_cast<int>(c);
    std::vector<char> keep_comp(sccs.size(), 0);
    for (const auto& e : pre.edges)
        if (comp_of[e.source] == comp_of[e.dest]) keep_comp[comp_of[e.source]] = 1;

    IdDiagram d;
    d.rank = pre.rank;
    std::vector<int> renumber(pre.nodes.size(), -1);
    for (std::size_t v = 0; v < pre.nodes.size(); ++v) {
        if (!keep_comp[comp_of[v]]) continue;
        renumber[v] = static_cast<int>(d.nodes.size());
        d.nodes.push_back(pre.nodes[v]);
    }
    std::map<int, int> new_comp;
    for (std::size_t c = 0; c < sccs.size(); ++c) {
        if (!keep_comp[c]) continue;
        new_comp[static_cast<int>(c)] = static_cast<int>(d.components.size());
        Component comp;
        for (int v : sccs[c]) comp.nodes.push_back(renumber[v]);
        std::sort(comp.nodes.begin(), comp.nodes.end());
        d.components.push_back(std::move(comp));
    }
    for (const auto& e : pre.edges) {
        if (comp_of[e.source] != comp_of[e.dest] || !keep_comp[comp_of[e.source]]) continue;
        DiagramEdge ne = e;
        ne.source = renumber[e.source];
        ne.dest = renumber[e.dest];
        d.components[new_comp[comp_of[e.source]]].edges.push_back(static_cast<int>(d.edges.size()));
        d.edges.push_back(std::move(ne));
    }
    for (auto& comp : d.components) {
        std::set<Direction> census;
        for (int v : comp.nodes) census.insert(d.nodes[v].red_vertex());
        comp.red_census.assign(census.begin(), census.end());
    }
    std::sort(d.components.begin(), d.components.end(),
              [](const Component& x, const Component& y) { return x.nodes < y.nodes; });
    return d;
}

IdDiagram id_diagram(const WhiteheadGraph& target, Rank rank) {
    return id_diagram(build_preliminary(target, rank));
}

bool census_covers_all_pairs(const std::vector<Direction>& census, Rank rank) {
    std::vector<char> seen(rank.value(), 0);
    for (Direction d : census) seen[edge_index(d)] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

PotentialTest irreducibility_potential_test(const IdDiagram& d) {
    PotentialTest out;
    for (const auto& c : d.components) {
        bool pass = census_covers_all_pairs(c.red_census, d.rank);
        out.component_passes.push_back(pass);
        out.passes = out.passes || pass;
    }
    return out;
}

std::vector<std::vector<int>> epp_classes(const IdDiagram& d) {
    auto group = epp_group(d.rank);
    std::map<std::vector<GeneratingTriple>, std::vector<int>> by_form;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        std::optional<std::vector<GeneratingTriple>> best;
        for (const auto& p : group) {
            std::vector<GeneratingTriple> form;
            for (int e : d.components[c].edges) form.push_back(epp_apply(p, d.edges[e].triple));
            std::sort(form.begin(), form.end());
            if (!best || form < *best) best = std::move(form);
        }
        by_form[*best].push_back(static_cast<int>(c));
    }
    std::vector<std::vector<int>> out;
    for (auto& [form, members] : by_form) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Direction> canonical_census(const std::vector<Direction>& census, Rank rank) {
    std::vector<Direction> best = census;
    std::sort(best.begin(), best.end());
    for (const auto& p : epp_group(rank)) {
        std::vector<Direction> img;
        for (Direction x : census) img.push_back(epp_apply(p, x));
        std::sort(img.begin(), img.end());
        best = std::min(best, img);
    }
    return best;
}

std::vector<std::vector<int>> find_loops(const IdDiagram& d, int node, int max_len,
                                         std::size_t limit) {
    std::vector<std::vector<int>> out_edges(d.nodes.size());
    for (std::size_t e = 0; e < d.edges.size(); ++e)
        out_edges[d.edges[e].source].push_back(static_cast<int>(e));
    std::vector<std::vector<int>> loops;
    std::vector<int> path;
    std::vector<char> on_path(d.nodes.size(), 0);
    auto dfs = [&](auto&& self, int v) -> void {
        if (loops.size() >= limit) return;
        for (int e : out_edges[v]) {
            if (loops.size() >= limit) return;
            int w = d.edges[e].dest;
            if (w == node) {
                path.push_back(e);
                loops.push_back(path);
                path.pop_back();
                continue;
            }
            if (on_path[w] || static_cast<int>(path.size()) + 1 >= max_len) continue;
            on_path[w] = 1;
            path.push_back(e);
            self(self, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    on_path[node] = 1;
    if (max_len >= 1) dfs(dfs, node);
    return loops;
}

LoopReport verify_loop(const IdDiagram& d, const std::vector<int>& edges) {
    if (edges.empty()) throw std::invalid_argument("empty loop");
    for (int e : edges)
        if (e < 0 || e >= static_cast<int>(d.edges.size()))
            throw std::invalid_argument("edge index out of range");
    for (std::size_t k = 0; k + 1 < edges.size(); ++k)
        if (d.edges[edges[k]].dest != d.edges[edges[k + 1]].source)
            throw std::invalid_argument("loop edges are not consecutive");
    if (d.edges[edges.back()].dest != d.edges[edges.front()].source)
        throw std::invalid_argument("loop is not closed");

    LoopReport r;
    FoldDecomposition fd;
    fd.rank = d.rank;
    fd.final_permutation = EdgePermutation::identity(d.rank);
    for (int e : edges) fd.generators.push_back(d.edges[e].triple.gen);
    try {
        r.composite = fd.compose_all();
    } catch (const std::domain_error& ex) {
        r.notes.push_back(std::string("composite collapses: ") + ex.what());
        return r;
    }
    r.train_track = is_train_track(r.composite).train_track;
    if (!r.train_track) r.notes.push_back("composite is not a train track");
    r.decomposition = validate_ideal_decomposition(fd);
    for (const auto& v : r.decomposition.violations) r.notes.push_back(v);
    const LttStructure& base = d.nodes[d.edges[edges.back()].dest];
    try {
        r.ltt_matches_basepoint = r.train_track && ltt_of_map(r.composite) == base;
    } catch (const std::invalid_argument& ex) {
        r.notes.push_back(std::string("no ltt structure: ") + ex.what());
    }
    if (r.train_track && !r.ltt_matches_basepoint)
        r.notes.push_back("ltt structure of the composite differs from the basepoint");
    return r;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::UnachievedByBirecurrency: return "UnachievedByBirecurrency";
        case Verdict::UnachievedByIrreducibilityPotential: return "UnachievedByIrreducibilityPotential";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

Analysis analyze_target(const WhiteheadGraph& target, Rank rank) {
    Analysis a;
    a.structure_count = enumerate_structures(target, rank, false).size();
    a.preliminary = build_preliminary(target, rank);
    a.admissible_count = a.preliminary.nodes.size();
    a.diagram = id_diagram(a.preliminary);
    a.potential = irreducibility_potential_test(a.diagram);
    a.classes = epp_classes(a.diagram);
    if (a.admissible_count == 0)
        a.verdict = Verdict::UnachievedByBirecurrency;
    else if (!a.potential.passes)
        a.verdict = Verdict::UnachievedByIrreducibilityPotential;
    else
        a.verdict = Verdict::Inconclusive;
    return a;
}

Verdict verdict(const WhiteheadGraph& target, Rank rank) {
    if (enumerate_structures(target, rank, true).empty()) return Verdict::UnachievedByBirecurrency;
    return irreducibility_potential_test(id_diagram(target, rank)).passes
               ? Verdict::Inconclusive
               : Verdict::UnachievedByIrreducibilityPotential;
}

}  // namespace iwg
