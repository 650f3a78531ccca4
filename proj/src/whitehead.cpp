#include "iwg/whitehead.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace iwg {

WhiteheadGraph::WhiteheadGraph(std::vector<int> vertices, std::vector<Turn> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Turn& t : edges_) {
        if (t.degenerate())
            throw std::invalid_argument("loop at vertex " + std::to_string(t.first));
        if (!has_vertex(t.first) || !has_vertex(t.second))
            throw std::invalid_argument("edge endpoint is not a vertex");
    }
}

WhiteheadGraph WhiteheadGraph::on_range(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Turn> es;
    for (auto [a, b] : edges) es.emplace_back(a, b);
    return WhiteheadGraph(std::move(vs), std::move(es));
}

bool WhiteheadGraph::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool WhiteheadGraph::has_edge(int a, int b) const {
    return std::binary_search(edges_.begin(), edges_.end(), Turn(a, b));
}

int WhiteheadGraph::degree(int v) const {
    int d = 0;
    for (const Turn& t : edges_) d += t.contains(v) ? 1 : 0;
    return d;
}

WhiteheadGraph WhiteheadGraph::restricted_to(const std::vector<int>& keep) const {
    std::vector<int> vs;
    for (int v : keep)
        if (has_vertex(v)) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    std::vector<Turn> es;
    for (const Turn& t : edges_)
        if (std::binary_search(vs.begin(), vs.end(), t.first) &&
            std::binary_search(vs.begin(), vs.end(), t.second))
            es.push_back(t);
    return WhiteheadGraph(std::move(vs), std::move(es));
}

std::vector<std::vector<int>> WhiteheadGraph::components() const {
    std::map<int, int> parent;
    for (int v : vertices_) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Turn& t : edges_) parent[find(t.first)] = find(t.second);
    std::map<int, std::vector<int>> groups;
    for (int v : vertices_) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

bool WhiteheadGraph::connected() const { return components().size() <= 1; }

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<Rational> index_list(const WhiteheadGraph& w) {
    std::vector<Rational> out;
    for (const auto& c : w.components()) {
        int k = static_cast<int>(c.size());
        // 1 - k/2 = (2 - k)/2
        int num = 2 - k;
        out.push_back(num % 2 == 0 ? Rational{num / 2, 1} : Rational{num, 2});
    }
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    });
    return out;
}

namespace {

struct Dense {
    int n = 0;
    std::vector<int> label;              // dense index -> original vertex
    std::vector<std::vector<char>> adj;  // dense adjacency
    std::vector<int> deg;
};

Dense densify(const WhiteheadGraph& g) {
    Dense d;
    d.n = static_cast<int>(g.vertex_count());
    d.label = g.vertices();
    d.adj.assign(d.n, std::vector<char>(d.n, 0));
    d.deg.assign(d.n, 0);
    auto index = [&](int v) {
        return static_cast<int>(std::lower_bound(d.label.begin(), d.label.end(), v) -
                                d.label.begin());
    };
    for (const Turn& t : g.edges()) {
        int a = index(t.first), b = index(t.second);
        d.adj[a][b] = d.adj[b][a] = 1;
        ++d.deg[a];
        ++d.deg[b];
    }
    return d;
}

// Calls visit(mapping) for every isomorphism a -> b; stops when visit
// returns false.
void for_each_isomorphism(const Dense& a, const Dense& b,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    if (a.n != b.n) return;
    std::vector<int> da = a.deg, db = b.deg;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return;

    // Map high-degree vertices first; they prune hardest.
    std::vector<int> order(a.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a.deg[x] > a.deg[y]; });

    std::vector<int> map(a.n, -1);
    std::vector<char> used(b.n, 0);
    bool stop = false;
    std::function<void(int)> go = [&](int depth) {
        if (stop) return;
        if (depth == a.n) {
            if (!visit(map)) stop = true;
            return;
        }
        int v = order[depth];
        for (int w = 0; w < b.n && !stop; ++w) {
            if (used[w] || b.deg[w] != a.deg[v]) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                int u = order[i];
                ok = a.adj[v][u] == b.adj[w][map[u]];
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            go(depth + 1);
            used[w] = 0;
            map[v] = -1;
        }
    };
    go(0);
}

}  // namespace

std::optional<std::vector<std::pair<int, int>>> find_isomorphism(const WhiteheadGraph& a,
                                                                 const WhiteheadGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    Dense da = densify(a), db = densify(b);
    std::optional<std::vector<std::pair<int, int>>> out;
    for_each_isomorphism(da, db, [&](const std::vector<int>& m) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < da.n; ++i) pairs.emplace_back(da.label[i], db.label[m[i]]);
        out = std::move(pairs);
        return false;
    });
    return out;
}

bool isomorphic(const WhiteheadGraph& a, const WhiteheadGraph& b) {
    return find_isomorphism(a, b).has_value();
}

std::uint64_t automorphism_count(const WhiteheadGraph& g) {
    Dense d = densify(g);
    std::uint64_t count = 0;
    for_each_isomorphism(d, d, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

std::uint64_t canonical_code(const WhiteheadGraph& g) {
    Dense d = densify(g);
    if (d.n > 11) throw std::invalid_argument("canonical_code supports at most 11 vertices");

    // Vertex invariant: degree, then sorted neighbour degrees.
    std::vector<std::vector<int>> key(d.n);
    for (int v = 0; v < d.n; ++v) {
        key[v].push_back(-d.deg[v]);
        std::vector<int> nb;
        for (int w = 0; w < d.n; ++w)
            if (d.adj[v][w]) nb.push_back(-d.deg[w]);
        std::sort(nb.begin(), nb.end());
        key[v].insert(key[v].end(), nb.begin(), nb.end());
    }
    std::vector<int> order(d.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return key[x] < key[y]; });

    // Permute within runs of equal keys.
    std::vector<std::pair<int, int>> runs;
    for (int i = 0; i < d.n;) {
        int j = i;
        while (j < d.n && key[order[j]] == key[order[i]]) ++j;
        runs.emplace_back(i, j);
        i = j;
    }

    std::uint64_t best = ~std::uint64_t{0};
    auto evaluate = [&]() {
        std::uint64_t code = 0;
        for (int i = 0; i < d.n; ++i)
            for (int j = i + 1; j < d.n; ++j) code = (code << 1) | (d.adj[order[i]][order[j]] ? 1u : 0u);
        best = std::min(best, code);
    };
    std::function<void(std::size_t)> go = [&](std::size_t r) {
        if (r == runs.size()) {
            evaluate();
            return;
        }
        auto [lo, hi] = runs[r];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            go(r + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    go(0);
    return best;
}

WhiteheadGraph from_canonical_code(int n, std::uint64_t code) {
    std::vector<std::pair<int, int>> edges;
    int bit = n * (n - 1) / 2 - 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, --bit)
            if ((code >> bit) & 1u) edges.emplace_back(i, j);
    return WhiteheadGraph::on_range(n, edges);
}

}  // namespace iwg
