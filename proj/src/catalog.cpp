#include "iwg/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace iwg {

std::string catalog_id(int n, const WhiteheadGraph& g, std::uint64_t code) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "n%d-e%zu-%llx", n, g.edge_count(),
                  static_cast<unsigned long long>(code));
    return buf;
}

std::vector<GraphCatalogEntry> connected_graph_catalog(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("catalog supports 1 <= n <= 9");
    std::set<std::uint64_t> level{canonical_code(WhiteheadGraph::on_range(1, {}))};
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : level) {
            WhiteheadGraph g = from_canonical_code(k - 1, code);
            std::vector<std::pair<int, int>> base;
            for (const Turn& t : g.edges()) base.emplace_back(t.first, t.second);
            for (unsigned subset = 1; subset < (1u << (k - 1)); ++subset) {
                auto edges = base;
                for (int v = 0; v < k - 1; ++v)
                    if ((subset >> v) & 1u) edges.emplace_back(v, k - 1);
                next.insert(canonical_code(WhiteheadGraph::on_range(k, edges)));
            }
        }
        level = std::move(next);
    }
    std::vector<GraphCatalogEntry> out;
    for (std::uint64_t code : level) {
        GraphCatalogEntry e;
        e.code = code;
        e.graph = from_canonical_code(n, code);
        e.id = catalog_id(n, e.graph, code);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const GraphCatalogEntry& a, const GraphCatalogEntry& b) {
        if (a.graph.edge_count() != b.graph.edge_count())
            return a.graph.edge_count() < b.graph.edge_count();
        return a.code < b.code;
    });
    return out;
}

std::vector<std::uint64_t> connected_codes_by_edge_subsets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::set<std::uint64_t> codes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1u) edges.push_back(pairs[b]);
        WhiteheadGraph g = WhiteheadGraph::on_range(n, edges);
        if (g.connected()) codes.insert(canonical_code(g));
    }
    return {codes.begin(), codes.end()};
}

WhiteheadGraph star_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return WhiteheadGraph::on_range(n, e);
}

WhiteheadGraph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return WhiteheadGraph::on_range(n, e);
}

WhiteheadGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return WhiteheadGraph::on_range(n, e);
}

WhiteheadGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return WhiteheadGraph::on_range(n, e);
}

}  // namespace iwg
