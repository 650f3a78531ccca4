#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iwg/catalog.hpp"
#include "iwg/epp.hpp"
#include "iwg/id_diagram.hpp"
#include "iwg/ltt.hpp"
#include "iwg/rose_map.hpp"
#include "iwg/serialize.hpp"

namespace py = pybind11;
using namespace iwg;

namespace {

const Alphabet kAlphabet;

RoseMap map_from_words(const std::vector<std::string>& words) {
    std::vector<EdgePath> images;
    for (const auto& w : words) images.push_back(kAlphabet.parse_path(w));
    return RoseMap(Rank(static_cast<int>(words.size())), std::move(images));
}

std::vector<std::string> words(const std::vector<Direction>& ds) {
    std::vector<std::string> out;
    for (Direction d : ds) out.push_back(kAlphabet.format(d));
    return out;
}

std::vector<std::pair<std::string, std::string>> turn_words(const std::vector<Turn>& ts) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Turn& t : ts) out.emplace_back(kAlphabet.format(t.first), kAlphabet.format(t.second));
    return out;
}

WhiteheadGraph graph_from(int vertices, const std::vector<std::pair<int, int>>& edges) {
    return WhiteheadGraph::on_range(vertices, edges);
}

Rank rank_for(int vertices, std::optional<int> rank) {
    if (rank) return Rank(*rank);
    if (vertices % 2 == 0) throw InvalidTarget("vertex count must be odd to infer the rank");
    return Rank((vertices + 1) / 2);
}

py::dict analyze_map(const std::vector<std::string>& images) {
    RoseMap m = map_from_words(images);
    py::dict out;
    DirectionMap dg = direction_map(m);
    py::dict dgd;
    for (Direction d = 1; d <= m.rank().directions(); ++d) dgd[py::str(kAlphabet.format(d))] = kAlphabet.format(dg[d]);
    out["direction_map"] = dgd;
    std::vector<std::vector<std::string>> gs;
    for (const auto& g : gates(m)) gs.push_back(words(g));
    out["gates"] = gs;
    PeriodicDirections pf = periodic_and_fixed_directions(m);
    out["periodic"] = words(pf.periodic);
    out["fixed"] = words(pf.fixed);
    TrainTrackVerdict tt = is_train_track(m);
    out["train_track"] = tt.train_track;
    if (tt.train_track) {
        out["lw_edges"] = turn_words(local_whitehead_graph(m).edges());
        out["sw_edges"] = turn_words(stable_whitehead_graph(m).edges());
        try {
            LttStructure g = ltt_of_map(m);
            out["red_vertex"] = kAlphabet.format(g.red_vertex());
            out["red_edge"] = turn_words({g.red_edge()}).front();
            out["birecurrent"] = is_birecurrent(g).birecurrent;
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

py::object fold_decomposition(const std::vector<std::string>& images) {
    FoldResult fr = stallings_fold_decomposition(map_from_words(images));
    if (auto* bad = std::get_if<NotProperFullFolds>(&fr))
        throw std::domain_error("fold " + std::to_string(bad->step) + ": " + bad->description);
    const auto& d = std::get<FoldDecomposition>(fr);
    py::list gens;
    for (const Generator& g : d.generators)
        gens.append(py::make_tuple(kAlphabet.format(g.a), kAlphabet.format(g.u)));
    py::dict out;
    out["generators"] = gens;
    out["permutation"] = words(d.final_permutation.forward_image);
    out["ideal"] = validate_ideal_decomposition(d).ideal();
    return std::move(out);
}

py::dict check_graph(int vertices, const std::vector<std::pair<int, int>>& edges, std::optional<int> rank) {
    WhiteheadGraph g = graph_from(vertices, edges);
    Analysis a = analyze_target(g, rank_for(vertices, rank));
    py::dict out;
    out["verdict"] = to_string(a.verdict);
    out["structures"] = a.structure_count;
    out["admissible"] = a.admissible_count;
    out["diagram_nodes"] = a.diagram.nodes.size();
    out["diagram_edges"] = a.diagram.edges.size();
    std::vector<std::vector<std::string>> census;
    for (const auto& c : a.diagram.components) census.push_back(words(c.red_census));
    out["component_census"] = census;
    out["epp_classes"] = a.classes.size();
    return out;
}

std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> catalog(int n) {
    std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> out;
    for (const auto& e : connected_graph_catalog(n)) {
        std::vector<std::pair<int, int>> es;
        for (const Turn& t : e.graph.edges()) es.emplace_back(t.first, t.second);
        out.emplace_back(e.id, std::move(es));
    }
    return out;
}

std::string diagram_json(int vertices, const std::vector<std::pair<int, int>>& edges, std::optional<int> rank) {
    return to_json(id_diagram(graph_from(vertices, edges), rank_for(vertices, rank))).dump();
}

}  // namespace

PYBIND11_MODULE(_iwg, m) {
    m.doc() = "Ideal Whitehead graph unachievability tests";
    py::register_exception<InvalidTarget>(m, "InvalidTarget", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("analyze_map", &analyze_map, py::arg("images"),
          "Direction map, gates, train track check and Whitehead graphs of a rose map.");
    m.def("fold_decomposition", &fold_decomposition, py::arg("images"),
          "Proper full fold decomposition; raises ValueError when none exists.");
    m.def("check_graph", &check_graph, py::arg("vertices"), py::arg("edges"), py::arg("rank") = py::none());
    m.def("catalog", &catalog, py::arg("n"), "Connected graphs on n vertices as (id, edges).");
    m.def("diagram_json", &diagram_json, py::arg("vertices"), py::arg("edges"), py::arg("rank") = py::none());
    m.def("star_edges", [](int n) {
        std::vector<std::pair<int, int>> es;
        WhiteheadGraph g = star_graph(n);
        for (const Turn& t : g.edges()) es.emplace_back(t.first, t.second);
        return es;
    });
}
