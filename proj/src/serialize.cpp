#include "iwg/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace iwg {

int to_signed(Direction d) { return is_forward(d) ? edge_index(d) + 1 : -(edge_index(d) + 1); }

Direction from_signed(int s, Rank rank) {
    if (s == 0 || s > rank.value() || -s > rank.value())
        throw std::invalid_argument("signed direction " + std::to_string(s) + " out of range");
    return s > 0 ? forward_direction(s - 1) : bar(forward_direction(-s - 1));
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("JSON syntax error (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")",
                         offset);
    }
}

// --- maps --------------------------------------------------------------------

Json to_json(const RoseMap& m, const Alphabet& alphabet) {
    Json images = Json::object();
    for (int i = 0; i < m.rank().value(); ++i)
        images[alphabet.format(forward_direction(i))] = alphabet.format(m.images()[i]);
    return Json{{"rank", m.rank().value()}, {"images", images}};
}

namespace {

EdgePath path_from_json(const Json& j, Rank rank, const Alphabet& alphabet) {
    EdgePath p;
    if (j.is_string()) {
        p = alphabet.parse_path(j.get<std::string>());
        for (Direction d : p)
            if (!rank.contains(d))
                throw std::invalid_argument("letter outside rank in \"" + j.get<std::string>() + "\"");
    } else if (j.is_array()) {
        for (const auto& x : j) p.push_back(from_signed(x.get<int>(), rank));
    } else {
        throw std::invalid_argument("edge image must be a string or an array");
    }
    return p;
}

}  // namespace

RoseMap rose_map_from_json(const Json& j, const Alphabet& alphabet) {
    const Json& images = j.at("images");
    int r = j.contains("rank") ? j.at("rank").get<int>() : static_cast<int>(images.size());
    Rank rank(r);
    std::vector<EdgePath> out(r);
    if (images.is_object()) {
        if (static_cast<int>(images.size()) != r)
            throw std::invalid_argument("expected " + std::to_string(r) + " edge images");
        for (const auto& [key, value] : images.items()) {
            Direction d = alphabet.parse_direction(key);
            if (!is_forward(d) || !rank.contains(d))
                throw std::invalid_argument("image key \"" + key + "\" is not a petal");
            out[edge_index(d)] = path_from_json(value, rank, alphabet);
        }
    } else {
        if (static_cast<int>(images.size()) != r)
            throw std::invalid_argument("expected " + std::to_string(r) + " edge images");
        for (int i = 0; i < r; ++i) out[i] = path_from_json(images[i], rank, alphabet);
    }
    return RoseMap(rank, std::move(out));
}

// --- graphs --------------------------------------------------------------------

Json to_json(const WhiteheadGraph& g) {
    Json edges = Json::array();
    for (const Turn& t : g.edges()) edges.push_back({t.first, t.second});
    return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

WhiteheadGraph graph_from_json(const Json& j) {
    std::vector<int> vs;
    const Json& v = j.at("vertices");
    if (v.is_number_integer()) {
        for (int i = 0; i < v.get<int>(); ++i) vs.push_back(i);
    } else {
        vs = v.get<std::vector<int>>();
    }
    std::vector<Turn> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return WhiteheadGraph(std::move(vs), std::move(es));
}

// --- structures ----------------------------------------------------------------

Json to_json(const LttStructure& g) {
    Json edges = Json::array();
    for (const auto& e : g.colored_edges())
        edges.push_back({{"u", to_signed(e.turn.first)},
                         {"v", to_signed(e.turn.second)},
                         {"color", e.color == EdgeColor::Red ? "red" : "purple"}});
    return Json{{"rank", g.rank().value()},
                {"red_vertex", to_signed(g.red_vertex())},
                {"colored_edges", edges}};
}

LttStructure ltt_from_json(const Json& j) {
    Rank rank(j.at("rank").get<int>());
    Direction red = from_signed(j.at("red_vertex").get<int>(), rank);
    std::vector<ColoredEdge> edges;
    for (const auto& e : j.at("colored_edges")) {
        std::string color = e.at("color").get<std::string>();
        if (color != "red" && color != "purple")
            throw std::invalid_argument("unknown edge color \"" + color + "\"");
        edges.push_back({Turn(from_signed(e.at("u").get<int>(), rank),
                              from_signed(e.at("v").get<int>(), rank)),
                         color == "red" ? EdgeColor::Red : EdgeColor::Purple});
    }
    return LttStructure(rank, red, std::move(edges));
}

Json to_json(const GeneratingTriple& t) {
    return Json{{"gen", {{"a", to_signed(t.gen.a)}, {"u", to_signed(t.gen.u)}}},
                {"source", to_json(t.source)},
                {"dest", to_json(t.dest)}};
}

GeneratingTriple triple_from_json(const Json& j) {
    LttStructure source = ltt_from_json(j.at("source"));
    LttStructure dest = ltt_from_json(j.at("dest"));
    Rank rank = dest.rank();
    Generator gen(rank, from_signed(j.at("gen").at("a").get<int>(), rank),
                  from_signed(j.at("gen").at("u").get<int>(), rank));
    return {gen, std::move(source), std::move(dest)};
}

// --- diagrams ------------------------------------------------------------------

Json to_json(const IdDiagram& d) {
    Json nodes = Json::array();
    for (const auto& g : d.nodes) nodes.push_back(to_json(g));
    Json edges = Json::array();
    for (const auto& e : d.edges)
        edges.push_back({{"source", e.source},
                         {"dest", e.dest},
                         {"kind", to_string(e.kind)},
                         {"det", {to_signed(e.det.first), to_signed(e.det.second)}},
                         {"gen", {{"a", to_signed(e.triple.gen.a)}, {"u", to_signed(e.triple.gen.u)}}}});
    Json comps = Json::array();
    for (const auto& c : d.components) {
        Json census = Json::array();
        for (Direction x : c.red_census) census.push_back(to_signed(x));
        comps.push_back({{"nodes", c.nodes}, {"edges", c.edges}, {"red_census", census}});
    }
    return Json{{"rank", d.rank.value()}, {"nodes", nodes}, {"edges", edges}, {"components", comps}};
}

IdDiagram diagram_from_json(const Json& j) {
    IdDiagram d;
    d.rank = Rank(j.at("rank").get<int>());
    for (const auto& n : j.at("nodes")) d.nodes.push_back(ltt_from_json(n));
    auto node = [&](int i) -> const LttStructure& {
        if (i < 0 || i >= static_cast<int>(d.nodes.size()))
            throw std::invalid_argument("edge refers to a missing node");
        return d.nodes[i];
    };
    for (const auto& e : j.at("edges")) {
        DiagramEdge de;
        de.source = e.at("source").get<int>();
        de.dest = e.at("dest").get<int>();
        std::string kind = e.at("kind").get<std::string>();
        if (kind != "extension" && kind != "switch")
            throw std::invalid_argument("unknown move kind \"" + kind + "\"");
        de.kind = kind == "extension" ? MoveKind::Extension : MoveKind::Switch;
        de.det = Turn(from_signed(e.at("det")[0].get<int>(), d.rank),
                      from_signed(e.at("det")[1].get<int>(), d.rank));
        Generator gen(d.rank, from_signed(e.at("gen").at("a").get<int>(), d.rank),
                      from_signed(e.at("gen").at("u").get<int>(), d.rank));
        de.triple = {gen, node(de.source), node(de.dest)};
        d.edges.push_back(std::move(de));
    }
    for (const auto& c : j.at("components")) {
        Component comp;
        comp.nodes = c.at("nodes").get<std::vector<int>>();
        comp.edges = c.at("edges").get<std::vector<int>>();
        for (const auto& x : c.at("red_census")) comp.red_census.push_back(from_signed(x.get<int>(), d.rank));
        d.components.push_back(std::move(comp));
    }
    return d;
}

// --- DOT -----------------------------------------------------------------------

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string structure_label(const LttStructure& g, const Alphabet& alphabet) {
    std::string s = "red " + alphabet.format(g.red_vertex()) + ":";
    for (const auto& e : g.colored_edges())
        s += " " + alphabet.format(e.turn) + (e.color == EdgeColor::Red ? "*" : "");
    return s;
}

}  // namespace

std::string ltt_to_dot(const LttStructure& g, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "graph ltt {\n";
    for (Direction d = 1; d <= g.rank().directions(); ++d)
        out << "  " << d << " [label=" << quoted(alphabet.format(d))
            << ", color=" << (d == g.red_vertex() ? "red" : "purple") << "];\n";
    for (int i = 0; i < g.rank().value(); ++i)
        out << "  " << forward_direction(i) << " -- " << bar(forward_direction(i))
            << " [color=black, penwidth=2];\n";
    for (const auto& e : g.colored_edges())
        out << "  " << e.turn.first << " -- " << e.turn.second
            << " [color=" << (e.color == EdgeColor::Red ? "red" : "purple") << "];\n";
    out << "}\n";
    return out.str();
}

std::string diagram_to_dot(const IdDiagram& d, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "digraph id_diagram {\n";
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        out << "  subgraph cluster_" << c << " {\n    label=" << quoted("component " + std::to_string(c))
            << ";\n";
        for (int v : d.components[c].nodes) out << "    n" << v << ";\n";
        out << "  }\n";
    }
    for (std::size_t v = 0; v < d.nodes.size(); ++v)
        out << "  n" << v << " [shape=box, label=" << quoted(structure_label(d.nodes[v], alphabet))
            << "];\n";
    for (const auto& e : d.edges)
        out << "  n" << e.source << " -> n" << e.dest << " [label="
            << quoted(alphabet.format(e.triple.gen.u) + "->" + alphabet.format(e.triple.gen.a) +
                      alphabet.format(e.triple.gen.u) + " " + to_string(e.kind))
            << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace iwg
