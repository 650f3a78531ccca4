#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "iwg/catalog.hpp"
#include "iwg/epp.hpp"
#include "iwg/id_diagram.hpp"
#include "iwg/ltt.hpp"
#include "iwg/rose_map.hpp"
#include "iwg/serialize.hpp"

using namespace iwg;
namespace fs = std::filesystem;

namespace {

constexpr int kExitInvalidGraph = 2;
constexpr int kExitBadInput = 1;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string format_directions(const std::vector<Direction>& ds, const Alphabet& al) {
    std::vector<std::string> parts;
    for (Direction d : ds) parts.push_back(al.format(d));
    return "{" + join(parts, ",") + "}";
}

std::string format_turns(const std::vector<Turn>& ts, const Alphabet& al) {
    std::vector<std::string> parts;
    for (const Turn& t : ts) parts.push_back(al.format(t));
    return parts.empty() ? "(none)" : join(parts, " ");
}

std::string format_structure(const LttStructure& g, const Alphabet& al) {
    std::string s = "red vertex " + al.format(g.red_vertex()) + "; red edges " +
                    format_turns(g.red_edges(), al) + "; purple edges " +
                    format_turns(g.purple_edges(), al);
    return s;
}

std::string format_generator(const Generator& g, const Alphabet& al) {
    return al.format(g.u) + " -> " + al.format(g.a) + al.format(g.u);
}

std::optional<fs::path> cache_dir() {
    const char* env = std::getenv("IWG_CACHE_DIR");
    if (!env || !*env) return std::nullopt;
    fs::path p(env);
    fs::create_directories(p);
    return p;
}

// --- analyze-map ---------------------------------------------------------------

struct AnalyzeOptions {
    std::string input = "-";
    std::string format = "text";
    bool minus_style = false;
};

int cmd_analyze_map(const AnalyzeOptions& o) {
    Alphabet al("abcdefgh", o.minus_style ? InverseStyle::Minus : InverseStyle::Prime);
    RoseMap m = rose_map_from_json(parse_json(read_input(o.input)), al);
    Json j;
    std::ostringstream out;

    j["map"] = to_json(m, al);
    out << "rank: " << m.rank().value() << "\n";
    for (int i = 0; i < m.rank().value(); ++i)
        out << "  " << al.format(forward_direction(i)) << " -> " << al.format(m.images()[i]) << "\n";

    DirectionMap dg = direction_map(m);
    std::vector<std::string> dgs;
    for (Direction d = 1; d <= m.rank().directions(); ++d) {
        dgs.push_back(al.format(d) + "->" + al.format(dg[d]));
        j["direction_map"][al.format(d)] = al.format(dg[d]);
    }
    out << "Dg: " << join(dgs, " ") << "\n";

    auto gs = gates(m);
    std::vector<std::string> gate_text;
    for (const auto& g : gs) gate_text.push_back(format_directions(g, al));
    out << "gates (" << gs.size() << "): " << join(gate_text, " ") << "\n";
    j["gates"] = gate_text;

    PeriodicDirections pf = periodic_and_fixed_directions(m);
    out << "periodic: " << format_directions(pf.periodic, al) << "\n";
    out << "fixed: " << format_directions(pf.fixed, al) << "\n";
    j["periodic"] = format_directions(pf.periodic, al);
    j["fixed"] = format_directions(pf.fixed, al);

    TrainTrackVerdict tt = is_train_track(m);
    out << "train track: " << (tt.train_track ? "yes" : "no");
    if (tt.illegal_turn) out << " (illegal turn " << al.format(*tt.illegal_turn) << ")";
    out << "\n";
    j["train_track"] = tt.train_track;
    if (tt.illegal_turn) j["illegal_turn"] = al.format(*tt.illegal_turn);

    if (tt.train_track) {
        WhiteheadGraph lw = local_whitehead_graph(m), sw = stable_whitehead_graph(m);
        out << "LW edges: " << format_turns(lw.edges(), al) << "\n";
        out << "SW edges: " << format_turns(sw.edges(), al) << "\n";
        std::vector<std::string> idx;
        for (const auto& q : index_list(sw)) idx.push_back(q.str());
        out << "index list (SW, assumes no periodic Nielsen paths): (" << join(idx, ", ") << ")\n";
        j["lw_edges"] = format_turns(lw.edges(), al);
        j["sw_edges"] = format_turns(sw.edges(), al);
        j["index_list"] = idx;
        try {
            LttStructure g = ltt_of_map(m);
            bool bir = is_birecurrent(g).birecurrent;
            out << "ltt structure: " << format_structure(g, al) << "\n";
            out << "birecurrent: " << (bir ? "yes" : "no") << "\n";
            j["ltt"] = to_json(g);
            j["birecurrent"] = bir;
        } catch (const std::invalid_argument& e) {
            out << "ltt structure: not built (" << e.what() << ")\n";
            j["ltt_error"] = e.what();
        }
    }

    FoldResult fr = stallings_fold_decomposition(m);
    if (auto* fd = std::get_if<FoldDecomposition>(&fr)) {
        std::vector<std::string> gens;
        for (const auto& g : fd->generators) gens.push_back(format_generator(g, al));
        out << "fold decomposition (" << fd->generators.size() << " folds, first applied first): "
            << join(gens, ", ") << "\n";
        std::vector<std::string> perm;
        for (Direction d : fd->final_permutation.forward_image) perm.push_back(al.format(d));
        out << "final permutation: " << join(perm, " ")
            << (fd->final_permutation.is_identity() ? " (identity)" : "") << "\n";
        Json jg = Json::array();
        for (const auto& g : fd->generators) jg.push_back({to_signed(g.a), to_signed(g.u)});
        j["fold_decomposition"] = {{"generators", jg}, {"permutation", perm}};
        if (!fd->generators.empty()) {
            DecompositionReport rep = validate_ideal_decomposition(*fd);
            out << "ideal decomposition: " << (rep.ideal() ? "yes" : "no")
                << "; every pair unachieved and twice-achieved: " << (rep.all() ? "yes" : "no") << "\n";
            for (const auto& v : rep.violations) out << "  - " << v << "\n";
            j["ideal_decomposition"] = {{"ideal", rep.ideal()}, {"all", rep.all()},
                                        {"violations", rep.violations}};
        }
    } else {
        const auto& nf = std::get<NotProperFullFolds>(fr);
        out << "fold decomposition: failed at fold " << nf.step << ": " << nf.description << "\n";
        j["fold_failure"] = {{"step", nf.step}, {"description", nf.description}};
    }

    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << out.str();
    return 0;
}

// --- target graphs -------------------------------------------------------------

struct GraphSource {
    std::string input;
    std::string named;
    int vertices = 0;
    int rank = 0;
};

WhiteheadGraph load_graph(const GraphSource& s, Rank& rank_out) {
    WhiteheadGraph g;
    if (!s.named.empty()) {
        int n = s.vertices ? s.vertices : (s.rank ? 2 * s.rank - 1 : 5);
        if (s.named == "star") g = star_graph(n);
        else if (s.named == "path") g = path_graph(n);
        else if (s.named == "cycle") g = cycle_graph(n);
        else if (s.named == "complete") g = complete_graph(n);
        else throw InvalidTarget("unknown named graph \"" + s.named + "\"");
    } else {
        Json j = parse_json(read_input(s.input.empty() ? "-" : s.input));
        try {
            g = graph_from_json(j);
        } catch (const std::exception& e) {
            throw InvalidTarget(e.what());
        }
    }
    int r = s.rank ? s.rank : (static_cast<int>(g.vertex_count()) + 1) / 2;
    if (r < 2 || r > kMaxRank) throw InvalidTarget("cannot infer a rank for this graph");
    rank_out = Rank(r);
    validate_target(g, rank_out);
    return g;
}

std::string cache_key(const WhiteheadGraph& g, Rank r) {
    std::ostringstream s;
    s << "diagram-r" << r.value() << "-" << std::hex << canonical_code(g) << ".json";
    return s.str();
}

struct CheckOptions {
    GraphSource graph;
    std::string out_dir;
    std::string format = "dot";
    bool admissible_only = false;
    int max_loop_len = 0;
};

int cmd_check_graph(const CheckOptions& o) {
    Alphabet al;
    Rank rank(1);
    WhiteheadGraph g = load_graph(o.graph, rank);
    if (o.admissible_only) {
        auto adm = enumerate_structures(g, rank, true);
        std::cout << "admissible structures: " << adm.size() << "\n";
        for (const auto& s : adm) std::cout << "  " << format_structure(s, al) << "\n";
        return 0;
    }
    Analysis a = analyze_target(g, rank);
    std::cout << "rank: " << rank.value() << "\n";
    std::cout << "target: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    std::cout << "structures: " << a.structure_count << ", admissible: " << a.admissible_count << "\n";
    std::cout << "preliminary diagram: " << a.preliminary.nodes.size() << " nodes, "
              << a.preliminary.edges.size() << " edges\n";
    std::cout << "ID diagram: " << a.diagram.nodes.size() << " nodes, " << a.diagram.edges.size()
              << " edges, " << a.diagram.components.size() << " components, " << a.classes.size()
              << " EPP classes\n";
    for (std::size_t c = 0; c < a.diagram.components.size(); ++c) {
        const auto& comp = a.diagram.components[c];
        std::cout << "  component " << c << ": " << comp.nodes.size() << " nodes, "
                  << comp.edges.size() << " edges, red census "
                  << format_directions(comp.red_census, al) << " ("
                  << (a.potential.component_passes[c] ? "passes" : "fails") << ")\n";
    }
    std::cout << "verdict: " << to_string(a.verdict) << "\n";

    if (o.max_loop_len > 0 && !a.diagram.components.empty()) {
        int base = a.diagram.components.front().nodes.front();
        auto loops = find_loops(a.diagram, base, o.max_loop_len, 20);
        std::cout << "loops through node " << base << " (length <= " << o.max_loop_len
                  << "): " << loops.size() << "\n";
        for (const auto& loop : loops) {
            LoopReport rep = verify_loop(a.diagram, loop);
            std::cout << "  length " << loop.size() << ": train track "
                      << (rep.train_track ? "yes" : "no") << ", ideal decomposition "
                      << (rep.decomposition.ideal() ? "yes" : "no") << ", every pair "
                      << (rep.decomposition.all() ? "yes" : "no") << ", ltt matches "
                      << (rep.ltt_matches_basepoint ? "yes" : "no") << "\n";
        }
    }

    std::optional<fs::path> dir;
    if (!o.out_dir.empty()) {
        dir = fs::path(o.out_dir);
        fs::create_directories(*dir);
    }
    if (auto cache = cache_dir()) write_output((*cache / cache_key(g, rank)).string(), to_json(a.diagram).dump(1) + "\n");
    if (dir) {
        if (o.format == "dot") {
            write_output((*dir / "id_diagram.dot").string(), diagram_to_dot(a.diagram, al));
            write_output((*dir / "preliminary.dot").string(), diagram_to_dot(a.preliminary, al));
        } else {
            write_output((*dir / "id_diagram.json").string(), to_json(a.diagram).dump(1) + "\n");
            write_output((*dir / "preliminary.json").string(), to_json(a.preliminary).dump(1) + "\n");
        }
    }
    return 0;
}

// --- sweep ---------------------------------------------------------------------

struct SweepOptions {
    int rank = 3;
    bool full = false;
    std::size_t sample = 0;
    unsigned seed = 1;
    std::string format = "text";
};

int cmd_sweep(const SweepOptions& o) {
    Rank rank(o.rank);
    int n = rank.directions() - 1;
    std::vector<GraphCatalogEntry> entries;
    bool star_only = o.rank >= 5 && !o.full;
    if (star_only) {
        WhiteheadGraph s = star_graph(n);
        std::uint64_t code = canonical_code(s);
        entries.push_back({catalog_id(n, s, code), code, from_canonical_code(n, code)});
    } else {
        entries = connected_graph_catalog(n);
    }
    std::size_t catalog_size = entries.size();
    if (o.sample > 0 && o.sample < entries.size()) {
        std::mt19937 rng(o.seed);
        std::vector<GraphCatalogEntry> picked;
        std::sample(entries.begin(), entries.end(), std::back_inserter(picked), o.sample, rng);
        entries = std::move(picked);
    }

    Json rows = Json::array();
    std::map<std::string, int> tally;
    for (const auto& e : entries) {
        Analysis a = analyze_target(e.graph, rank);
        std::string v = to_string(a.verdict);
        ++tally[v];
        rows.push_back({{"id", e.id},
                        {"edges", e.graph.edge_count()},
                        {"structures", a.structure_count},
                        {"admissible", a.admissible_count},
                        {"components", a.diagram.components.size()},
                        {"epp_classes", a.classes.size()},
                        {"verdict", v}});
    }
    if (o.format == "json") {
        Json j{{"rank", o.rank},
               {"mode", star_only ? "star-only" : "catalog"},
               {"catalog_size", catalog_size},
               {"rows", rows},
               {"tally", tally}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "rank " << o.rank << ", " << (star_only ? "star-only mode" : "catalog") << ", "
              << catalog_size << " graphs" << (entries.size() != catalog_size ? ", sampled " + std::to_string(entries.size()) : "")
              << "\n";
    std::printf("%-22s %5s %10s %10s %6s %5s  %s\n", "id", "edges", "structures", "admissible",
                "comps", "epp", "verdict");
    for (const auto& r : rows)
        std::printf("%-22s %5d %10d %10d %6d %5d  %s\n", r["id"].get<std::string>().c_str(),
                    r["edges"].get<int>(), r["structures"].get<int>(), r["admissible"].get<int>(),
                    r["components"].get<int>(), r["epp_classes"].get<int>(),
                    r["verdict"].get<std::string>().c_str());
    for (const auto& [v, count] : tally) std::cout << v << ": " << count << "\n";
    return 0;
}

// --- export --------------------------------------------------------------------

struct ExportOptions {
    std::string what = "diagram";
    GraphSource graph;
    std::string map = "-";
    std::string format = "json";
    std::string output = "-";
};

IdDiagram diagram_cached(const WhiteheadGraph& g, Rank rank) {
    if (auto cache = cache_dir()) {
        fs::path p = *cache / cache_key(g, rank);
        if (fs::exists(p)) return diagram_from_json(parse_json(read_input(p.string())));
        IdDiagram d = id_diagram(g, rank);
        write_output(p.string(), to_json(d).dump(1) + "\n");
        return d;
    }
    return id_diagram(g, rank);
}

int cmd_export(const ExportOptions& o) {
    Alphabet al;
    if (o.format != "dot" && o.format != "json") throw CLI::ValidationError("--format", "unknown format " + o.format);
    if (o.what == "catalog") {
        Rank rank(o.graph.rank ? o.graph.rank : 3);
        Json j = Json::array();
        for (const auto& e : connected_graph_catalog(rank.directions() - 1))
            j.push_back({{"id", e.id}, {"graph", to_json(e.graph)}});
        if (o.format == "dot") throw CLI::ValidationError("--format", "catalog export is JSON only");
        write_output(o.output, j.dump(1) + "\n");
        return 0;
    }
    if (o.what == "ltt") {
        RoseMap m = rose_map_from_json(parse_json(read_input(o.map)), al);
        LttStructure g = ltt_of_map(m);
        write_output(o.output, o.format == "dot" ? ltt_to_dot(g, al) : to_json(g).dump(1) + "\n");
        return 0;
    }
    Rank rank(1);
    WhiteheadGraph g = load_graph(o.graph, rank);
    IdDiagram d;
    if (o.what == "diagram") d = diagram_cached(g, rank);
    else if (o.what == "preliminary") d = build_preliminary(g, rank);
    else throw CLI::ValidationError("what", "unknown export target " + o.what);
    write_output(o.output, o.format == "dot" ? diagram_to_dot(d, al) : to_json(d).dump(1) + "\n");
    return 0;
}

void add_graph_options(CLI::App* sub, GraphSource& s) {
    sub->add_option("--graph", s.input, "Target graph JSON file ('-' for stdin)");
    sub->add_option("--named", s.named, "Built-in target: star, path, cycle, complete");
    sub->add_option("--vertices", s.vertices, "Vertex count for --named");
    sub->add_option("--rank", s.rank, "Rank r (default: inferred from the vertex count)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unachievability tests for ideal Whitehead graphs"};
    app.require_subcommand(1);

    AnalyzeOptions ao;
    auto* analyze = app.add_subcommand("analyze-map", "Analyze a rose map given as JSON");
    analyze->add_option("input", ao.input, "Map JSON file ('-' for stdin)");
    analyze->add_option("--format", ao.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    analyze->add_flag("--minus", ao.minus_style, "Write reverse directions as -a instead of a'");

    CheckOptions co;
    auto* check = app.add_subcommand("check-graph", "Run the unachievability tests on a target graph");
    add_graph_options(check, co.graph);
    check->add_flag("--admissible-only", co.admissible_only, "Only list admissible structures");
    check->add_option("--out-dir", co.out_dir, "Directory for diagram files");
    check->add_option("--format", co.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    check->add_option("--max-loop-len", co.max_loop_len, "Verify loops up to this length");

    SweepOptions so;
    auto* sweep = app.add_subcommand("sweep", "Run the tests over the catalog of target graphs");
    sweep->add_option("--rank", so.rank, "Rank r")->check(CLI::Range(2, kMaxRank));
    sweep->add_flag("--full", so.full, "Sweep the whole catalog at rank >= 5");
    sweep->add_option("--sample", so.sample, "Check a random sample of this many graphs");
    sweep->add_option("--seed", so.seed, "Seed for --sample");
    sweep->add_option("--format", so.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    ExportOptions eo;
    auto* exp = app.add_subcommand("export", "Write diagrams, structures or the catalog");
    exp->add_option("what", eo.what, "diagram, preliminary, ltt or catalog");
    add_graph_options(exp, eo.graph);
    exp->add_option("--map", eo.map, "Map JSON file for 'ltt'");
    exp->add_option("--format", eo.format, "dot or json");
    exp->add_option("-o,--output", eo.output, "Output file ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze_map(ao);
        if (check->parsed()) return cmd_check_graph(co);
        if (sweep->parsed()) return cmd_sweep(so);
        if (exp->parsed()) return cmd_export(eo);
    } catch (const InvalidTarget& e) {
        std::cerr << "invalid target graph: " << e.what() << "\n";
        return kExitInvalidGraph;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
