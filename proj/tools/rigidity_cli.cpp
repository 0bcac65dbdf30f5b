#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rigidity/harness.hpp"
#include "rigidity/json_io.hpp"
#include "rigidity/pinning.hpp"

using namespace rigidity;

namespace {

constexpr uint64_t kDefaultSeed = 1729;

struct Options {
    int dim = 2;
    uint64_t seed = kDefaultSeed;
    int trials = 3;
    std::string format = "text";       // text | json
    std::string input_format = "auto"; // auto | graph6 | json
    bool fast = false;
    bool summary = false;
    std::string pivot_rule = "direction"; // direction | vertex
    int jobs = 1;
    std::string input = "-";
};

uint64_t env_seed() {
    if (const char* s = std::getenv("RIGIDITY_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw std::runtime_error("RIGIDITY_SEED is not an unsigned integer");
        }
    }
    return kDefaultSeed;
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Multigraph parse_graph_input(const std::string& raw, const std::string& input_format) {
    std::string text = strip(raw);
    if (text.empty()) throw std::runtime_error("empty input");
    if (input_format == "json" || (input_format == "auto" && text.front() == '{'))
        return parse_edge_list(text);
    std::string line = text.substr(0, text.find_first_of("\r\n"));
    return parse_graph6(line);
}

std::vector<Multigraph> parse_corpus(const std::string& raw, const std::string& input_format) {
    std::string text = strip(raw);
    if (text.empty()) return {};
    std::vector<Multigraph> graphs;
    if (input_format == "json" ||
        (input_format == "auto" && (text.front() == '[' || text.front() == '{'))) {
        auto doc = nlohmann::json::parse(text);
        if (doc.is_object()) doc = nlohmann::json::array({doc});
        for (const auto& item : doc) graphs.push_back(parse_edge_list(item.dump()));
        return graphs;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        line = strip(line);
        if (!line.empty()) graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

TheoremOptions theorem_options(const Options& o) {
    TheoremOptions t;
    t.fast = o.fast;
    return t;
}

int cmd_rank(const Options& o) {
    Multigraph g = parse_graph_input(read_all(o.input), o.input_format);
    RigidityVerdict v = rigidity_verdict(g, o.dim, o.trials, o.seed);
    if (o.format == "json") {
        nlohmann::json j = to_json(v);
        j["graph"] = to_json(g);
        emit(j);
    } else {
        std::cout << "verdict: " << to_string(v.verdict) << "\n"
                  << "rank: " << v.rank << " / target " << v.target << "\n"
                  << "edges: " << v.m << ", flex-dim: " << v.flex_dim << "\n";
    }
    return v.verdict == RigidityClass::MinimallyRigid ? 0 : 1;
}

int cmd_theorem(const Options& o) {
    Multigraph g = parse_graph_input(read_all(o.input), o.input_format);
    TheoremReport rep = decomposition_test(g, o.dim, theorem_options(o));
    if (o.format == "json") {
        emit(to_json(rep, !o.summary));
    } else {
        std::cout << "claim: " << to_string(rep.claim) << "\n"
                  << "paths checked: " << rep.paths_checked << "\n";
        if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
        for (const PathResult& pr : rep.path_results) {
            if (pr.decomposable) continue;
            std::cout << "non-decomposable path:";
            for (int v : pr.path.vertices) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return rep.claim == TheoremClaim::MinimallyRigid ? 0 : 1;
}

int cmd_compare(const Options& o) {
    Multigraph g = parse_graph_input(read_all(o.input), o.input_format);
    ComparisonResult cmp = compare_with_rank(g, o.dim, o.trials, o.seed, theorem_options(o));
    if (o.format == "json") {
        emit(to_json(cmp, !o.summary));
    } else {
        std::cout << "tree-decomposition test: " << to_string(cmp.theorem.claim) << "\n"
                  << "rank test: " << to_string(cmp.rank.verdict) << " (rank " << cmp.rank.rank
                  << " / target " << cmp.rank.target << ")\n"
                  << (cmp.discrepant ? "DISCREPANCY\n" : "agreement\n");
    }
    return cmp.discrepant ? 3 : 0;
}

int cmd_decompose(const Options& o, int k) {
    Multigraph g = parse_graph_input(read_all(o.input), o.input_format);
    DecomposeResult res = decompose_into_spanning_trees(g, k);
    if (o.format == "json") {
        emit(to_json(res));
    } else if (res.ok()) {
        for (int t = 0; t < res.decomposition->k; ++t) {
            std::cout << "tree " << t << ":";
            for (int id : res.decomposition->trees[t])
                std::cout << " (" << g.edges[id].u << "," << g.edges[id].v << ")";
            std::cout << "\n";
        }
    } else {
        std::cout << "refused: " << to_string(*res.refusal) << "\n";
        if (res.witness)
            std::cout << "witness partition with " << res.witness->cross_edges
                      << " cross edges, needs " << res.witness->required << "\n";
    }
    return res.ok() ? 0 : 1;
}

int cmd_pin(const Options& o, const std::string& path_spec) {
    Multigraph g = parse_graph_input(read_all(o.input), o.input_format);
    OrderedPath path;
    std::istringstream ss(path_spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) path.vertices.push_back(std::stoi(strip(tok)));
    auto nbr = g.neighbor_map();
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        int a = path.vertices[i], b = path.vertices[i + 1];
        if (a < 0 || a >= g.n || b < 0 || b >= g.n)
            throw std::runtime_error("path vertex out of range");
        int id = -1;
        for (const auto& [w, e] : nbr[a])
            if (w == b) id = e;
        if (id < 0)
            throw std::runtime_error("path edge (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") not present in the graph");
        path.edge_ids.push_back(id);
    }
    const int d = static_cast<int>(path.vertices.size());
    if (d < 2) throw std::runtime_error("--path needs at least two vertices");
    auto fw = random_rational_placement(g, d, o.seed);
    PinnedSystem sys = build_pinned_system(fw, path);
    bool invertible = pinned_invertible(sys);

    nlohmann::json j;
    j["graph"] = to_json(g);
    j["path"] = to_json(path);
    j["d"] = d;
    j["seed"] = o.seed;
    j["invertible"] = invertible;
    if (invertible) {
        PivotRule rule =
            o.pivot_rule == "vertex" ? PivotRule::VertexMajor : PivotRule::DirectionMajor;
        j["partition"] = to_json(extract_tree_partition(sys, rule));
    }
    if (o.format == "json") {
        emit(j);
    } else {
        std::cout << "pinned system of size " << sys.stage_d.rows() << "x" << sys.stage_d.cols()
                  << ": " << (invertible ? "invertible" : "singular or non-square") << "\n";
        if (invertible) {
            const auto& part = j["partition"];
            if (part["success"].get<bool>())
                std::cout << "elimination extracts " << d << " spanning trees\n";
            else
                std::cout << "extraction finding: " << part["failure"].get<std::string>() << "\n";
        }
    }
    return invertible ? 0 : 1;
}

int cmd_scan(const Options& o) {
    std::vector<Multigraph> corpus = parse_corpus(read_all(o.input), o.input_format);
    ScanReport rep =
        scan_corpus(corpus, o.dim, o.trials, o.seed, o.input, o.jobs, theorem_options(o));
    if (o.format == "json") {
        emit(to_json(rep, !o.summary));
    } else {
        std::cout << "scanned " << rep.size << " graphs (d=" << rep.d
                  << "): " << rep.agreements << " agreements, " << rep.discrepancies.size()
                  << " discrepancies, " << rep.not_applicable << " not applicable\n";
        for (const ComparisonResult& cmp : rep.discrepancies)
            std::cout << "discrepancy: " << serialize_edge_list(cmp.graph) << "\n";
    }
    return rep.discrepancies.empty() ? 0 : 3;
}

int cmd_banana(const Options& o) {
    Multigraph g = double_banana();
    if (o.format == "json")
        emit(to_json(g));
    else
        std::cout << serialize_edge_list(g) << "\n";
    return 0;
}

void add_common(CLI::App* sub, Options& o, bool with_input = true) {
    sub->add_option("--dim,-d", o.dim, "ambient dimension")->check(CLI::Range(2, 6));
    sub->add_option("--seed", o.seed, "RNG seed (default: RIGIDITY_SEED or 1729)");
    sub->add_option("--trials", o.trials, "placements per rank query")->check(CLI::Range(1, 64));
    sub->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--input-format", o.input_format, "auto | graph6 | json")
        ->check(CLI::IsMember({"auto", "graph6", "json"}));
    sub->add_flag("--fast", o.fast, "stop path evaluation at the first failure");
    sub->add_flag("--summary", o.summary, "omit per-path decompositions from JSON");
    sub->add_option("--pivot-rule", o.pivot_rule, "direction | vertex")
        ->check(CLI::IsMember({"direction", "vertex"}));
    sub->add_option("--jobs", o.jobs, "worker threads for scans")->check(CLI::Range(1, 256));
    if (with_input) sub->add_option("input", o.input, "input file, or - for stdin");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generic rigidity toolkit: rank criterion vs spanning-tree decomposition"};
    app.require_subcommand(1);

    Options defaults;
    try {
        defaults.seed = env_seed();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    auto* rank = app.add_subcommand("rank", "rigidity-matrix rank verdict");
    auto* theorem = app.add_subcommand("theorem", "path-augmentation decomposition test");
    auto* compare = app.add_subcommand("compare", "run both tests; exit 3 on discrepancy");
    auto* decompose = app.add_subcommand("decompose", "partition edges into k spanning trees");
    auto* pin = app.add_subcommand("pin", "pinned-system diagnostic along a path");
    auto* scan = app.add_subcommand("scan", "compare both tests over a corpus");
    auto* banana = app.add_subcommand("banana", "print the double-banana fixture");

    Options orank = defaults, otheorem = defaults, ocompare = defaults, odecompose = defaults,
            opin = defaults, oscan = defaults, obanana = defaults;
    add_common(rank, orank);
    add_common(theorem, otheorem);
    add_common(compare, ocompare);
    add_common(decompose, odecompose);
    int k = 2;
    decompose->add_option("-k,--trees", k, "number of spanning trees")->required();
    add_common(pin, opin);
    std::string path_spec;
    pin->add_option("--path", path_spec, "comma-separated path vertices, e.g. 0,1,2")->required();
    add_common(scan, oscan);
    add_common(banana, obanana, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(rank)) return cmd_rank(orank);
        if (app.got_subcommand(theorem)) return cmd_theorem(otheorem);
        if (app.got_subcommand(compare)) return cmd_compare(ocompare);
        if (app.got_subcommand(decompose)) return cmd_decompose(odecompose, k);
        if (app.got_subcommand(pin)) return cmd_pin(opin, path_spec);
        if (app.got_subcommand(scan)) return cmd_scan(oscan);
        if (app.got_subcommand(banana)) return cmd_banana(obanana);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
