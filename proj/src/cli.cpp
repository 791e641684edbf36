#include "tgraph/cli.hpp"

#include "tgraph/core.hpp"
#include "tgraph/gadgets.hpp"
#include "tgraph/io.hpp"
#include "tgraph/journeys.hpp"
#include "tgraph/labelings.hpp"
#include "tgraph/menger.hpp"
#include "tgraph/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace tgraph::cli {

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFalse = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageFailure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TemporalGraph load_tg(const std::string& path, std::ostream& err) {
    std::vector<std::string> warnings;
    auto tg = parse_temporal_graph(read_file(path), &warnings);
    for (const auto& w : warnings) err << path << ": warning: " << w << "\n";
    return tg;
}

/// TG_GUARD_NODES overrides node-count enumeration guards when set.
int node_guard_or(int fallback) {
    const char* raw = std::getenv("TG_GUARD_NODES");
    if (!raw || !*raw) return fallback;
    try {
        return std::stoi(raw);
    } catch (const std::exception&) {
        throw UsageFailure("TG_GUARD_NODES must be an integer");
    }
}

void print_journey(std::ostream& out, const Journey& j) {
    out << "journey";
    if (j.is_empty())
        out << " -";
    else
        out << " " << to_string(j);
    out << "\n";
}

DisjointnessMode parse_mode(const std::string& name) {
    if (name == "out") return DisjointnessMode::OutDisjoint;
    if (name == "in") return DisjointnessMode::InDisjoint;
    if (name == "tnode") return DisjointnessMode::TimeNodeDisjoint;
    if (name == "tedge") return DisjointnessMode::TimeEdgeDisjoint;
    throw UsageFailure("unknown mode '" + name + "' (out|in|tnode|tedge)");
}

void print_separator(std::ostream& out, const Separator& sep) {
    out << "separator " << sep.size() << "\n";
    for (const auto& nt : sep.node_times)
        out << "unit node " << nt.node << " time " << nt.time << "\n";
    for (const auto& te : sep.time_edges)
        out << "unit edge " << te.from << " " << te.to << " time " << te.label << "\n";
}

Edge parse_edge_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageFailure("edge must be '<u>,<v>'");
    try {
        return Edge{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageFailure("edge must be '<u>,<v>'");
    }
}

std::string assignment_string(const std::vector<char>& a) {
    std::string s;
    for (char bit : a) s += bit ? '1' : '0';
    return s;
}

std::vector<char> parse_assignment(const std::string& bits, int vars) {
    if (static_cast<int>(bits.size()) != vars)
        throw UsageFailure("assignment needs exactly " + std::to_string(vars) + " bits");
    std::vector<char> a;
    for (char c : bits) {
        if (c != '0' && c != '1') throw UsageFailure("assignment bits must be 0 or 1");
        a.push_back(c == '1');
    }
    return a;
}

// ------------------------------------------------------------- subcommands

struct Options {
    std::string file;
    std::string mode = "out";
    std::string property = "all-paths";
    std::string method;
    std::string assign;
    std::string extract;
    std::string make;
    std::string all_dir;
    std::vector<std::string> source_specs;
    std::vector<std::string> kernel_edges;
    NodeId from = 0, to = 0;
    Label start = 0;
    int count = 1;
    int age = 0;
    int root = 0;
    int slack = 0;
    int size = 3;
    bool with_cost = false;
    bool emit = false;
    bool reduce = false;
};

int run_foremost(const Options& o, bool has_to, bool has_start, std::ostream& out,
                 std::ostream& err) {
    auto tg = load_tg(o.file, err);
    Label t0 = has_start ? o.start : tg.lambda_min();
    auto table = foremost_journeys(tg, o.from, t0);
    if (!has_to) {
        for (NodeId v = 0; v < tg.graph().node_count(); ++v) {
            const auto& a = table.arrival[static_cast<size_t>(v)];
            out << "node " << v << " ";
            if (a)
                out << "arrival " << *a << "\n";
            else
                out << "unreachable\n";
        }
        return kOk;
    }
    auto j = journey_to(tg, table, o.to);
    if (!j) {
        out << "unreachable\n";
        return kPropertyFalse;
    }
    print_journey(out, *j);
    out << "arrival " << *table.arrival[static_cast<size_t>(o.to)] << "\n";
    return kOk;
}

int run_fastest(const Options& o, std::ostream& out, std::ostream& err) {
    auto tg = load_tg(o.file, err);
    auto j = fastest_journey(tg, o.from, o.to);
    if (!j) {
        out << "unreachable\n";
        return kPropertyFalse;
    }
    print_journey(out, *j);
    if (!j->is_empty())
        out << "departure " << j->departure() << "\narrival " << j->arrival() << "\n";
    out << "duration " << j->duration() << "\n";
    return kOk;
}

int run_shortest(const Options& o, std::ostream& out, std::ostream& err) {
    auto tg = load_tg(o.file, err);
    auto j = shortest_weighted_journey(tg, o.from, o.to);
    if (!j) {
        out << "unreachable\n";
        return kPropertyFalse;
    }
    print_journey(out, *j);
    out << "weight " << j->total_weight(tg.graph()) << "\n";
    return kOk;
}

int run_menger(const Options& o, std::ostream& out, std::ostream& err) {
    auto tg = load_tg(o.file, err);
    auto mode = parse_mode(o.mode);
    auto best = max_disjoint_journeys(tg, o.from, o.to, mode);
    out << "max " << best.count << "\n";
    for (const auto& j : best.witnesses) print_journey(out, j);
    auto sep = min_separator(tg, o.from, o.to, mode);
    print_separator(out, sep);
    if (sep.size() != best.count) {
        err << "separator size differs from the journey maximum\n";
        return kPropertyFalse;
    }
    return kOk;
}

int run_pack(const Options& o, std::ostream& out, std::ostream& err) {
    auto tg = load_tg(o.file, err);
    auto packed = foremost_disjoint_packing(tg, o.from, o.to, o.count);
    if (!packed) {
        out << "infeasible\n";
        return kPropertyFalse;
    }
    out << "arrival " << packed->arrival << "\n";
    for (const auto& j : packed->journeys) print_journey(out, j);
    return kOk;
}

int run_tokens(const Options& o, std::ostream& out, std::ostream& err) {
    auto tg = load_tg(o.file, err);
    std::map<NodeId, int> sources;
    for (const auto& spec : o.source_specs) {
        auto eq = spec.find('=');
        try {
            NodeId node = std::stoi(spec.substr(0, eq));
            int tokens = eq == std::string::npos ? 1 : std::stoi(spec.substr(eq + 1));
            sources[node] += tokens;
        } catch (const std::exception&) {
            throw UsageFailure("source must be '<node>[=<tokens>]'");
        }
    }
    auto res = multi_source_packing(tg, sources, o.to);
    out << "tokens " << res.total_tokens << "\n";
    out << "instances-connected " << (res.instances_connected ? "yes" : "no") << "\n";
    out << "age-sufficient " << (res.age_sufficient ? "yes" : "no") << "\n";
    if (!res.success) {
        out << "failure\n";
        return kPropertyFalse;
    }
    out << "success\n";
    for (const auto& j : res.journeys) print_journey(out, j);
    return kOk;
}

int run_label(const Options& o, std::ostream& out, std::ostream& err) {
    auto tg = load_tg(o.file, err);
    const auto& g = tg.graph();
    Labeling lab;
    std::string extra;
    if (o.method == "trivial") {
        lab = label_all_paths_trivial(g, node_guard_or(12));
    } else if (o.method == "ring") {
        lab = label_ring_all_paths(g);
    } else if (o.method == "dag") {
        lab = label_dag_all_paths(g);
    } else if (o.method == "scc") {
        lab = label_strongly_connected_reach(g, o.root);
    } else if (o.method == "reach") {
        lab = label_reach(g);
    } else if (o.method == "tree") {
        lab = label_tree_all_paths(g);
    } else if (o.method == "tradeoff") {
        lab = label_ring_tradeoff(g, o.slack);
    } else if (o.method == "bfs") {
        auto res = label_reach_diameter_bfs(g);
        lab = res.labeling;
        extra = "# per-tree-cost " + std::to_string(res.per_tree_cost) + " stored-cost " +
                std::to_string(res.stored_cost) + " max-label " + std::to_string(res.max_label) +
                "\n";
    } else {
        throw UsageFailure("unknown method '" + o.method +
                           "' (trivial|ring|dag|scc|reach|tree|tradeoff|bfs)");
    }
    auto labeled = build_temporal_graph(g, lab);
    out << "# method " << o.method << " cost " << lab.total_cost() << " max-per-edge "
        << lab.max_labels_per_edge();
    if (auto a = lab.age()) out << " age " << *a;
    out << "\n" << extra;
    out << serialize_temporal_graph(labeled);
    return kOk;
}

int check_property(const TemporalGraph& tg, const Options& o, bool has_age) {
    if (o.property == "all-paths") return preserves_all_paths(tg, node_guard_or(12)) ? kOk : kPropertyFalse;
    if (o.property == "reach") {
        if (has_age) return preserves_reach_within_age(tg, o.age) ? kOk : kPropertyFalse;
        return preserves_reach(tg) ? kOk : kPropertyFalse;
    }
    throw UsageFailure("unknown property '" + o.property + "' (all-paths|reach)");
}

int run_verify(const Options& o, bool has_age, std::ostream& out, std::ostream& err) {
    if (!o.all_dir.empty()) {
        namespace fs = std::filesystem;
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(o.all_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".tg")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw UsageFailure("no .tg files in " + o.all_dir);
        int worst = kOk, passed = 0;
        for (const auto& f : files) {
            try {
                int code = check_property(load_tg(f.string(), err), o, has_age);
                out << "file " << f.filename().string() << " "
                    << (code == kOk ? "ok" : "fail") << "\n";
                if (code == kOk)
                    ++passed;
                else
                    worst = std::max(worst, code);
            } catch (const ParseError& e) {
                out << "file " << f.filename().string() << " error " << e.what() << "\n";
                worst = std::max(worst, kUsage);
            }
        }
        out << "summary " << passed << "/" << files.size() << "\n";
        return worst;
    }
    int code = check_property(load_tg(o.file, err), o, has_age);
    out << o.property << (code == kOk ? " holds" : " fails") << "\n";
    return code;
}

int run_oracle(const Options& o, bool has_age, std::ostream& out, std::ostream& err) {
    auto tg = load_tg(o.file, err);
    PathProperty prop;
    if (o.property == "all-paths")
        prop = PathProperty::AllPaths;
    else if (o.property == "reach")
        prop = PathProperty::Reach;
    else
        throw UsageFailure("unknown property '" + o.property + "' (all-paths|reach)");
    std::optional<int> age;
    if (has_age) age = o.age;
    if (o.with_cost) {
        int cost = oracle_temporal_cost(tg.graph(), prop, age);
        out << "cost " << cost << "\n";
    } else {
        int t = oracle_temporality(tg.graph(), prop, age);
        out << "temporality " << t << "\n";
    }
    return kOk;
}

int run_kernel(const Options& o, std::ostream& out, std::ostream& err) {
    if (!o.make.empty()) {
        GraphWithKernel fixture;
        if (o.make == "clique")
            fixture = clique_kernel(o.size);
        else if (o.make == "grid")
            fixture = grid_kernel(o.size);
        else
            throw UsageFailure("unknown generator '" + o.make + "' (clique|grid)");
        for (const auto& e : fixture.kernel) out << "# kernel " << e.u << " " << e.v << "\n";
        out << serialize_temporal_graph(build_temporal_graph(fixture.graph, {}));
        return kOk;
    }
    auto tg = load_tg(o.file, err);
    std::vector<Edge> kernel;
    for (const auto& spec : o.kernel_edges) kernel.push_back(parse_edge_pair(spec));
    if (kernel.empty()) throw UsageFailure("no kernel edges given");
    bool yes = is_edge_kernel(tg.graph(), kernel, 4, node_guard_or(30));
    out << "kernel " << (yes ? "yes" : "no") << "\n";
    return yes ? kOk : kPropertyFalse;
}

int run_gadget(const Options& o, std::ostream& out, std::ostream& err) {
    auto formula = normalize(parse_xor_formula(read_file(o.file)));
    auto gg = build_gadget_graph(formula);
    if (!o.extract.empty()) {
        auto labeled = load_tg(o.extract, err);
        auto res = assignment_from_labeling(gg, labeled.labeling());
        out << "assignment " << assignment_string(res.assignment) << "\n";
        out << "rewrites " << res.rewrites << "\n";
        return kOk;
    }
    if (!o.assign.empty()) {
        auto a = parse_assignment(o.assign, formula.num_vars());
        auto lab = labeling_from_assignment(gg, a);
        int sat = xor_satisfied_count(formula, a);
        if (o.emit) {
            out << "# gadget labeling satisfied " << sat << " cost " << lab.total_cost() << "\n";
            out << serialize_temporal_graph(build_temporal_graph(gg.graph(), lab));
            return kOk;
        }
        out << "satisfied " << sat << "\n";
        out << "cost " << lab.total_cost() << "\n";
        return kOk;
    }
    out << "gadgets " << gg.gadget_count() << "\n";
    out << "clauses " << gg.clause_count() << "\n";
    out << "nodes " << gg.graph().node_count() << "\n";
    out << "arcs " << gg.graph().edge_count() << "\n";
    out << "single-branches " << gg.single_branch_count() << "\n";
    out << "shared-branches " << gg.shared_branch_count() << "\n";
    out << "diameter " << gg.diameter() << "\n";
    out << "max-cycle " << gg.max_directed_cycle_length() << "\n";
    return kOk;
}

int run_maxxor(const Options& o, std::ostream& out, std::ostream&) {
    auto formula = parse_xor_formula(read_file(o.file));
    auto res = max_xor_brute(formula);
    out << "best " << res.best << "\n";
    out << "assignment " << assignment_string(res.assignment) << "\n";
    if (!o.reduce) return kOk;
    auto reduced = reduce_to_occurrence3(formula);
    auto rres = max_xor_brute(reduced);
    out << "reduced-vars " << reduced.num_vars() << "\n";
    out << "reduced-clauses " << reduced.num_clauses() << "\n";
    out << "reduced-best " << rres.best << "\n";
    bool identity = rres.best == res.best + 2 * formula.num_clauses();
    out << "identity " << (identity ? "ok" : "broken") << "\n";
    return identity ? kOk : kPropertyFalse;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"temporal graph toolkit"};
    app.require_subcommand(1);
    Options o;

    auto* foremost = app.add_subcommand("foremost", "earliest-arrival journeys from a source");
    foremost->add_option("file", o.file)->required();
    foremost->add_option("--from", o.from, "source node")->required();
    auto* fm_start = foremost->add_option("--start", o.start, "earliest departure time");
    auto* fm_to = foremost->add_option("--to", o.to, "report the journey to this node");

    auto* fastest = app.add_subcommand("fastest", "minimum-duration journey");
    fastest->add_option("file", o.file)->required();
    fastest->add_option("--from", o.from)->required();
    fastest->add_option("--to", o.to)->required();

    auto* shortest = app.add_subcommand("shortest", "minimum-weight journey");
    shortest->add_option("file", o.file)->required();
    shortest->add_option("--from", o.from)->required();
    shortest->add_option("--to", o.to)->required();

    auto* menger = app.add_subcommand("menger", "disjoint journeys and matching separator");
    menger->add_option("file", o.file)->required();
    menger->add_option("--from", o.from)->required();
    menger->add_option("--to", o.to)->required();
    menger->add_option("--mode", o.mode, "out|in|tnode|tedge");

    auto* pack = app.add_subcommand("pack", "earliest arrival of q out-disjoint journeys");
    pack->add_option("file", o.file)->required();
    pack->add_option("--from", o.from)->required();
    pack->add_option("--to", o.to)->required();
    pack->add_option("--count", o.count, "journeys required")->required();

    auto* tokens = app.add_subcommand("tokens", "gather tokens from many sources");
    tokens->add_option("file", o.file)->required();
    tokens->add_option("--to", o.to)->required();
    tokens->add_option("--source", o.source_specs, "<node>[=<tokens>], repeatable")
        ->required()
        ->take_all();

    auto* label = app.add_subcommand("label", "construct a labeling for the graph");
    label->add_option("file", o.file)->required();
    label->add_option("--method", o.method, "trivial|ring|dag|scc|reach|tree|tradeoff|bfs")
        ->required();
    label->add_option("--root", o.root, "root node for scc");
    label->add_option("--slack", o.slack, "extra age for tradeoff");

    auto* verify = app.add_subcommand("verify", "check a preservation property");
    verify->add_option("file", o.file);
    verify->add_option("--property", o.property, "all-paths|reach");
    auto* vf_age = verify->add_option("--age", o.age, "reach must hold within this age");
    verify->add_option("--all", o.all_dir, "check every .tg file in a directory");

    auto* oracle = app.add_subcommand("oracle", "exact optimal labeling measures");
    oracle->add_option("file", o.file)->required();
    oracle->add_option("--property", o.property, "all-paths|reach");
    auto* or_age = oracle->add_option("--age", o.age, "age bound");
    oracle->add_flag("--cost", o.with_cost, "minimize total labels instead of per-edge");

    auto* kernel = app.add_subcommand("kernel", "edge-kernel check or fixture generator");
    kernel->add_option("file", o.file);
    kernel->add_option("--edge", o.kernel_edges, "<u>,<v>, repeatable")->take_all();
    kernel->add_option("--make", o.make, "clique|grid");
    kernel->add_option("--size", o.size, "generator size");

    auto* gadget = app.add_subcommand("gadget", "hardness gadget for a xor2 formula");
    gadget->add_option("file", o.file)->required();
    gadget->add_option("--assign", o.assign, "assignment bits");
    gadget->add_flag("--emit", o.emit, "print the labeled gadget graph");
    gadget->add_option("--extract", o.extract, "read an assignment back from a labeled file");

    auto* maxxor = app.add_subcommand("maxxor", "exhaustive Max-XOR(2-lit) optimum");
    maxxor->add_option("file", o.file)->required();
    maxxor->add_flag("--reduce", o.reduce, "also solve the occurrence-3 reduction");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (foremost->parsed())
            return run_foremost(o, fm_to->count() > 0, fm_start->count() > 0, out, err);
        if (fastest->parsed()) return run_fastest(o, out, err);
        if (shortest->parsed()) return run_shortest(o, out, err);
        if (menger->parsed()) return run_menger(o, out, err);
        if (pack->parsed()) return run_pack(o, out, err);
        if (tokens->parsed()) return run_tokens(o, out, err);
        if (label->parsed()) return run_label(o, out, err);
        if (verify->parsed()) return run_verify(o, vf_age->count() > 0, out, err);
        if (oracle->parsed()) return run_oracle(o, or_age->count() > 0, out, err);
        if (kernel->parsed()) return run_kernel(o, out, err);
        if (gadget->parsed()) return run_gadget(o, out, err);
        if (maxxor->parsed()) return run_maxxor(o, out, err);
    } catch (const GuardExceeded& e) {
        err << "guard exceeded: " << e.what() << "\n";
        return kGuard;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageFailure& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "no subcommand\n";
    return kUsage;
}

} // namespace tgraph::cli
