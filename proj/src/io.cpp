#include "tgraph/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace tgraph {

ParseError::ParseError(int line_no, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + reason), line(line_no) {}

namespace {

/// Lines with comments stripped and surrounding blanks trimmed, paired with
/// their 1-based position in the original text.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = raw.find_last_not_of(" \t\r");
        out.emplace_back(no, raw.substr(b, e - b + 1));
    }
    return out;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected " + what + ", got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line, "expected " + what + ", got '" + tok + "'");
    return value;
}

std::string format_weight(double w) {
    double rounded = std::floor(w);
    if (rounded == w && std::abs(w) < 1e15) {
        return std::to_string(static_cast<long long>(w));
    }
    std::ostringstream out;
    out.precision(15);
    out << w;
    return out.str();
}

} // namespace

TemporalGraph parse_temporal_graph(const std::string& text,
                                   std::vector<std::string>* warnings) {
    auto lines = content_lines(text);
    if (lines.size() < 3) throw ParseError(lines.empty() ? 1 : lines.back().first, "truncated file");
    size_t at = 0;
    auto next = [&]() -> const std::pair<int, std::string>& { return lines[at]; };

    if (next().second != "tg 1")
        throw ParseError(next().first, "unsupported format header (expected 'tg 1')");
    ++at;

    bool directed;
    if (next().second == "directed")
        directed = true;
    else if (next().second == "undirected")
        directed = false;
    else
        throw ParseError(next().first, "expected 'directed' or 'undirected'");
    ++at;

    {
        std::istringstream head(next().second);
        std::string kw;
        head >> kw;
        if (kw != "nodes") throw ParseError(next().first, "expected 'nodes <n>'");
    }
    std::string count_tok = next().second.substr(5);
    count_tok.erase(0, count_tok.find_first_not_of(" \t"));
    int n = parse_int(count_tok, next().first, "node count");
    if (n <= 0) throw ParseError(next().first, "node count must be positive");
    ++at;

    struct Parsed {
        int line;
        NodeId u, v;
        std::vector<Label> labels;
        std::optional<double> weight;
    };
    std::vector<Parsed> rows;
    for (; at < lines.size(); ++at) {
        auto [line_no, body] = lines[at];
        auto colon = body.find(':');
        if (colon == std::string::npos) throw ParseError(line_no, "edge line needs ':'");
        std::istringstream ends(body.substr(0, colon));
        std::string ut, vt, extra;
        if (!(ends >> ut >> vt) || (ends >> extra))
            throw ParseError(line_no, "expected '<u> <v> :'");
        Parsed row;
        row.line = line_no;
        row.u = parse_int(ut, line_no, "node id");
        row.v = parse_int(vt, line_no, "node id");
        if (row.u < 0 || row.u >= n || row.v < 0 || row.v >= n)
            throw ParseError(line_no, "node id out of range");
        if (row.u == row.v) throw ParseError(line_no, "self-loops are not allowed");

        std::string rest = body.substr(colon + 1);
        if (auto semi = rest.find(';'); semi != std::string::npos) {
            std::string wpart = rest.substr(semi + 1);
            rest.erase(semi);
            wpart.erase(0, wpart.find_first_not_of(" \t"));
            if (wpart.rfind("w=", 0) != 0) throw ParseError(line_no, "expected 'w=<weight>'");
            try {
                size_t used = 0;
                row.weight = std::stod(wpart.substr(2), &used);
                std::string tail = wpart.substr(2 + used);
                if (tail.find_first_not_of(" \t") != std::string::npos) throw std::exception();
            } catch (const std::exception&) {
                throw ParseError(line_no, "malformed weight");
            }
            if (*row.weight <= 0) throw ParseError(line_no, "weight must be positive");
        }
        for (std::string& tok = rest;;) {
            auto b = tok.find_first_not_of(" \t,");
            if (b == std::string::npos) break;
            auto e = tok.find_first_of(" \t,", b);
            std::string item = tok.substr(b, e == std::string::npos ? e : e - b);
            tok.erase(0, e == std::string::npos ? tok.size() : e);
            Label l = parse_int(item, line_no, "label");
            if (l < 1) throw ParseError(line_no, "labels must be >= 1");
            row.labels.push_back(l);
        }
        rows.push_back(std::move(row));
    }

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (const auto& row : rows) {
        Edge e{row.u, row.v};
        if (!directed && e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert(e).second) throw ParseError(row.line, "duplicate edge");
        edges.push_back(e);
    }
    StaticGraph g = directed ? StaticGraph::directed(n, edges) : StaticGraph::undirected(n, edges);

    bool any_weight = false, all_weight = true;
    std::map<Edge, double> weights;
    Labeling lab;
    for (const auto& row : rows) {
        Edge key = g.edge_key(row.u, row.v);
        std::vector<Label> sorted = row.labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() && warnings)
            warnings->push_back("line " + std::to_string(row.line) + ": duplicate label removed");
        for (Label l : sorted) lab.add_label(key, l);
        if (row.weight) {
            any_weight = true;
            weights[key] = *row.weight;
        } else {
            all_weight = false;
        }
    }
    if (any_weight && !all_weight)
        throw ParseError(rows.back().line, "weights must cover every edge or none");
    if (any_weight) g.set_weights(weights);
    return build_temporal_graph(g, lab);
}

std::string serialize_temporal_graph(const TemporalGraph& tg) {
    const auto& g = tg.graph();
    std::ostringstream out;
    out << "tg 1\n" << (g.is_directed() ? "directed" : "undirected") << "\n";
    out << "nodes " << g.node_count() << "\n";
    for (const auto& e : g.edges()) {
        out << e.u << " " << e.v << " :";
        const char* sep = " ";
        if (tg.labeling().has_labels(e))
            for (Label l : tg.labeling().labels(e)) {
                out << sep << l;
                sep = ",";
            }
        if (g.has_weights()) out << " ; w=" << format_weight(g.weight(e));
        out << "\n";
    }
    return out.str();
}

XorFormula parse_xor_formula(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "empty formula file");
    std::istringstream head(lines[0].second);
    std::string p, kind;
    int vars = 0, count = 0;
    if (!(head >> p >> kind >> vars >> count) || p != "p" || kind != "xor2")
        throw ParseError(lines[0].first, "expected 'p xor2 <vars> <clauses>'");
    if (vars < 1 || count < 0) throw ParseError(lines[0].first, "bad problem sizes");

    std::vector<XorClause> clauses;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto [line_no, body] = lines[i];
        std::istringstream in(body);
        int a = 0, b = 0, z = -1;
        if (!(in >> a >> b >> z) || z != 0)
            throw ParseError(line_no, "clause line must be '<lit> <lit> 0'");
        std::string extra;
        if (in >> extra) throw ParseError(line_no, "trailing tokens after clause");
        auto lit = [&](int x) {
            if (x == 0 || std::abs(x) > vars) throw ParseError(line_no, "literal out of range");
            return Literal{std::abs(x) - 1, x < 0};
        };
        clauses.push_back({lit(a), lit(b)});
    }
    if (static_cast<int>(clauses.size()) != count)
        throw ParseError(lines.back().first, "clause count does not match the header");
    return XorFormula(vars, std::move(clauses));
}

std::string serialize_xor_formula(const XorFormula& f) {
    std::ostringstream out;
    out << "p xor2 " << f.num_vars() << " " << f.num_clauses() << "\n";
    for (const auto& c : f.clauses()) {
        auto lit = [](const Literal& l) { return (l.negated ? -1 : 1) * (l.var + 1); };
        out << lit(c.first) << " " << lit(c.second) << " 0\n";
    }
    return out.str();
}

} // namespace tgraph
