// Edge-list / DIMACS-style instance reading and writing.
#ifndef LIPP_INSTANCE_IO_HPP
#define LIPP_INSTANCE_IO_HPP

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace lipp {

struct InstanceMeta {
    enum class Source { File, Generated };
    std::string name;
    int n = 0;
    int m = 0;
    Source source = Source::File;
    std::vector<std::string> labels; // external label per vertex id
    int duplicate_warnings = 0;
    int self_loop_warnings = 0;
};

struct ParsedInstance {
    Graph graph;
    InstanceMeta meta;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Accepts two formats:
//   - DIMACS-like: optional "p edge <n> <m>" header, edges as "e <u> <v>"
//     or "<u> <v>" with 1-indexed integer labels;
//   - plain edge list: one "<label> <label>" pair per line, labels mapped
//     to dense ids in first-appearance order.
// Comment lines start with 'c' (as a whole token) or '#'. Duplicate edges
// and self-loops are collapsed/dropped with warning counters.
inline ParsedInstance parse_edge_list(std::istream& in, const std::string& name = "") {
    ParsedInstance result;
    result.meta.name = name;

    std::string line;
    int lineno = 0;
    bool has_header = false;
    int header_n = 0;
    std::map<std::string, int> label_ids;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> raw_edges;

    auto to_id = [&](const std::string& tok, int ln) -> int {
        if (has_header) {
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError(ln, "expected integer vertex label, got '" + tok + "'");
            }
            if (pos != tok.size())
                throw ParseError(ln, "expected integer vertex label, got '" + tok + "'");
            if (v < 1 || v > header_n)
                throw ParseError(ln, "vertex label " + tok + " outside 1.." +
                                         std::to_string(header_n));
            return v - 1;
        }
        auto it = label_ids.find(tok);
        if (it != label_ids.end()) return it->second;
        int id = static_cast<int>(labels.size());
        label_ids.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "c" || tok[0][0] == '#') continue;
        if (tok[0] == "p") {
            if (has_header) throw ParseError(lineno, "duplicate problem header");
            if (!raw_edges.empty()) throw ParseError(lineno, "header after edge lines");
            if (tok.size() != 4) throw ParseError(lineno, "malformed header, want 'p edge n m'");
            try {
                header_n = std::stoi(tok[2]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed header vertex count");
            }
            if (header_n <= 0) throw ParseError(lineno, "instance declares zero vertices");
            has_header = true;
            continue;
        }
        size_t first = 0;
        if (tok[0] == "e") first = 1;
        if (tok.size() - first != 2)
            throw ParseError(lineno, "expected two vertex labels");
        int u = to_id(tok[first], lineno);
        int v = to_id(tok[first + 1], lineno);
        raw_edges.emplace_back(u, v);
    }

    int n = has_header ? header_n : static_cast<int>(labels.size());
    if (n == 0) throw ParseError(lineno, "instance has zero vertices");

    GraphBuildStats stats;
    result.graph = Graph::from_edges(n, raw_edges, &stats);
    result.meta.n = n;
    result.meta.m = result.graph.m();
    result.meta.duplicate_warnings = stats.duplicate_edges;
    result.meta.self_loop_warnings = stats.self_loops;
    result.meta.source = InstanceMeta::Source::File;
    if (has_header) {
        result.meta.labels.reserve(n);
        for (int v = 1; v <= n; ++v) result.meta.labels.push_back(std::to_string(v));
    } else {
        result.meta.labels = std::move(labels);
    }
    return result;
}

// DIMACS form; re-parsing reproduces the graph with the identical id mapping.
inline void write_edge_list(std::ostream& out, const Graph& g, const std::string& name = "") {
    if (!name.empty()) out << "c " << name << "\n";
    out << "p edge " << g.n << " " << g.m() << "\n";
    for (auto [u, v] : g.edges) out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

inline InstanceMeta generated_meta(const std::string& name, const Graph& g) {
    InstanceMeta meta;
    meta.name = name;
    meta.n = g.n;
    meta.m = g.m();
    meta.source = InstanceMeta::Source::Generated;
    for (int v = 1; v <= g.n; ++v) meta.labels.push_back(std::to_string(v));
    return meta;
}

} // namespace lipp

#endif
