#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "relax/errors.hpp"
#include "relax/graph.hpp"

namespace relax {

enum class GraphFormat { dimacs, edgelist };

inline std::string_view to_string(GraphFormat f) { return f == GraphFormat::dimacs ? "dimacs" : "edgelist"; }

inline GraphFormat parse_format(std::string_view text) {
    if (text == "dimacs") return GraphFormat::dimacs;
    if (text == "edgelist") return GraphFormat::edgelist;
    throw ParseError("unknown graph format '" + std::string(text) + "'");
}

/// ".col" and ".dimacs" files are DIMACS, anything else an edge list.
inline GraphFormat format_for_path(std::string_view path) {
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
    };
    return ends_with(".col") || ends_with(".dimacs") ? GraphFormat::dimacs : GraphFormat::edgelist;
}

namespace detail {

inline std::uint64_t read_count(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    auto const* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end)
        throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                         std::string(token) + "'");
    return value;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t const j = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > j) out.push_back(line.substr(j, i - j));
    }
    return out;
}

inline Graph build_checked(std::size_t n, std::vector<Edge> const& edges) {
    try {
        return build_graph(n, edges);
    } catch (GraphError const& e) {
        throw ParseError(e.what());
    }
}

inline Graph parse_dimacs(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto const tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (header) throw ParseError("line " + std::to_string(line_no) + ": duplicate 'p' header");
            if (tok.size() != 4 || tok[1] != "edge")
                throw ParseError("line " + std::to_string(line_no) + ": malformed header, expected 'p edge n m'");
            header.emplace(read_count(tok[2], line_no), read_count(tok[3], line_no));
        } else if (tok[0] == "e") {
            if (!header) throw ParseError("line " + std::to_string(line_no) + ": edge before 'p edge' header");
            if (tok.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": expected 'e u v'");
            auto const u = read_count(tok[1], line_no), v = read_count(tok[2], line_no);
            if (u < 1 || v < 1 || u > header->first || v > header->first)
                throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range 1.." +
                                 std::to_string(header->first));
            edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!header) throw ParseError("missing 'p edge n m' header");
    if (edges.size() != header->second)
        throw ParseError("header declares " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));
    return build_checked(header->first, edges);
}

inline Graph parse_edgelist(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::uint64_t> declared;
    bool seen_pair = false;
    std::uint64_t max_id = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (auto const hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        auto const tok = split_ws(view);
        if (tok.empty()) continue;
        if (tok.size() == 1 && tok[0].starts_with("n=")) {
            if (declared || seen_pair)
                throw ParseError("line " + std::to_string(line_no) + ": 'n=<count>' must be the first entry");
            declared = read_count(tok[0].substr(2), line_no);
            continue;
        }
        if (tok.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected a pair 'u v'");
        auto const u = read_count(tok[0], line_no), v = read_count(tok[1], line_no);
        if (declared && (u >= *declared || v >= *declared))
            throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range 0.." +
                             std::to_string(*declared - 1));
        if (u > std::numeric_limits<Vertex>::max() - 1 || v > std::numeric_limits<Vertex>::max() - 1)
            throw ParseError("line " + std::to_string(line_no) + ": vertex id too large");
        max_id = std::max({max_id, u, v});
        seen_pair = true;
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    std::size_t const n = declared ? *declared : (seen_pair ? max_id + 1 : 0);
    return build_checked(n, edges);
}

} // namespace detail

inline Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::dimacs ? detail::parse_dimacs(in) : detail::parse_edgelist(in);
}

inline Graph parse_graph(std::string const& text, GraphFormat format) {
    std::istringstream in(text);
    return parse_graph(in, format);
}

inline Graph read_graph_file(std::string const& path, GraphFormat format) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) throw ParseError("'" + path + "' is not a readable file");
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_graph(in, format);
}

/// Edge lists always carry an "n=" header so isolated vertices survive a round trip.
inline void write_graph(std::ostream& out, Graph const& g, GraphFormat format) {
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
        for (Edge e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    } else {
        out << "n=" << g.num_vertices() << '\n';
        for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
    }
}

inline std::string format_graph(Graph const& g, GraphFormat format) {
    std::ostringstream out;
    write_graph(out, g, format);
    return out.str();
}

/// 64-bit FNV-1a of the canonical edge-list text, as "fnv1a64:<16 hex digits>".
inline std::string graph_digest(Graph const& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : format_graph(g, GraphFormat::edgelist)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

enum class GenKind { gnp, gnm, tree, forest };

inline std::string_view to_string(GenKind k) {
    switch (k) {
    case GenKind::gnp: return "gnp";
    case GenKind::gnm: return "gnm";
    case GenKind::tree: return "tree";
    case GenKind::forest: return "forest";
    }
    return "?";
}

inline GenKind parse_gen_kind(std::string_view text) {
    for (auto k : {GenKind::gnp, GenKind::gnm, GenKind::tree, GenKind::forest})
        if (to_string(k) == text) return k;
    throw std::invalid_argument("unknown generator '" + std::string(text) + "'");
}

/// Tree with the given Prüfer sequence over n = seq.size()+2 vertices.
inline Graph tree_from_prufer(std::span<Vertex const> seq) {
    std::size_t const n = seq.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (Vertex v : seq) {
        if (v >= n) throw std::invalid_argument("Prüfer entry out of range");
        ++degree[v];
    }
    std::set<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    for (Vertex v : seq) {
        Vertex const leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, v});
        if (--degree[v] == 1) leaves.insert(v);
    }
    edges.push_back({*leaves.begin(), *std::next(leaves.begin())});
    return build_graph(n, edges);
}

/// Seeded generators (mt19937_64):
///   gnp    each pair independently with probability `param`;
///   gnm    exactly `param` distinct edges chosen uniformly;
///   tree   uniform labelled tree via a random Prüfer sequence;
///   forest a random tree with each edge dropped with probability `param`.
inline Graph gen_random(GenKind kind, std::size_t n, double param, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto coin = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };
    auto random_tree = [&]() -> std::vector<Edge> {
        if (n < 2) return {};
        if (n == 2) return {{0, 1}};
        std::vector<Vertex> seq(n - 2);
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
        for (auto& v : seq) v = pick(rng);
        return tree_from_prufer(seq).edges();
    };
    if ((kind == GenKind::gnp || kind == GenKind::forest) && !(param >= 0.0 && param <= 1.0))
        throw std::invalid_argument("probability must lie in [0, 1]");

    std::vector<Edge> edges;
    switch (kind) {
    case GenKind::gnp:
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(param)) edges.push_back({u, v});
        break;
    case GenKind::gnm: {
        std::vector<Edge> all;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
        if (!(param >= 0.0) || param != std::floor(param) || param > static_cast<double>(all.size()))
            throw std::invalid_argument("gnm edge count must be an integer in [0, n(n-1)/2]");
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(param));
        edges = std::move(all);
        break;
    }
    case GenKind::tree: edges = random_tree(); break;
    case GenKind::forest:
        for (Edge e : random_tree())
            if (!coin(param)) edges.push_back(e);
        break;
    }
    return build_graph(n, edges);
}

} // namespace relax
