#include "vck/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "vck/errors.hpp"

namespace vck {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    if (value < 0) throw ParseError(line, "negative value '" + std::string(tok) + "'");
    return value;
}

struct Header {
    long long n = -1;
    long long m = -1;
};

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    Header header;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    long long seen = 0;
    const long long base = format == GraphFormat::dimacs ? 1 : 0;

    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty()) continue;

        if (format == GraphFormat::dimacs && tok[0] == "c") continue;

        if (header.n < 0) {
            if (format == GraphFormat::dimacs) {
                if (tok.size() != 4 || tok[0] != "p" || tok[1] != "edge")
                    throw ParseError(lineno, "expected header 'p edge n m'");
                header.n = to_int(tok[2], lineno);
                header.m = to_int(tok[3], lineno);
            } else {
                if (tok.size() != 2) throw ParseError(lineno, "expected header 'n m'");
                header.n = to_int(tok[0], lineno);
                header.m = to_int(tok[1], lineno);
            }
            if (header.n > 100000000) throw ParseError(lineno, "vertex count too large");
            continue;
        }

        std::string_view a, b;
        if (format == GraphFormat::dimacs) {
            if (tok.size() != 3 || tok[0] != "e") throw ParseError(lineno, "expected 'e u v'");
            a = tok[1];
            b = tok[2];
        } else {
            if (tok.size() != 2) throw ParseError(lineno, "expected 'u v'");
            a = tok[0];
            b = tok[1];
        }
        long long u = to_int(a, lineno) - base;
        long long v = to_int(b, lineno) - base;
        if (u < 0 || v < 0 || u >= header.n || v >= header.n)
            throw RangeError("line " + std::to_string(lineno) + ": vertex id out of range for n=" +
                             std::to_string(header.n));
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::string(a));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        ++seen;
    }
    if (header.n < 0) throw ParseError(lineno, "missing header");
    if (seen != header.m)
        throw ParseError(lineno, "header declares " + std::to_string(header.m) + " edges, found " +
                                     std::to_string(seen));
    return graph_from_edges(static_cast<int>(header.n), edges);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.order() << ' ' << g.size() << '\n';
        for (auto e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    } else {
        out << g.order() << ' ' << g.size() << '\n';
        for (auto e : g.edges()) out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

GraphFormat format_from_name(std::string_view name) {
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "edge-list" || name == "edgelist") return GraphFormat::edge_list;
    throw InputError("unknown graph format '" + std::string(name) + "'");
}

GraphFormat format_from_path(std::string_view path) {
    auto ends_with = [&](std::string_view s) {
        return path.size() >= s.size() && path.substr(path.size() - s.size()) == s;
    };
    return ends_with(".dimacs") || ends_with(".col") ? GraphFormat::dimacs : GraphFormat::edge_list;
}

}  // namespace vck
