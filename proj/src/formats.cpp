#include "kitefree/formats.hpp"

#include <sstream>

namespace kitefree {

namespace {

void append_g6_bits(std::string& out, const std::vector<bool>& bits)
{
    for (size_t i = 0; i < bits.size(); i += 6) {
        int x = 0;
        for (size_t j = 0; j < 6; ++j) {
            x <<= 1;
            if (i + j < bits.size() && bits[i + j])
                x |= 1;
        }
        out.push_back(char(x + 63));
    }
}

} // namespace

std::string to_graph6(const Graph& g)
{
    int n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for graph6 writer");
    }
    std::vector<bool> bits;
    bits.reserve(size_t(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(g.adjacent(i, j));
    append_g6_bits(out, bits);
    return out;
}

Graph from_graph6(const std::string& line)
{
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size())
            throw ParseError("graph6: truncated input");
        int c = (unsigned char)line[pos++];
        if (c < 63 || c > 126)
            throw ParseError("graph6: invalid character");
        return c - 63;
    };
    if (line.empty())
        throw ParseError("graph6: empty line");
    long long n;
    if (line[0] != '~') {
        n = next();
    } else {
        ++pos;
        if (pos < line.size() && line[pos] == '~')
            throw ParseError("graph6: >258047 vertices not supported");
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if ((long long)(line.size() - pos) < nbytes)
        throw ParseError("graph6: truncated adjacency bits");
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int cur = 0, left = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (left == 0) {
                cur = next();
                left = 6;
            }
            if (cur & (1 << (left - 1)))
                edges.emplace_back(i, j);
            --left;
            ++bit;
        }
    // trailing padding bits must be zero
    if (left > 0 && (cur & ((1 << left) - 1)))
        throw ParseError("graph6: nonzero padding bits");
    if (pos != line.size())
        throw ParseError("graph6: trailing characters");
    return Graph(int(n), edges);
}

std::string to_dimacs(const Graph& g)
{
    std::ostringstream out;
    auto e = g.edges();
    out << "p edge " << g.size() << " " << e.size() << "\n";
    for (auto [u, v] : e)
        out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Graph from_dimacs(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col"))
                throw ParseError("dimacs: bad problem line");
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v))
                throw ParseError("dimacs: bad edge line");
            if (n < 0)
                throw ParseError("dimacs: edge before problem line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("dimacs: endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("dimacs: unknown line tag '" + tag + "'");
        }
    }
    if (n < 0)
        throw ParseError("dimacs: missing problem line");
    return Graph(n, edges);
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.size() << "\n";
    for (auto [u, v] : g.edges())
        out << u << " " << v << "\n";
    return out.str();
}

Graph from_edge_list(const std::string& text)
{
    std::istringstream in(text);
    int n;
    if (!(in >> n))
        throw ParseError("edge list: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u) {
        if (!(in >> v))
            throw ParseError("edge list: dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: endpoint out of range");
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

std::optional<GraphFormat> format_from_extension(const std::string& path)
{
    auto dot = path.rfind('.');
    if (dot == std::string::npos)
        return std::nullopt;
    std::string ext = path.substr(dot + 1);
    if (ext == "g6")
        return GraphFormat::graph6;
    if (ext == "col")
        return GraphFormat::dimacs;
    if (ext == "txt")
        return GraphFormat::edge_list;
    return std::nullopt;
}

Graph parse_graph(const std::string& text, GraphFormat fmt)
{
    switch (fmt) {
    case GraphFormat::graph6: {
        // first non-empty line
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty())
                return from_graph6(line);
        throw ParseError("graph6: no content");
    }
    case GraphFormat::dimacs:
        return from_dimacs(text);
    case GraphFormat::edge_list:
        return from_edge_list(text);
    }
    throw ParseError("unknown format");
}

} // namespace kitefree
