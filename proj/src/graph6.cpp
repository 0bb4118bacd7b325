#include "opturan/graph6.hpp"

#include <string>

namespace opturan {

namespace {
constexpr int kOffset = 63;
constexpr int kMaxOrder = 258047; // largest order of the 4-byte size form
} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxOrder)
        throw DomainError("graph too large for graph6 size prefix");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
        out.push_back(static_cast<char>((n & 63) + kOffset));
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty())
        throw DomainError("empty graph6 string");

    auto val = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < kOffset || c > kOffset + 63)
            throw DomainError("invalid graph6 byte at position " + std::to_string(i));
        return c - kOffset;
    };

    std::size_t pos = 0;
    long long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw DomainError("graph6 orders above 258047 are not supported");
        if (text.size() < 4)
            throw DomainError("truncated graph6 size prefix");
        n = (static_cast<long long>(val(1)) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        n = val(0);
        pos = 1;
    }

    const long long nbits = n * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) != nbytes)
        throw DomainError("graph6 body length mismatch: expected " + std::to_string(nbytes) +
                          " bytes for order " + std::to_string(n));

    std::vector<Edge> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = val(pos + bit / 6);
            if (byte >> (5 - bit % 6) & 1)
                edges.emplace_back(u, v);
        }
    }
    // Padding bits must be zero.
    for (long long b = bit; b < nbytes * 6; ++b) {
        if (val(pos + b / 6) >> (5 - b % 6) & 1)
            throw DomainError("nonzero padding in graph6 body");
    }
    return Graph::from_edge_list(static_cast<int>(n), std::move(edges));
}

std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.order(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (const Edge& e : g.edges())
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    out += "}\n";
    return out;
}

} // namespace opturan
