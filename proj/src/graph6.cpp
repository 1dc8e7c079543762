#include "oneplanar/graph6.hpp"

#include <istream>

namespace onep {

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(63 + (n & 0x3f)));
    }
    int bit = 0;
    int acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bit = 0;
            }
        }
    if (bit) out.push_back(static_cast<char>(63 + (acc << (6 - bit))));
    return out;
}

Graph from_graph6(const std::string& line) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) fail(ErrorCode::parse, "truncated graph6 record");
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) fail(ErrorCode::parse, "invalid graph6 byte");
        return c - 63;
    };

    int n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    if (n > Graph::max_vertices) fail(ErrorCode::size_limit, "graph6 record exceeds 64 vertices");

    Graph g(n);
    int bit = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bit == 0) {
                acc = next();
                bit = 6;
            }
            if ((acc >> (bit - 1)) & 1) g.add_edge(i, j);
            --bit;
        }
    return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

} // namespace onep
