// Independent brute-force oracles used to freeze expected values. These stay
// deliberately naive and separate from the library implementations.
#ifndef ONEPLANAR_TEST_ORACLES_HPP
#define ONEPLANAR_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "oneplanar/graph.hpp"

namespace oracle {

inline std::uint64_t popcount(std::uint64_t x) { return static_cast<std::uint64_t>(__builtin_popcountll(x)); }

// Clique count by enumerating all vertex subsets.
inline std::uint64_t clique_count_subsets(const onep::Graph& g, int t) {
    int n = g.vertex_count();
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<int>(popcount(mask)) != t) continue;
        bool clique = true;
        for (int u = 0; u < n && clique; ++u)
            for (int v = u + 1; v < n && clique; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !g.has_edge(u, v)) clique = false;
        if (clique) ++count;
    }
    return count;
}

inline std::uint64_t all_cliques_subsets(const onep::Graph& g) {
    std::uint64_t total = 0;
    for (int t = 0; t <= g.vertex_count(); ++t) total += clique_count_subsets(g, t);
    return total;
}

// Separator check by deleting the subset and counting components with plain DFS.
inline bool separates(const onep::Graph& g, std::uint64_t subset) {
    int n = g.vertex_count();
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!((subset >> v) & 1)) rest.push_back(v);
    if (rest.empty()) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{rest[0]};
    seen[static_cast<std::size_t>(rest[0])] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : rest)
            if (!seen[static_cast<std::size_t>(v)] && g.has_edge(u, v)) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
    }
    for (int v : rest)
        if (!seen[static_cast<std::size_t>(v)]) return true;
    return false;
}

inline std::vector<std::uint64_t> separators_subsets(const onep::Graph& g, int size) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        if (static_cast<int>(popcount(mask)) == size && separates(g, mask)) out.push_back(mask);
    return out;
}

// Subgraph count by mapping pattern vertices over all injections.
inline std::uint64_t subgraph_count_injections(const onep::Graph& g, const onep::Graph& h) {
    int n = g.vertex_count(), k = h.vertex_count();
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    std::uint64_t labeled = 0;

    std::vector<int> image(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            ++labeled;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (h.has_edge(j, i) && !g.has_edge(image[static_cast<std::size_t>(j)], w)) ok = false;
            if (!ok) continue;
            image[static_cast<std::size_t>(i)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            self(self, i + 1);
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    rec(rec, 0);

    std::uint64_t autos = 0;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < k && ok; ++u)
            for (int v = u + 1; v < k && ok; ++v)
                if (h.has_edge(u, v) != h.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) ok = false;
        if (ok) ++autos;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return labeled / autos;
}

inline onep::Graph random_graph(int n, double p, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    onep::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(int n, std::uint32_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace oracle

#endif
