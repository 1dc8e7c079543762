#include "oneplanar/graph.hpp"

#include <algorithm>
#include <numeric>

namespace onep {

Graph Graph::induced(VertexSet verts) const {
    auto keep = verts.to_vector();
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    Graph out(n_);
    for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Graph empty_graph(int k) { return Graph(k); }

Graph complete(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int k) {
    if (k < 1) fail(ErrorCode::invalid_argument, "path needs at least one vertex");
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int k) {
    if (k < 3) fail(ErrorCode::invalid_argument, "cycle needs at least three vertices");
    Graph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    Graph g(n);
    std::vector<int> part_of(n);
    int v = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] <= 0) fail(ErrorCode::invalid_argument, "part sizes must be positive");
        for (int i = 0; i < parts[p]; ++i) part_of[v++] = static_cast<int>(p);
    }
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[u] != part_of[w]) g.add_edge(u, w);
    return g;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.vertex_count(), m = h.vertex_count();
    Graph out(n + m);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(n + u, n + v);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    int n = g.vertex_count(), m = h.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v) out.add_edge(u, n + v);
    return out;
}

Graph strong_product(const Graph& g, const Graph& h) {
    int n = g.vertex_count(), m = h.vertex_count();
    if (n * m > Graph::max_vertices) fail(ErrorCode::size_limit, "strong product exceeds 64 vertices");
    Graph out(n * m);
    auto id = [m](int a, int b) { return a * m + b; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = a; c < n; ++c)
                for (int d = 0; d < m; ++d) {
                    if (id(a, b) >= id(c, d)) continue;
                    bool ga = g.has_edge(a, c), hb = h.has_edge(b, d);
                    if ((a == c && hb) || (ga && b == d) || (ga && hb)) out.add_edge(id(a, b), id(c, d));
                }
    return out;
}

namespace {

std::uint64_t count_cliques_rec(const Graph& g, std::uint64_t candidates, int t) {
    if (t == 0) return 1;
    std::uint64_t total = 0;
    while (candidates) {
        int v = __builtin_ctzll(candidates);
        candidates &= candidates - 1;
        if (__builtin_popcountll(candidates) + 1 < t) break;
        if (t == 1)
            ++total;
        else
            total += count_cliques_rec(g, candidates & g.neighbors(v), t - 1);
    }
    return total;
}

std::uint64_t count_all_cliques_rec(const Graph& g, std::uint64_t candidates) {
    std::uint64_t total = 1; // the clique collected so far
    while (candidates) {
        int v = __builtin_ctzll(candidates);
        candidates &= candidates - 1;
        total += count_all_cliques_rec(g, candidates & g.neighbors(v));
    }
    return total;
}

} // namespace

std::uint64_t count_cliques_size(const Graph& g, int t) {
    if (t < 0) fail(ErrorCode::invalid_argument, "clique size must be non-negative");
    if (t > g.vertex_count()) return 0;
    return count_cliques_rec(g, g.all_vertices(), t);
}

std::uint64_t count_all_cliques(const Graph& g) { return count_all_cliques_rec(g, g.all_vertices()); }

namespace {

// Counts injective homomorphisms from h into g (pattern edges must map to edges).
std::uint64_t count_monomorphisms(const Graph& g, const Graph& h) {
    int hn = h.vertex_count(), gn = g.vertex_count();
    if (hn == 0) return 1;

    // Order pattern vertices so each (after the first) touches a previous one
    // when possible, largest degree first.
    std::vector<int> order;
    std::vector<bool> used(hn, false);
    for (int step = 0; step < hn; ++step) {
        int best = -1;
        bool best_connected = false;
        for (int v = 0; v < hn; ++v) {
            if (used[v]) continue;
            bool connected = false;
            for (int u : order)
                if (h.has_edge(u, v)) connected = true;
            if (best == -1 || (connected && !best_connected) ||
                (connected == best_connected && h.degree(v) > h.degree(best))) {
                best = v;
                best_connected = connected;
            }
        }
        order.push_back(best);
        used[best] = true;
    }

    std::vector<int> image(hn, -1);
    std::uint64_t used_mask = 0, count = 0;

    auto rec = [&](auto&& self, int step) -> void {
        if (step == hn) {
            ++count;
            return;
        }
        int v = order[step];
        std::uint64_t candidates = g.all_vertices() & ~used_mask;
        for (int i = 0; i < step; ++i)
            if (h.has_edge(order[i], v)) candidates &= g.neighbors(image[order[i]]);
        while (candidates) {
            int w = __builtin_ctzll(candidates);
            candidates &= candidates - 1;
            image[v] = w;
            used_mask |= std::uint64_t{1} << w;
            self(self, step + 1);
            used_mask &= ~(std::uint64_t{1} << w);
        }
    };
    rec(rec, 0);
    (void)gn;
    return count;
}

} // namespace

std::uint64_t automorphism_count(const Graph& h) {
    int n = h.vertex_count();
    if (n > 8) fail(ErrorCode::size_limit, "automorphism search limited to 8 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (h.has_edge(u, v) != h.has_edge(perm[u], perm[v])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::uint64_t count_subgraphs_iso(const Graph& g, const Graph& h) {
    if (h.vertex_count() > 8) fail(ErrorCode::size_limit, "pattern limited to 8 vertices");
    return count_monomorphisms(g, h) / automorphism_count(h);
}

bool is_connected_within(const Graph& g, std::uint64_t verts) {
    if (!verts) return true;
    std::uint64_t seen = 0, frontier = verts & (~verts + 1);
    while (frontier) {
        seen |= frontier;
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b; b &= b - 1) next |= g.neighbors(__builtin_ctzll(b));
        frontier = next & verts & ~seen;
    }
    return seen == verts;
}

int component_count(const Graph& g, std::uint64_t verts) {
    int count = 0;
    std::uint64_t remaining = verts;
    while (remaining) {
        ++count;
        std::uint64_t seen = 0, frontier = remaining & (~remaining + 1);
        while (frontier) {
            seen |= frontier;
            std::uint64_t next = 0;
            for (std::uint64_t b = frontier; b; b &= b - 1) next |= g.neighbors(__builtin_ctzll(b));
            frontier = next & remaining & ~seen;
        }
        remaining &= ~seen;
    }
    return count;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.all_vertices()); }

bool is_nontrivial_separator(const Graph& g, VertexSet s) {
    std::uint64_t rest = g.all_vertices() & ~s.bits;
    if (!rest) return false;
    return component_count(g, rest) >= 2;
}

namespace {

template <typename F>
void for_each_subset(std::uint64_t universe, int size, F&& fn) {
    std::vector<int> verts;
    for (std::uint64_t b = universe; b; b &= b - 1) verts.push_back(__builtin_ctzll(b));
    int n = static_cast<int>(verts.size());
    if (size > n || size < 0) return;
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << verts[i];
        fn(mask);
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<VertexSet> nontrivial_separators(const Graph& g, int size) {
    std::vector<VertexSet> out;
    if (size > g.vertex_count()) fail(ErrorCode::invalid_argument, "separator size exceeds vertex count");
    for_each_subset(g.all_vertices(), size, [&](std::uint64_t mask) {
        if (is_nontrivial_separator(g, VertexSet(mask))) out.emplace_back(mask);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_nontrivial_separators(const Graph& g, int size) {
    std::uint64_t count = 0;
    for_each_subset(g.all_vertices(), size, [&](std::uint64_t mask) {
        if (is_nontrivial_separator(g, VertexSet(mask))) ++count;
    });
    return count;
}

bool is_k_connected(const Graph& g, int k) {
    if (g.vertex_count() < k + 1) return false;
    if (!is_connected(g)) return k == 0;
    for (int size = 1; size < k; ++size) {
        bool found = false;
        for_each_subset(g.all_vertices(), size, [&](std::uint64_t mask) {
            if (!found && is_nontrivial_separator(g, VertexSet(mask))) found = true;
        });
        if (found) return false;
    }
    return true;
}

std::vector<VertexSet> triangles_of(const Graph& g) {
    std::vector<VertexSet> out;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            std::uint64_t common = g.neighbors(u) & g.neighbors(v);
            common &= ~((std::uint64_t{1} << (v + 1)) - 1);
            for (std::uint64_t b = common; b; b &= b - 1)
                out.push_back(VertexSet::of({u, v, __builtin_ctzll(b)}));
        }
    return out;
}

std::vector<VertexSet> separating_triangles(const Graph& g) {
    std::vector<VertexSet> out;
    for (VertexSet t : triangles_of(g))
        if (is_nontrivial_separator(g, t)) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace onep
