#include "oneplanar/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace onep {

namespace {

constexpr int max_canon_vertices = 32;

using Partition = std::vector<std::vector<int>>; // ordered list of cells

// Stable equitable refinement: split every cell by the multiset of neighbor
// colors until no cell splits.
void refine(const Graph& g, Partition& partition) {
    int n = g.vertex_count();
    std::vector<int> color(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < partition.size(); ++c)
            for (int v : partition[c]) color[v] = static_cast<int>(c);

        Partition next;
        for (auto& cell : partition) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> key(partition.size(), 0);
                for (std::uint64_t b = g.neighbors(v); b; b &= b - 1) ++key[color[__builtin_ctzll(b)]];
                split[key].push_back(v);
            }
            if (split.size() > 1) changed = true;
            for (auto& [key, members] : split) next.push_back(members);
        }
        partition = std::move(next);
    }
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::uint8_t> best_cert;
    std::vector<int> best_labeling;
    bool have_best = false;

    std::vector<std::uint8_t> certificate(const std::vector<int>& order) const {
        // order[i] = original vertex at canonical position i
        std::vector<std::uint8_t> cert;
        cert.push_back(static_cast<std::uint8_t>(n));
        int bit = 0;
        std::uint8_t acc = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                acc = static_cast<std::uint8_t>(acc << 1);
                if (g.has_edge(order[i], order[j])) acc |= 1;
                if (++bit == 8) {
                    cert.push_back(acc);
                    acc = 0;
                    bit = 0;
                }
            }
        if (bit) cert.push_back(static_cast<std::uint8_t>(acc << (8 - bit)));
        return cert;
    }

    void consider(const Partition& partition) {
        std::vector<int> order;
        for (auto& cell : partition) order.push_back(cell.front());
        auto cert = certificate(order);
        if (!have_best || cert < best_cert) {
            best_cert = std::move(cert);
            best_labeling.assign(n, 0);
            for (int i = 0; i < n; ++i) best_labeling[order[i]] = i;
            have_best = true;
        }
    }

    void search(Partition partition) {
        refine(g, partition);
        std::size_t target = partition.size();
        for (std::size_t c = 0; c < partition.size(); ++c)
            if (partition[c].size() > 1 &&
                (target == partition.size() || partition[c].size() < partition[target].size()))
                target = c;
        if (target == partition.size()) {
            consider(partition);
            return;
        }
        for (int v : partition[target]) {
            Partition child;
            for (std::size_t c = 0; c < partition.size(); ++c) {
                if (c == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int w : partition[c])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(partition[c]);
                }
            }
            search(std::move(child));
        }
    }
};

std::vector<int> canonical_labeling_impl(const Graph& g) {
    int n = g.vertex_count();
    if (n > max_canon_vertices) fail(ErrorCode::size_limit, "canonical form limited to 32 vertices");
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    if (n == 0) return identity;

    // Complete and empty graphs have factorial search trees but a trivial answer.
    int m = g.edge_count();
    if (m == 0 || m == n * (n - 1) / 2) return identity;

    CanonSearch s{g, n};
    Partition initial{identity};
    s.search(std::move(initial));
    return s.best_labeling;
}

} // namespace

std::vector<int> canonical_labeling(const Graph& g) { return canonical_labeling_impl(g); }

CanonicalForm canonical_form(const Graph& g) {
    auto labeling = canonical_labeling_impl(g);
    Graph c = g.relabeled(labeling);
    int n = c.vertex_count();
    CanonicalForm out;
    out.bytes.push_back(static_cast<std::uint8_t>(n));
    int bit = 0;
    std::uint8_t acc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = static_cast<std::uint8_t>(acc << 1);
            if (c.has_edge(i, j)) acc |= 1;
            if (++bit == 8) {
                out.bytes.push_back(acc);
                acc = 0;
                bit = 0;
            }
        }
    if (bit) out.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - bit)));
    return out;
}

void for_each_isomorphism(const Graph& g, const Graph& h,
                          const std::function<bool(const std::vector<int>&)>& fn) {
    int n = g.vertex_count();
    if (h.vertex_count() != n || h.edge_count() != g.edge_count()) return;

    // Map vertices in a connectivity-friendly order with degree pruning.
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        bool best_connected = false;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            bool connected = false;
            for (int u : order)
                if (g.has_edge(u, v)) connected = true;
            if (best == -1 || (connected && !best_connected) ||
                (connected == best_connected && g.degree(v) > g.degree(best)))
                best = v, best_connected = connected;
        }
        order.push_back(best);
        placed[best] = true;
    }

    std::vector<int> image(n, -1);
    std::uint64_t used = 0;
    bool stop = false;

    auto rec = [&](auto&& self, int step) -> void {
        if (stop) return;
        if (step == n) {
            if (!fn(image)) stop = true;
            return;
        }
        int v = order[step];
        for (int w = 0; w < n && !stop; ++w) {
            if ((used >> w) & 1u) continue;
            if (h.degree(w) != g.degree(v)) continue;
            bool ok = true;
            for (int i = 0; i < step && ok; ++i)
                if (g.has_edge(order[i], v) != h.has_edge(image[order[i]], w)) ok = false;
            if (!ok) continue;
            image[v] = w;
            used |= std::uint64_t{1} << w;
            self(self, step + 1);
            used &= ~(std::uint64_t{1} << w);
        }
    };
    rec(rec, 0);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    std::optional<std::vector<int>> found;
    for_each_isomorphism(g, h, [&](const std::vector<int>& iso) {
        found = iso;
        return false;
    });
    return found;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (g.vertex_count() <= max_canon_vertices) return canonical_form(g) == canonical_form(h);
    return find_isomorphism(g, h).has_value();
}

} // namespace onep
