#include "oneplanar/drawing.hpp"

#include "oneplanar/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace onep {

namespace {

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

} // namespace

int OneDrawing::edge_index(int u, int v) const {
    auto e = norm_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) fail(ErrorCode::invalid_argument, "edge not in graph");
    return static_cast<int>(it - edges_.begin());
}

void OneDrawing::index_edges() {
    edges_ = graph_.edges();
    std::sort(edges_.begin(), edges_.end());
    crossings_on_edge_.assign(edges_.size(), {});
    for (std::size_t i = 0; i < cross_.size(); ++i) {
        crossings_on_edge_[cross_[i].first].push_back(static_cast<int>(i));
        crossings_on_edge_[cross_[i].second].push_back(static_cast<int>(i));
    }
}

// Path of planarization vertices along an edge: endpoint, dummies in crossing
// order, endpoint.
static std::vector<int> edge_path(const std::pair<int, int>& e, const std::vector<int>& crossings, int n) {
    std::vector<int> path{e.first};
    for (int c : crossings) path.push_back(n + c);
    path.push_back(e.second);
    return path;
}

OneDrawing OneDrawing::assemble(Graph g, std::vector<std::pair<int, int>> cross_edge_indices,
                                const std::vector<std::vector<std::pair<int, int>>>& rotations_with_edges) {
    OneDrawing d;
    d.graph_ = std::move(g);
    d.cross_ = std::move(cross_edge_indices);
    d.index_edges();

    int n = d.graph_.vertex_count();
    int pcount = n + static_cast<int>(d.cross_.size());

    std::vector<std::pair<int, int>> pedges;
    std::vector<int> porig;
    // pedge lookup: (pv, target, orig edge) -> pedge index
    std::map<std::tuple<int, int, int>, int> lookup;
    for (std::size_t e = 0; e < d.edges_.size(); ++e) {
        auto path = edge_path(d.edges_[e], d.crossings_on_edge_[e], n);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            int idx = static_cast<int>(pedges.size());
            pedges.emplace_back(path[i], path[i + 1]);
            porig.push_back(static_cast<int>(e));
            lookup[{path[i], path[i + 1], static_cast<int>(e)}] = idx;
            lookup[{path[i + 1], path[i], static_cast<int>(e)}] = idx;
        }
    }

    d.plan_ = EmbeddedGraph(pcount, pedges);
    d.pedge_orig_ = std::move(porig);

    if (static_cast<int>(rotations_with_edges.size()) != pcount)
        fail(ErrorCode::parse, "rotation list count mismatch");
    for (int pv = 0; pv < pcount; ++pv) {
        for (auto [target, e] : rotations_with_edges[pv]) {
            auto it = lookup.find({pv, target, e});
            if (it == lookup.end()) fail(ErrorCode::parse, "rotation entry matches no edge segment");
            int pe = it->second;
            int dart = (d.plan_.edge_ends()[pe].first == pv) ? 2 * pe : 2 * pe + 1;
            d.plan_.rotation(pv).push_back(dart);
        }
    }
    return d;
}

OneDrawing OneDrawing::build(const Graph& g, const std::vector<EdgePair>& crossings,
                             const std::vector<std::vector<int>>& rotations) {
    int n = g.vertex_count();
    auto edge_sorted = g.edges();
    std::sort(edge_sorted.begin(), edge_sorted.end());
    auto find_edge = [&](std::pair<int, int> e) {
        e = norm_edge(e.first, e.second);
        auto it = std::lower_bound(edge_sorted.begin(), edge_sorted.end(), e);
        if (it == edge_sorted.end() || *it != e) fail(ErrorCode::invalid_argument, "crossing names unknown edge");
        return static_cast<int>(it - edge_sorted.begin());
    };

    std::vector<std::pair<int, int>> cross_idx;
    for (auto& [e1, e2] : crossings) {
        int a = find_edge(e1), b = find_edge(e2);
        if (a == b) fail(ErrorCode::invalid_argument, "crossing pairs an edge with itself");
        cross_idx.emplace_back(std::min(a, b), std::max(a, b));
    }

    // Pre-compute crossings per edge in the same order assemble() will use.
    std::vector<std::vector<int>> on_edge(edge_sorted.size());
    for (std::size_t i = 0; i < cross_idx.size(); ++i) {
        on_edge[cross_idx[i].first].push_back(static_cast<int>(i));
        on_edge[cross_idx[i].second].push_back(static_cast<int>(i));
    }

    // Resolve identifier lists into (target, edge) pairs. Repeated identifiers
    // at a vertex resolve to candidate segments in edge-index order.
    std::vector<std::vector<std::pair<int, int>>> specs(rotations.size());
    for (std::size_t pv = 0; pv < rotations.size(); ++pv) {
        std::map<int, int> occurrence;
        for (int id : rotations[pv]) {
            std::vector<std::pair<int, int>> candidates; // (edge, adjacent path node)
            auto consider = [&](int e) {
                auto path = edge_path(edge_sorted[e], on_edge[e], n);
                for (std::size_t i = 0; i < path.size(); ++i) {
                    if (path[i] != static_cast<int>(pv)) continue;
                    if (i > 0 && path[i - 1] == id) candidates.emplace_back(e, id);
                    if (i + 1 < path.size() && path[i + 1] == id) candidates.emplace_back(e, id);
                }
            };
            if (static_cast<int>(pv) < n && id < n) {
                consider(find_edge({static_cast<int>(pv), id}));
            } else {
                // A dummy endpoint: candidate segments come from the crossing's
                // two edges (plus, at originals, any edge crossed by it).
                int c = (static_cast<int>(pv) >= n) ? static_cast<int>(pv) - n : id - n;
                consider(cross_idx[c].first);
                consider(cross_idx[c].second);
            }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            int k = occurrence[id]++;
            if (k >= static_cast<int>(candidates.size()))
                fail(ErrorCode::parse, "rotation entry matches no edge segment");
            specs[pv].emplace_back(id, candidates[static_cast<std::size_t>(k)].first);
        }
    }
    return assemble(g, std::move(cross_idx), specs);
}

ValidationResult OneDrawing::validate() const {
    for (auto [e1, e2] : cross_)
        if (e1 == e2) return {false, "matching: crossing pairs an edge with itself"};
    for (const auto& list : crossings_on_edge_)
        if (list.size() > 1) return {false, "matching: edge appears in more than one crossing"};

    if (!plan_.rotation_complete()) return {false, "malformed rotation (dart mismatch)"};

    int n = graph_.vertex_count();
    for (int c = 0; c < crossing_count(); ++c)
        if (plan_.rotation(n + c).size() != 4) return {false, "dummy degree is not 4"};

    if (!plan_.euler_spherical()) return {false, "euler characteristic violation (not spherical)"};

    for (int c = 0; c < crossing_count(); ++c) {
        const auto& rot = plan_.rotation(n + c);
        int e0 = pedge_orig_[EmbeddedGraph::dart_edge(rot[0])];
        int e1 = pedge_orig_[EmbeddedGraph::dart_edge(rot[1])];
        int e2 = pedge_orig_[EmbeddedGraph::dart_edge(rot[2])];
        int e3 = pedge_orig_[EmbeddedGraph::dart_edge(rot[3])];
        if (!(e0 == e2 && e1 == e3 && e0 != e1)) return {false, "touching, not crossing"};
    }
    return {true, ""};
}

bool OneDrawing::is_simple() const {
    for (auto [e1, e2] : cross_) {
        auto a = edges_[e1], b = edges_[e2];
        if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
            return false;
    }
    return true;
}

std::vector<Face> OneDrawing::faces() const {
    std::vector<Face> out;
    for (auto& cycle : plan_.face_cycles()) {
        Face f;
        f.darts = cycle;
        f.contains_crossing = false;
        for (int d : cycle) {
            int v = plan_.dart_origin(d);
            f.boundary.push_back(v);
            if (is_dummy_vertex(v)) f.contains_crossing = true;
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<VertexSet> OneDrawing::facial_triangles() const {
    std::vector<VertexSet> out;
    for (const auto& f : faces()) {
        if (f.contains_crossing || f.darts.size() != 3) continue;
        VertexSet s;
        for (int v : f.boundary) s.add(v);
        if (s.size() == 3) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Skeleton OneDrawing::true_planar_skeleton() const {
    int n = graph_.vertex_count();
    Graph sg(n);
    std::vector<std::pair<int, int>> sedges;
    std::vector<int> orig_to_skel(edges_.size(), -1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!crossings_on_edge_[e].empty()) continue;
        orig_to_skel[e] = static_cast<int>(sedges.size());
        sedges.push_back(edges_[e]);
        sg.add_edge(edges_[e].first, edges_[e].second);
    }
    EmbeddedGraph emb(n, sedges);
    for (int v = 0; v < n; ++v)
        for (int d : plan_.rotation(v)) {
            int se = orig_to_skel[pedge_orig_[EmbeddedGraph::dart_edge(d)]];
            if (se < 0) continue;
            emb.rotation(v).push_back(sedges[se].first == v ? 2 * se : 2 * se + 1);
        }
    return {std::move(sg), std::move(emb)};
}

bool OneDrawing::is_quasi_rich() const {
    if (!is_simple()) return false;
    for (auto [e1, e2] : cross_) {
        int vs[4] = {edges_[e1].first, edges_[e1].second, edges_[e2].first, edges_[e2].second};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (!graph_.has_edge(vs[i], vs[j])) continue;
                auto e = norm_edge(vs[i], vs[j]);
                int idx = edge_index(e.first, e.second);
                if (idx == e1 || idx == e2) continue;
                if (edge_crossed(idx)) return false;
            }
    }
    return true;
}

bool OneDrawing::is_rich() const {
    if (!is_quasi_rich()) return false;
    for (auto [e1, e2] : cross_) {
        int vs[4] = {edges_[e1].first, edges_[e1].second, edges_[e2].first, edges_[e2].second};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!graph_.has_edge(vs[i], vs[j])) return false;
    }
    return true;
}

std::vector<VertexSet> OneDrawing::skeleton_separating_triangles() const {
    auto skel = true_planar_skeleton();
    std::vector<VertexSet> out;
    for (VertexSet t : triangles_of(skel.graph))
        if (is_nontrivial_separator(graph_, t)) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

OneDrawing OneDrawing::reflected() const {
    OneDrawing d = *this;
    d.plan_ = plan_.reflected();
    return d;
}

OneDrawing OneDrawing::restrict(VertexSet verts, const std::vector<int>& edge_indices) const {
    int n = graph_.vertex_count();
    std::vector<int> vmap(n, -1);
    {
        int next = 0;
        for (int v : verts.to_vector()) vmap[v] = next++;
    }

    std::vector<char> keep_edge(edges_.size(), 0);
    for (int e : edge_indices) {
        if (vmap[edges_[e].first] < 0 || vmap[edges_[e].second] < 0)
            fail(ErrorCode::invalid_argument, "restriction edge leaves vertex set");
        keep_edge[e] = 1;
    }

    Graph sub(verts.size());
    std::vector<std::pair<int, int>> new_edges;
    std::vector<int> edge_map(edges_.size(), -1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!keep_edge[e]) continue;
        auto ne = norm_edge(vmap[edges_[e].first], vmap[edges_[e].second]);
        sub.add_edge(ne.first, ne.second);
        new_edges.push_back(ne);
    }
    std::sort(new_edges.begin(), new_edges.end());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!keep_edge[e]) continue;
        auto ne = norm_edge(vmap[edges_[e].first], vmap[edges_[e].second]);
        edge_map[e] = static_cast<int>(std::lower_bound(new_edges.begin(), new_edges.end(), ne) - new_edges.begin());
    }

    // Surviving crossings, renumbered canonically by their new edge pair.
    std::vector<std::pair<int, int>> new_cross;
    std::vector<int> cross_map(cross_.size(), -1);
    std::vector<std::pair<std::pair<int, int>, int>> order;
    for (std::size_t c = 0; c < cross_.size(); ++c) {
        if (!keep_edge[cross_[c].first] || !keep_edge[cross_[c].second]) continue;
        auto p = std::minmax(edge_map[cross_[c].first], edge_map[cross_[c].second]);
        order.push_back({{p.first, p.second}, static_cast<int>(c)});
    }
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_cross.push_back(order[i].first);
        cross_map[order[i].second] = static_cast<int>(i);
    }

    // Map a surviving planarization vertex to its new id, or -1.
    auto pv_map = [&](int pv) {
        if (pv < n) return vmap[pv];
        int c = cross_map[pv - n];
        return c < 0 ? -1 : verts.size() + c;
    };

    // Walk an edge path from position `pos` in direction `dir` to the next
    // surviving node.
    auto next_surviving = [&](int e, std::size_t pos, int dir) {
        auto p = edge_path(edges_[e], crossings_on_edge_[e], n);
        for (std::size_t i = pos;;) {
            i = static_cast<std::size_t>(static_cast<int>(i) + dir);
            int node = p[i];
            int mapped = pv_map(node);
            if (mapped >= 0) return mapped;
        }
    };

    int new_pcount = verts.size() + static_cast<int>(new_cross.size());
    std::vector<std::vector<std::pair<int, int>>> specs(static_cast<std::size_t>(new_pcount));
    for (int pv = 0; pv < plan_.vertex_count(); ++pv) {
        int npv = pv_map(pv);
        if (npv < 0) continue;
        for (int d : plan_.rotation(pv)) {
            int e = pedge_orig_[EmbeddedGraph::dart_edge(d)];
            if (!keep_edge[e]) continue;
            auto p = edge_path(edges_[e], crossings_on_edge_[e], n);
            int target = plan_.dart_target(d);
            std::size_t pos = 0;
            int dir = 0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (p[i] != pv) continue;
                if (i > 0 && p[i - 1] == target) pos = i, dir = -1;
                if (i + 1 < p.size() && p[i + 1] == target) pos = i, dir = +1;
            }
            specs[static_cast<std::size_t>(npv)].emplace_back(next_surviving(e, pos, dir), edge_map[e]);
        }
    }
    return assemble(std::move(sub), std::move(new_cross), specs);
}

OneDrawing OneDrawing::restrict_to_vertices(VertexSet verts) const {
    std::vector<int> keep;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (verts.contains(edges_[e].first) && verts.contains(edges_[e].second))
            keep.push_back(static_cast<int>(e));
    return restrict(verts, keep);
}

OneDrawing OneDrawing::delete_edge(int u, int v) const {
    int drop = edge_index(u, v);
    std::vector<int> keep;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (static_cast<int>(e) != drop) keep.push_back(static_cast<int>(e));
    VertexSet all;
    for (int x = 0; x < graph_.vertex_count(); ++x) all.add(x);
    return restrict(all, keep);
}

bool weak_equivalent(const OneDrawing& a, const OneDrawing& b) {
    if (a.graph().vertex_count() != b.graph().vertex_count()) return false;
    if (a.crossing_count() != b.crossing_count()) return false;

    int n = a.graph().vertex_count();
    bool found = false;
    for_each_isomorphism(a.graph(), b.graph(), [&](const std::vector<int>& iso) {
        // The isomorphism must carry the crossing matching of a onto b's.
        std::vector<int> cmap(static_cast<std::size_t>(a.crossing_count()), -1);
        for (int c = 0; c < a.crossing_count(); ++c) {
            auto [e1, e2] = a.crossing_pairs()[static_cast<std::size_t>(c)];
            auto ea = a.edge_list()[static_cast<std::size_t>(e1)];
            auto eb = a.edge_list()[static_cast<std::size_t>(e2)];
            std::pair<int, int> fa{iso[ea.first], iso[ea.second]};
            std::pair<int, int> fb{iso[eb.first], iso[eb.second]};
            int i1, i2;
            try {
                i1 = b.edge_index(fa.first, fa.second);
                i2 = b.edge_index(fb.first, fb.second);
            } catch (const Error&) {
                return true; // continue with next isomorphism
            }
            auto want = std::minmax(i1, i2);
            auto it = std::find(b.crossing_pairs().begin(), b.crossing_pairs().end(),
                                std::make_pair(want.first, want.second));
            if (it == b.crossing_pairs().end()) return true;
            cmap[static_cast<std::size_t>(c)] = static_cast<int>(it - b.crossing_pairs().begin());
        }
        {
            std::vector<int> sorted = cmap;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return true;
        }

        auto map_pv = [&](int pv) { return pv < n ? iso[pv] : n + cmap[static_cast<std::size_t>(pv - n)]; };

        // Compare rotation systems as cyclic sequences of (target, edge).
        auto rotation_signature = [&](const OneDrawing& d, int pv, bool mapped) {
            std::vector<std::pair<int, int>> sig;
            for (int dart : d.planarization().rotation(pv)) {
                int t = d.planarization().dart_target(dart);
                int e = d.planarization_edge_origin(EmbeddedGraph::dart_edge(dart));
                auto ends = d.edge_list()[static_cast<std::size_t>(e)];
                if (mapped) {
                    t = map_pv(t);
                    auto me = std::minmax(iso[ends.first], iso[ends.second]);
                    sig.emplace_back(t, b.edge_index(me.first, me.second));
                } else {
                    sig.emplace_back(t, e);
                }
            }
            return sig;
        };

        auto cyclic_equal = [](const std::vector<std::pair<int, int>>& x,
                               const std::vector<std::pair<int, int>>& y) {
            if (x.size() != y.size()) return false;
            if (x.empty()) return true;
            for (std::size_t off = 0; off < x.size(); ++off) {
                bool ok = true;
                for (std::size_t i = 0; i < x.size() && ok; ++i)
                    if (x[i] != y[(i + off) % y.size()]) ok = false;
                if (ok) return true;
            }
            return false;
        };

        for (bool reflect : {false, true}) {
            bool all = true;
            for (int pv = 0; pv < a.planarization().vertex_count() && all; ++pv) {
                auto sig_a = rotation_signature(a, pv, true);
                if (reflect) std::reverse(sig_a.begin(), sig_a.end());
                auto sig_b = rotation_signature(b, map_pv(pv), false);
                if (!cyclic_equal(sig_a, sig_b)) all = false;
            }
            if (all) {
                found = true;
                return false;
            }
        }
        return true;
    });
    return found;
}

} // namespace onep
