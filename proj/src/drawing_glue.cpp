#include <algorithm>
#include <map>

#include "oneplanar/drawing.hpp"

namespace onep {

namespace {

struct DartSpec {
    int target;     // combined planarization id placeholder (vertices final, dummies symbolic)
    int edge_owner; // 0 = from a, 1 = from b
    int old_cross;  // crossing index in owner, or -1
    std::pair<int, int> edge; // combined vertex ids, normalized
};

// Builds the combined drawing out of per-vertex dart spec sequences. Dummy
// targets are reconstructed from the edge (valid 1-drawings cross each edge
// at most once).
OneDrawing assemble_combined(int vcount, const std::vector<std::pair<int, int>>& edge_pairs,
                             const std::vector<std::vector<std::pair<std::pair<int, int>, bool>>>& vertex_specs,
                             const std::vector<std::vector<std::pair<int, int>>>& dummy_specs_by_pair,
                             const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& crossings) {
    Graph g(vcount);
    for (auto [u, v] : edge_pairs) g.add_edge(u, v);

    auto edges_sorted = g.edges();
    std::sort(edges_sorted.begin(), edges_sorted.end());
    auto edge_idx = [&](std::pair<int, int> e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        return static_cast<int>(std::lower_bound(edges_sorted.begin(), edges_sorted.end(), e) - edges_sorted.begin());
    };

    // Canonical crossing order: by (e1, e2) index pair.
    std::vector<std::pair<std::pair<int, int>, int>> order;
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        auto p = std::minmax(edge_idx(crossings[c].first), edge_idx(crossings[c].second));
        order.push_back({{p.first, p.second}, static_cast<int>(c)});
    }
    std::sort(order.begin(), order.end());
    std::vector<std::pair<int, int>> cross_pairs;
    std::vector<int> cross_renum(crossings.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        cross_pairs.push_back(order[i].first);
        cross_renum[static_cast<std::size_t>(order[i].second)] = static_cast<int>(i);
    }
    std::vector<int> edge_to_cross(edges_sorted.size(), -1);
    for (std::size_t i = 0; i < cross_pairs.size(); ++i) {
        edge_to_cross[static_cast<std::size_t>(cross_pairs[i].first)] = static_cast<int>(i);
        edge_to_cross[static_cast<std::size_t>(cross_pairs[i].second)] = static_cast<int>(i);
    }

    std::vector<std::vector<std::pair<int, int>>> specs(static_cast<std::size_t>(vcount + static_cast<int>(crossings.size())));
    for (int v = 0; v < vcount; ++v)
        for (auto [entry, crossed] : vertex_specs[static_cast<std::size_t>(v)]) {
            int e = edge_idx(entry);
            int target;
            if (crossed) {
                target = vcount + edge_to_cross[static_cast<std::size_t>(e)];
            } else {
                target = entry.first == v ? entry.second : entry.first;
            }
            specs[static_cast<std::size_t>(v)].emplace_back(target, e);
        }
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        int nc = cross_renum[c];
        for (auto entry : dummy_specs_by_pair[c])
            specs[static_cast<std::size_t>(vcount + nc)].emplace_back(entry.first, edge_idx({entry.first, entry.second}));
    }
    // The dummy spec encodes (endpoint, other endpoint) of the segment's edge.
    return OneDrawing::assemble(std::move(g), std::move(cross_pairs), specs);
}

std::vector<int> rotation_darts(const OneDrawing& d, int pv) { return d.planarization().rotation(pv); }

// (edge endpoints in drawing ids, crossed?) for a dart
std::pair<std::pair<int, int>, bool> dart_edge_info(const OneDrawing& d, int dart) {
    int e = d.planarization_edge_origin(EmbeddedGraph::dart_edge(dart));
    return {d.edge_list()[static_cast<std::size_t>(e)], d.edge_crossed(e)};
}

int find_dart_to(const OneDrawing& d, int pv, int target_vertex) {
    for (int dart : d.planarization().rotation(pv)) {
        auto [ends, crossed] = dart_edge_info(d, dart);
        if (crossed) continue;
        if (d.planarization().dart_target(dart) == target_vertex) return dart;
    }
    fail(ErrorCode::invalid_argument, "expected uncrossed edge dart not present");
}

} // namespace

OneDrawing glue_drawings(const OneDrawing& a, const Face& fa, const OneDrawing& b_in, const Face& fb_in,
                         int rot, bool reflect, std::vector<int>* vertex_map) {
    if (fa.darts.size() != 3 || fa.contains_crossing || fb_in.darts.size() != 3 || fb_in.contains_crossing)
        fail(ErrorCode::invalid_argument, "gluing requires crossing-free triangular faces");

    OneDrawing b = reflect ? b_in.reflected() : b_in;
    Face fb = fb_in;
    if (reflect) {
        // locate the corresponding face in the reflected drawing
        bool found = false;
        VertexSet want;
        for (int v : fb_in.boundary) want.add(v);
        for (const auto& f : b.faces()) {
            if (f.contains_crossing || f.darts.size() != 3) continue;
            VertexSet got;
            for (int v : f.boundary) got.add(v);
            if (got == want) {
                fb = f;
                found = true;
                break;
            }
        }
        if (!found) fail(ErrorCode::invalid_argument, "reflected face not found");
    }

    int na = a.graph().vertex_count(), nb = b.graph().vertex_count();
    const auto& A = fa.boundary;
    const auto& B = fb.boundary;

    // Identify B[(rot - j) mod 3] with A[j]: boundaries glued with opposite
    // orientations, as when joining two disks along their boundary circles.
    std::vector<int> bmap(static_cast<std::size_t>(nb), -1);
    for (int j = 0; j < 3; ++j) bmap[static_cast<std::size_t>(B[static_cast<std::size_t>(((rot - j) % 3 + 3) % 3)])] = A[static_cast<std::size_t>(j)];
    int next = na;
    for (int v = 0; v < nb; ++v)
        if (bmap[static_cast<std::size_t>(v)] < 0) bmap[static_cast<std::size_t>(v)] = next++;
    if (vertex_map) *vertex_map = bmap;

    // Combined edges: a's, plus b's except the shared triangle.
    std::vector<std::pair<int, int>> edge_pairs = a.edge_list();
    auto is_shared_tri_edge = [&](std::pair<int, int> e) {
        int cnt = 0;
        for (int j = 0; j < 3; ++j)
            if (e.first == A[static_cast<std::size_t>(j)] || e.second == A[static_cast<std::size_t>(j)]) ++cnt;
        return cnt == 2;
    };
    for (auto [u, v] : b.edge_list()) {
        auto m = std::minmax(bmap[static_cast<std::size_t>(u)], bmap[static_cast<std::size_t>(v)]);
        std::pair<int, int> me{m.first, m.second};
        if (is_shared_tri_edge(me)) continue;
        if (std::find(edge_pairs.begin(), edge_pairs.end(), me) != edge_pairs.end())
            fail(ErrorCode::invalid_argument, "parts overlap beyond the shared triangle");
        edge_pairs.push_back(me);
    }

    // Crossings from both parts.
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> crossings;
    std::vector<std::vector<std::pair<int, int>>> dummy_specs;
    auto add_crossings = [&](const OneDrawing& d, const std::vector<int>* vmap) {
        int n = d.graph().vertex_count();
        for (int c = 0; c < d.crossing_count(); ++c) {
            auto [e1, e2] = d.crossing_pairs()[static_cast<std::size_t>(c)];
            auto map_edge = [&](std::pair<int, int> e) {
                if (!vmap) return e;
                auto m = std::minmax((*vmap)[static_cast<std::size_t>(e.first)], (*vmap)[static_cast<std::size_t>(e.second)]);
                return std::pair<int, int>{m.first, m.second};
            };
            crossings.push_back({map_edge(d.edge_list()[static_cast<std::size_t>(e1)]),
                                 map_edge(d.edge_list()[static_cast<std::size_t>(e2)])});
            std::vector<std::pair<int, int>> spec;
            for (int dart : d.planarization().rotation(n + c)) {
                int endpoint = d.planarization().dart_target(dart);
                auto ends = dart_edge_info(d, dart).first;
                int other = ends.first == endpoint ? ends.second : ends.first;
                if (vmap) {
                    endpoint = (*vmap)[static_cast<std::size_t>(endpoint)];
                    other = (*vmap)[static_cast<std::size_t>(other)];
                }
                spec.emplace_back(endpoint, other);
            }
            dummy_specs.push_back(std::move(spec));
        }
    };
    add_crossings(a, nullptr);
    add_crossings(b, &bmap);

    int vcount = na + nb - 3;
    std::vector<std::vector<std::pair<std::pair<int, int>, bool>>> vertex_specs(static_cast<std::size_t>(vcount));

    auto spec_of_dart = [&](const OneDrawing& d, int dart, const std::vector<int>* vmap) {
        auto [ends, crossed] = dart_edge_info(d, dart);
        if (vmap) {
            auto m = std::minmax((*vmap)[static_cast<std::size_t>(ends.first)], (*vmap)[static_cast<std::size_t>(ends.second)]);
            ends = {m.first, m.second};
        }
        return std::make_pair(ends, crossed);
    };

    std::vector<char> in_A(static_cast<std::size_t>(na), 0);
    for (int j = 0; j < 3; ++j) in_A[static_cast<std::size_t>(A[static_cast<std::size_t>(j)])] = 1;

    for (int v = 0; v < na; ++v) {
        if (in_A[static_cast<std::size_t>(v)]) continue;
        for (int dart : rotation_darts(a, v)) vertex_specs[static_cast<std::size_t>(v)].push_back(spec_of_dart(a, dart, nullptr));
    }
    for (int v = 0; v < nb; ++v) {
        int mapped = bmap[static_cast<std::size_t>(v)];
        if (mapped < na) continue;
        for (int dart : rotation_darts(b, v)) vertex_specs[static_cast<std::size_t>(mapped)].push_back(spec_of_dart(b, dart, &bmap));
    }

    // Shared vertices: splice b's material into the face corner of a.
    for (int j = 0; j < 3; ++j) {
        int x = A[static_cast<std::size_t>(j)];
        int aprev = A[static_cast<std::size_t>((j + 2) % 3)], anext = A[static_cast<std::size_t>((j + 1) % 3)];
        int m = ((rot - j) % 3 + 3) % 3;
        int y = B[static_cast<std::size_t>(m)];
        int bprev = B[static_cast<std::size_t>((m + 2) % 3)], bnext = B[static_cast<std::size_t>((m + 1) % 3)];

        const auto& rota = a.planarization().rotation(x);
        int d_prev = find_dart_to(a, x, aprev);
        auto it = std::find(rota.begin(), rota.end(), d_prev);
        std::size_t pos = static_cast<std::size_t>(it - rota.begin());

        // b's darts at y strictly between (y -> bnext) and (y -> bprev)
        const auto& rotb = b.planarization().rotation(y);
        int d_bnext = find_dart_to(b, y, bnext), d_bprev = find_dart_to(b, y, bprev);
        std::vector<int> extras;
        std::size_t start = static_cast<std::size_t>(std::find(rotb.begin(), rotb.end(), d_bnext) - rotb.begin());
        for (std::size_t i = (start + 1) % rotb.size(); rotb[i] != d_bprev; i = (i + 1) % rotb.size())
            extras.push_back(rotb[i]);

        auto& spec = vertex_specs[static_cast<std::size_t>(x)];
        for (std::size_t i = 0; i < rota.size(); ++i) {
            std::size_t idx = (pos + i) % rota.size();
            spec.push_back(spec_of_dart(a, rota[idx], nullptr));
            if (i == 0)
                for (int ed : extras) spec.push_back(spec_of_dart(b, ed, &bmap));
        }
    }

    return assemble_combined(vcount, edge_pairs, vertex_specs, dummy_specs, crossings);
}

namespace {

OneDrawing glue_on_edge_side0(const OneDrawing& a, int u, int v, const OneDrawing& b_in, int bu, int bv,
                              bool reflect, std::vector<int>* vertex_map) {
    OneDrawing b = reflect ? b_in.reflected() : b_in;
    if (a.edge_crossed(a.edge_index(u, v)) || b.edge_crossed(b.edge_index(bu, bv)))
        fail(ErrorCode::invalid_argument, "edge gluing requires uncrossed shared edges");

    int na = a.graph().vertex_count(), nb = b.graph().vertex_count();
    std::vector<int> bmap(static_cast<std::size_t>(nb), -1);
    bmap[static_cast<std::size_t>(bu)] = u;
    bmap[static_cast<std::size_t>(bv)] = v;
    int next = na;
    for (int w = 0; w < nb; ++w)
        if (bmap[static_cast<std::size_t>(w)] < 0) bmap[static_cast<std::size_t>(w)] = next++;
    if (vertex_map) *vertex_map = bmap;

    std::vector<std::pair<int, int>> edge_pairs = a.edge_list();
    for (auto [x, y] : b.edge_list()) {
        auto m = std::minmax(bmap[static_cast<std::size_t>(x)], bmap[static_cast<std::size_t>(y)]);
        std::pair<int, int> me{m.first, m.second};
        auto shared = std::minmax(u, v);
        if (me.first == shared.first && me.second == shared.second) continue;
        if (std::find(edge_pairs.begin(), edge_pairs.end(), me) != edge_pairs.end())
            fail(ErrorCode::invalid_argument, "parts overlap beyond the shared edge");
        edge_pairs.push_back(me);
    }

    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> crossings;
    std::vector<std::vector<std::pair<int, int>>> dummy_specs;
    auto add_crossings = [&](const OneDrawing& d, const std::vector<int>* vmap) {
        int n = d.graph().vertex_count();
        for (int c = 0; c < d.crossing_count(); ++c) {
            auto [e1, e2] = d.crossing_pairs()[static_cast<std::size_t>(c)];
            auto map_edge = [&](std::pair<int, int> e) {
                if (!vmap) return e;
                auto m = std::minmax((*vmap)[static_cast<std::size_t>(e.first)], (*vmap)[static_cast<std::size_t>(e.second)]);
                return std::pair<int, int>{m.first, m.second};
            };
            crossings.push_back({map_edge(d.edge_list()[static_cast<std::size_t>(e1)]),
                                 map_edge(d.edge_list()[static_cast<std::size_t>(e2)])});
            std::vector<std::pair<int, int>> spec;
            for (int dart : d.planarization().rotation(n + c)) {
                int endpoint = d.planarization().dart_target(dart);
                auto ends = dart_edge_info(d, dart).first;
                int other = ends.first == endpoint ? ends.second : ends.first;
                if (vmap) {
                    endpoint = (*vmap)[static_cast<std::size_t>(endpoint)];
                    other = (*vmap)[static_cast<std::size_t>(other)];
                }
                spec.emplace_back(endpoint, other);
            }
            dummy_specs.push_back(std::move(spec));
        }
    };
    add_crossings(a, nullptr);
    add_crossings(b, &bmap);

    int vcount = na + nb - 2;
    std::vector<std::vector<std::pair<std::pair<int, int>, bool>>> vertex_specs(static_cast<std::size_t>(vcount));
    auto spec_of_dart = [&](const OneDrawing& d, int dart, const std::vector<int>* vmap) {
        auto [ends, crossed] = dart_edge_info(d, dart);
        if (vmap) {
            auto m = std::minmax((*vmap)[static_cast<std::size_t>(ends.first)], (*vmap)[static_cast<std::size_t>(ends.second)]);
            ends = {m.first, m.second};
        }
        return std::make_pair(ends, crossed);
    };

    for (int w = 0; w < na; ++w) {
        if (w == u || w == v) continue;
        for (int dart : a.planarization().rotation(w)) vertex_specs[static_cast<std::size_t>(w)].push_back(spec_of_dart(a, dart, nullptr));
    }
    for (int w = 0; w < nb; ++w) {
        int mapped = bmap[static_cast<std::size_t>(w)];
        if (mapped == u || mapped == v || w == bu || w == bv) continue;
        for (int dart : b.planarization().rotation(w)) vertex_specs[static_cast<std::size_t>(mapped)].push_back(spec_of_dart(b, dart, &bmap));
    }

    // b's material lands in the face of a containing the dart u->v. Corner at
    // u ends with (u->v); corner at v starts with (v->u).
    auto arc_after = [&](const OneDrawing& d, int y, int dart_skip) {
        const auto& rot = d.planarization().rotation(y);
        std::size_t start = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), dart_skip) - rot.begin());
        std::vector<int> out;
        for (std::size_t i = (start + 1) % rot.size(); rot[i] != dart_skip; i = (i + 1) % rot.size())
            out.push_back(rot[i]);
        return out;
    };

    {
        int d_uv = find_dart_to(a, u, v);
        auto extras = arc_after(b, bu, find_dart_to(b, bu, bv));
        const auto& rota = a.planarization().rotation(u);
        std::size_t pos = static_cast<std::size_t>(std::find(rota.begin(), rota.end(), d_uv) - rota.begin());
        auto& spec = vertex_specs[static_cast<std::size_t>(u)];
        for (int ed : extras) spec.push_back(spec_of_dart(b, ed, &bmap));
        for (std::size_t i = 0; i < rota.size(); ++i)
            spec.push_back(spec_of_dart(a, rota[(pos + i) % rota.size()], nullptr));
    }
    {
        int d_vu = find_dart_to(a, v, u);
        auto extras = arc_after(b, bv, find_dart_to(b, bv, bu));
        const auto& rota = a.planarization().rotation(v);
        std::size_t pos = static_cast<std::size_t>(std::find(rota.begin(), rota.end(), d_vu) - rota.begin());
        auto& spec = vertex_specs[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < rota.size(); ++i) {
            spec.push_back(spec_of_dart(a, rota[(pos + i) % rota.size()], nullptr));
            if (i == 0)
                for (int ed : extras) spec.push_back(spec_of_dart(b, ed, &bmap));
        }
    }

    return assemble_combined(vcount, edge_pairs, vertex_specs, dummy_specs, crossings);
}

} // namespace

OneDrawing glue_on_edge(const OneDrawing& a, int u, int v, int side, const OneDrawing& b, int bu, int bv,
                        bool reflect, std::vector<int>* vertex_map) {
    if (side == 0) return glue_on_edge_side0(a, u, v, b, bu, bv, reflect, vertex_map);
    return glue_on_edge_side0(a.reflected(), u, v, b, bu, bv, !reflect, vertex_map).reflected();
}

} // namespace onep
