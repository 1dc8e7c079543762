#include "oneplanar/embedding.hpp"

#include <algorithm>
#include <numeric>

namespace onep {

bool EmbeddedGraph::rotation_complete() const {
    std::vector<int> seen(2 * ends_.size(), 0);
    for (int v = 0; v < vcount_; ++v)
        for (int d : rotation_[v]) {
            if (d < 0 || d >= 2 * edge_count()) return false;
            if (dart_origin(d) != v) return false;
            if (seen[d]++) return false;
        }
    for (int s : seen)
        if (s != 1) return false;
    return true;
}

int EmbeddedGraph::next_in_face(int d) const {
    int t = twin(d);
    const auto& rot = rotation_[dart_origin(t)];
    auto it = std::find(rot.begin(), rot.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - rot.begin()) + 1;
    return rot[idx % rot.size()];
}

std::vector<std::vector<int>> EmbeddedGraph::face_cycles() const {
    std::vector<char> visited(2 * ends_.size(), 0);
    std::vector<std::vector<int>> faces;
    for (int d0 = 0; d0 < 2 * edge_count(); ++d0) {
        if (visited[d0]) continue;
        std::vector<int> cycle;
        int d = d0;
        do {
            visited[d] = 1;
            cycle.push_back(d);
            d = next_in_face(d);
        } while (d != d0);
        faces.push_back(std::move(cycle));
    }
    return faces;
}

bool EmbeddedGraph::euler_spherical() const {
    if (!rotation_complete()) return false;

    std::vector<int> comp(vcount_, -1);
    int ncomp = 0;
    for (int v = 0; v < vcount_; ++v) {
        if (comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int d : rotation_[u]) {
                int w = dart_target(d);
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }

    std::vector<int> verts(ncomp, 0), edges(ncomp, 0), faces(ncomp, 0);
    for (int v = 0; v < vcount_; ++v) ++verts[comp[v]];
    for (auto [u, w] : ends_) ++edges[comp[u]];
    for (const auto& f : face_cycles()) ++faces[comp[dart_origin(f.front())]];
    for (int c = 0; c < ncomp; ++c) {
        if (edges[c] == 0) continue; // isolated vertex: sphere component is fine
        if (verts[c] - edges[c] + faces[c] != 2) return false;
    }
    return true;
}

std::vector<int> EmbeddedGraph::face_degrees() const {
    std::vector<int> out;
    for (const auto& f : face_cycles()) out.push_back(static_cast<int>(f.size()));
    std::sort(out.begin(), out.end());
    return out;
}

EmbeddedGraph EmbeddedGraph::reflected() const {
    EmbeddedGraph out = *this;
    for (int v = 0; v < vcount_; ++v) std::reverse(out.rotation_[v].begin(), out.rotation_[v].end());
    return out;
}

} // namespace onep
