#ifndef ONEPLANAR_EMBEDDING_HPP
#define ONEPLANAR_EMBEDDING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oneplanar/error.hpp"

namespace onep {

// Combinatorial embedding of a multigraph: a rotation system. Edge e owns
// darts 2e (leaving ends[e].first) and 2e+1 (leaving ends[e].second).
// Faces are the orbits of d -> rotation-successor of twin(d) at target(d);
// with counterclockwise rotations this traces every face of the drawing.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;
    EmbeddedGraph(int vcount, std::vector<std::pair<int, int>> ends)
        : vcount_(vcount), ends_(std::move(ends)), rotation_(vcount) {}

    int vertex_count() const { return vcount_; }
    int edge_count() const { return static_cast<int>(ends_.size()); }
    const std::vector<std::pair<int, int>>& edge_ends() const { return ends_; }

    int dart_origin(int d) const { return d % 2 == 0 ? ends_[d / 2].first : ends_[d / 2].second; }
    int dart_target(int d) const { return d % 2 == 0 ? ends_[d / 2].second : ends_[d / 2].first; }
    static int twin(int d) { return d ^ 1; }
    static int dart_edge(int d) { return d / 2; }

    std::vector<int>& rotation(int v) { return rotation_[v]; }
    const std::vector<int>& rotation(int v) const { return rotation_[v]; }

    // True iff every dart occurs exactly once in the rotation of its origin.
    bool rotation_complete() const;

    // Dart cycles of all faces.
    std::vector<std::vector<int>> face_cycles() const;

    // V - E + F = 2 on every connected component.
    bool euler_spherical() const;

    int face_count() const { return static_cast<int>(face_cycles().size()); }

    // Face degrees in dart-sides (a bridge traversed twice counts twice).
    std::vector<int> face_degrees() const;

    // Rotation with every cyclic order reversed (mirror image).
    EmbeddedGraph reflected() const;

private:
    int next_in_face(int d) const;

    int vcount_ = 0;
    std::vector<std::pair<int, int>> ends_;
    std::vector<std::vector<int>> rotation_;
};

// Planarity test that emits a rotation system on success, indexed by the
// input edge order. Input must be a simple graph.
std::optional<EmbeddedGraph> planar_embedding(int vcount, const std::vector<std::pair<int, int>>& edges);

bool is_planar(int vcount, const std::vector<std::pair<int, int>>& edges);

} // namespace onep

#endif
