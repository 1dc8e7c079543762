#ifndef ONEPLANAR_DRAWING_HPP
#define ONEPLANAR_DRAWING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oneplanar/embedding.hpp"
#include "oneplanar/graph.hpp"

namespace onep {

struct ValidationResult {
    bool ok;
    std::string violation; // names the first violated invariant
};

struct Face {
    std::vector<int> darts;    // planarization darts in trace order
    std::vector<int> boundary; // origin vertex of each dart (planarization ids)
    bool contains_crossing;
};

struct Skeleton {
    Graph graph;            // uncrossed edges on the original vertex set
    EmbeddedGraph embedding; // inherited planar embedding
};

// Combinatorial 1-drawing: a crossing matching on edge pairs together with a
// rotation system of the planarization. Planarization vertices are the n
// original vertices followed by one degree-4 dummy per crossing.
class OneDrawing {
public:
    using EdgePair = std::pair<std::pair<int, int>, std::pair<int, int>>;

    // Rotations are neighbor identifier lists per planarization vertex:
    // 0..n-1 for original vertices, n+i for the dummy of crossing i. When one
    // identifier occurs twice at a vertex, occurrences resolve to the
    // crossing's edges in edge-index order.
    static OneDrawing build(const Graph& g, const std::vector<EdgePair>& crossings,
                            const std::vector<std::vector<int>>& rotations);

    const Graph& graph() const { return graph_; }
    const std::vector<std::pair<int, int>>& edge_list() const { return edges_; }
    const std::vector<std::pair<int, int>>& crossing_pairs() const { return cross_; } // edge indices
    const EmbeddedGraph& planarization() const { return plan_; }

    int original_count() const { return graph_.vertex_count(); }
    int dummy_id(int crossing) const { return graph_.vertex_count() + crossing; }
    bool is_dummy_vertex(int pv) const { return pv >= graph_.vertex_count(); }
    int crossing_count() const { return static_cast<int>(cross_.size()); }

    int edge_index(int u, int v) const;
    bool edge_crossed(int e) const { return !crossings_on_edge_[e].empty(); }
    int planarization_edge_origin(int pe) const { return pedge_orig_[pe]; }

    ValidationResult validate() const;
    bool is_simple() const;

    std::vector<Face> faces() const;
    std::vector<VertexSet> facial_triangles() const;
    Skeleton true_planar_skeleton() const;

    bool is_quasi_rich() const;
    bool is_rich() const;
    std::vector<VertexSet> skeleton_separating_triangles() const;

    OneDrawing reflected() const;

    // Restriction to the subgraph with the given vertices and edges (edges
    // listed by index into edge_list, all endpoints inside `verts`). Vertices
    // are relabeled densely in increasing order.
    OneDrawing restrict(VertexSet verts, const std::vector<int>& edge_indices) const;
    OneDrawing restrict_to_vertices(VertexSet verts) const;
    OneDrawing delete_edge(int u, int v) const;

    std::string to_text() const;
    static OneDrawing from_text(const std::string& text);

    // Low-level constructor from dart specs: crossings as edge-index pairs
    // into the sorted edge list, and per planarization vertex the sequence of
    // (target planarization id, original edge index). Used by the searcher,
    // restriction, and gluing.
    static OneDrawing assemble(Graph g, std::vector<std::pair<int, int>> cross_edge_indices,
                               const std::vector<std::vector<std::pair<int, int>>>& rotations_with_edges);

private:
    OneDrawing() = default;
    void index_edges();

    Graph graph_;
    std::vector<std::pair<int, int>> edges_;          // sorted edge list
    std::vector<std::pair<int, int>> cross_;          // crossings as edge-index pairs
    std::vector<std::vector<int>> crossings_on_edge_; // edge -> crossings, in subdivision order
    EmbeddedGraph plan_;
    std::vector<int> pedge_orig_; // planarization edge -> original edge index
};

// True iff some graph isomorphism carries the crossing matching and rotation
// system of a onto those of b, up to a global reflection.
bool weak_equivalent(const OneDrawing& a, const OneDrawing& b);

// Grammar check for drawing files ("1drawing v1" and "2drawing v1" headers);
// does not enforce drawing invariants.
ValidationResult syntax_check_drawing(const std::string& text);

// Glue drawing b into face `fb` of itself... see stitch in extremal.hpp.
// `rot` selects one of the three boundary alignments; with `reflect` set, b is
// mirrored first. Returns the combined drawing; if vertex_map is non-null it
// receives b's vertex relabeling.
OneDrawing glue_drawings(const OneDrawing& a, const Face& fa, const OneDrawing& b, const Face& fb,
                         int rot, bool reflect, std::vector<int>* vertex_map);

// Glue drawing b onto the uncrossed edge (u, v) of a, inserting b's material
// into the face of a containing dart `side_dart` of that edge. The shared
// edge of b is (bu, bv), uncrossed in b, identified as bu->u, bv->v.
OneDrawing glue_on_edge(const OneDrawing& a, int u, int v, int side,
                        const OneDrawing& b, int bu, int bv, bool reflect, std::vector<int>* vertex_map);

} // namespace onep

#endif
