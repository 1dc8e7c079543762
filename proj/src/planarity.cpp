#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <boost/property_map/property_map.hpp>

#include "oneplanar/embedding.hpp"

namespace onep {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property, boost::property<boost::edge_index_t, int>>;

} // namespace

std::optional<EmbeddedGraph> planar_embedding(int vcount, const std::vector<std::pair<int, int>>& edges) {
    BoostGraph bg(static_cast<std::size_t>(vcount));
    for (std::size_t i = 0; i < edges.size(); ++i)
        boost::add_edge(static_cast<std::size_t>(edges[i].first), static_cast<std::size_t>(edges[i].second),
                        boost::property<boost::edge_index_t, int>(static_cast<int>(i)), bg);

    using Embedding = std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>>;
    Embedding storage(static_cast<std::size_t>(vcount));
    auto emap = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));

    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = emap))
        return std::nullopt;

    EmbeddedGraph out(vcount, edges);
    auto eidx = boost::get(boost::edge_index, bg);
    for (int v = 0; v < vcount; ++v) {
        for (auto ed : storage[static_cast<std::size_t>(v)]) {
            int e = eidx[ed];
            int dart = (edges[static_cast<std::size_t>(e)].first == v) ? 2 * e : 2 * e + 1;
            out.rotation(v).push_back(dart);
        }
    }
    if (!out.euler_spherical()) fail(ErrorCode::invalid_argument, "embedding failed Euler check");
    return out;
}

bool is_planar(int vcount, const std::vector<std::pair<int, int>>& edges) {
    BoostGraph bg(static_cast<std::size_t>(vcount));
    for (std::size_t i = 0; i < edges.size(); ++i)
        boost::add_edge(static_cast<std::size_t>(edges[i].first), static_cast<std::size_t>(edges[i].second),
                        boost::property<boost::edge_index_t, int>(static_cast<int>(i)), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

} // namespace onep
