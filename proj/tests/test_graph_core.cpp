#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "oneplanar/canonical.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/graph6.hpp"
#include "oracles.hpp"

using namespace onep;

TEST_CASE("named constructors") {
    CHECK(complete(6).edge_count() == 15);
    CHECK(complete(0).vertex_count() == 0);
    CHECK(cycle(4).edge_count() == 4);
    CHECK(path(1).edge_count() == 0);

    Graph k2222 = complete_multipartite({2, 2, 2, 2});
    CHECK(k2222.vertex_count() == 8);
    CHECK(k2222.edge_count() == 24);
    for (int v = 0; v < 8; ++v) CHECK(k2222.degree(v) == 6);

    CHECK_THROWS_AS(cycle(2), Error);
    CHECK_THROWS_AS(complete(65), Error);
}

TEST_CASE("graph operations") {
    Graph k3c4 = join(complete(3), cycle(4));
    CHECK(k3c4.vertex_count() == 7);
    CHECK(k3c4.edge_count() == 19);

    Graph k2p6 = join(complete(2), complement(path(6)));
    CHECK(k2p6.vertex_count() == 8);
    CHECK(k2p6.edge_count() == 23);

    Graph strip3 = strong_product(complete(3), path(3));
    CHECK(strip3.vertex_count() == 9);
    CHECK(strip3.edge_count() == 27);

    CHECK(disjoint_union(complete(3), complete(4)).edge_count() == 9);
    CHECK_THROWS_AS(strong_product(complete(9), path(9)), Error);
}

TEST_CASE("clique counting against the subset oracle") {
    Graph k2222 = complete_multipartite({2, 2, 2, 2});
    CHECK(count_cliques_size(k2222, 3) == 32);
    CHECK(count_cliques_size(k2222, 4) == 16);
    CHECK(count_all_cliques(k2222) == 81);

    Graph k3c4 = join(complete(3), cycle(4));
    CHECK(count_cliques_size(k3c4, 3) == 25);
    CHECK(oracle::clique_count_subsets(k3c4, 3) == 25);

    CHECK(count_all_cliques(complete(3)) == 8);
    CHECK(count_all_cliques(complete(0)) == 1);
    for (int n = 0; n <= 6; ++n)
        CHECK(count_all_cliques(complete(n)) == (std::uint64_t{1} << n));

    Graph strip4 = strong_product(complete(3), path(4));
    CHECK(count_cliques_size(strip4, 6) == 3);

    for (std::uint32_t seed = 1; seed <= 12; ++seed) {
        Graph g = oracle::random_graph(9, 0.4, seed);
        for (int t = 0; t <= 9; ++t) CHECK(count_cliques_size(g, t) == oracle::clique_count_subsets(g, t));
        CHECK(count_all_cliques(g) == oracle::all_cliques_subsets(g));
    }
}

TEST_CASE("clique count is monotone under edge addition") {
    for (std::uint32_t seed = 1; seed <= 8; ++seed) {
        Graph g = oracle::random_graph(8, 0.3, seed);
        std::uint64_t base = count_all_cliques(g);
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) {
                if (g.has_edge(u, v)) continue;
                Graph h = g;
                h.add_edge(u, v);
                CHECK(count_all_cliques(h) > base);
            }
    }
}

TEST_CASE("subgraph counting") {
    Graph c5k3 = join(cycle(5), complete(3));
    CHECK(count_subgraphs_iso(c5k3, complete(3)) == 31);
    CHECK(count_subgraphs_iso(complete(6), complete(3)) == 20);
    CHECK(count_subgraphs_iso(complete_multipartite({2, 2, 2, 2}), complete(4)) == 16);
    CHECK(oracle::subgraph_count_injections(complete_multipartite({2, 2, 2, 2}), complete(4)) == 16);

    // against the injection oracle on mixed patterns
    Graph patterns[] = {path(3), cycle(4), complete(4), cycle(5)};
    for (std::uint32_t seed = 1; seed <= 6; ++seed) {
        Graph g = oracle::random_graph(8, 0.45, seed);
        for (const Graph& h : patterns)
            CHECK(count_subgraphs_iso(g, h) == oracle::subgraph_count_injections(g, h));
    }

    // N(g, K_t) agrees with the clique counter
    for (std::uint32_t seed = 1; seed <= 6; ++seed) {
        Graph g = oracle::random_graph(9, 0.5, seed);
        for (int t = 1; t <= 6; ++t) CHECK(count_subgraphs_iso(g, complete(t)) == count_cliques_size(g, t));
    }

    CHECK_THROWS_AS(count_subgraphs_iso(complete(9), complete(9)), Error);
}

TEST_CASE("connectivity and separators") {
    CHECK(is_k_connected(complete(6), 5));
    CHECK(is_k_connected(complete_multipartite({2, 2, 2, 2}), 4));
    CHECK_FALSE(is_k_connected(path(5), 2));
    CHECK_FALSE(is_k_connected(complete(3), 3)); // needs k+1 vertices

    // cube = Q_3
    Graph cube = strong_product(complete(1), path(1)); // placeholder, rebuilt below
    cube = Graph(8);
    int cube_edges[12][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                             {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    for (auto& e : cube_edges) cube.add_edge(e[0], e[1]);

    auto seps = nontrivial_separators(cube, 3);
    CHECK(seps.size() == 8);
    std::set<std::uint64_t> expected;
    for (int v = 0; v < 8; ++v) expected.insert(cube.neighbors(v));
    for (auto s : seps) CHECK(expected.count(s.bits) == 1);

    CHECK(nontrivial_separators(complete(6), 3).empty());

    for (std::uint32_t seed = 1; seed <= 10; ++seed) {
        Graph g = oracle::random_graph(8, 0.35, seed);
        for (int size = 1; size <= 4; ++size) {
            auto got = nontrivial_separators(g, size);
            auto want = oracle::separators_subsets(g, size);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].bits == want[i]);
        }
    }
}

TEST_CASE("separating triangles") {
    Graph strip3 = strong_product(complete(3), path(3));
    auto st = separating_triangles(strip3);
    REQUIRE(st.size() == 1);
    CHECK(st[0] == VertexSet::of({1, 4, 7})); // middle layer of K_3 x P_3

    CHECK(separating_triangles(complete(6)).empty());
    CHECK(separating_triangles(complete_multipartite({2, 2, 2, 2})).empty());
}

TEST_CASE("canonical forms and isomorphism") {
    CHECK(is_isomorphic(cycle(4), complete_multipartite({2, 2})));
    CHECK_FALSE(is_isomorphic(join(complete(3), cycle(4)), join(complete(3), complement(complete_multipartite({1, 3})))));

    for (std::uint32_t seed = 1; seed <= 20; ++seed) {
        Graph g = oracle::random_graph(9, 0.5, seed);
        auto perm = oracle::random_permutation(9, seed + 1000);
        CHECK(canonical_form(g) == canonical_form(g.relabeled(perm)));
    }

    // non-isomorphic pairs with equal degree sequences
    Graph c6 = cycle(6);
    Graph two_triangles = disjoint_union(complete(3), complete(3));
    CHECK_FALSE(is_isomorphic(c6, two_triangles));

    CHECK(find_isomorphism(cycle(5), cycle(5)).has_value());
    int iso_count = 0;
    for_each_isomorphism(cycle(5), cycle(5), [&](const std::vector<int>&) {
        ++iso_count;
        return true;
    });
    CHECK(iso_count == 10); // dihedral group of the pentagon
}

TEST_CASE("graph6 round trip") {
    Graph graphs[] = {complete(6), cycle(4), complete_multipartite({2, 2, 2, 2}),
                      strong_product(complete(3), path(5)), Graph(0), Graph(1)};
    for (const Graph& g : graphs) {
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
    for (std::uint32_t seed = 1; seed <= 20; ++seed) {
        Graph g = oracle::random_graph(10, 0.5, seed);
        CHECK(from_graph6(to_graph6(g)) == g);
        CHECK(to_graph6(from_graph6(to_graph6(g))) == to_graph6(g));
    }

    // known encoding: K_4 is "C~"
    CHECK(to_graph6(complete(4)) == "C~");
    CHECK(from_graph6("C~").edge_count() == 6);

    std::istringstream in("C~\n\nC~\n");
    CHECK(read_graph6_stream(in).size() == 2);

    CHECK_THROWS_AS(from_graph6("C"), Error);
}
