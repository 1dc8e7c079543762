#ifndef ONEPLANAR_FORMULAS_HPP
#define ONEPLANAR_FORMULAS_HPP

#include <cstdint>

namespace onep {

// n = 3k + s with s in {0,1,2}.
struct NDecomposition {
    int k;
    int s;
};

NDecomposition decompose_n(int n);

// Extremal clique counts for n-vertex 1-planar graphs.
std::uint64_t f2(int n);
std::uint64_t f3(int n);
std::uint64_t ft(int n, int t); // t in {4,5,6}
std::uint64_t f_total(int n);

// Extremal counts for planar graphs.
std::uint64_t planar_max_triangles(int n); // n >= 3
std::uint64_t planar_max_k4(int n);        // n >= 4

// Bounds for 3-connected 1-planar graphs without K_6 subgraphs drawn with c
// crossings (t in {3,4,5}).
std::uint64_t k6free_bound(int n, int c, int t);

// Bounds for 3-connected edge-maximal 1-planar graphs without K_6 subgraphs;
// t in {3,4,5}, or the total over all clique sizes.
enum class K6FreeKind { k3, k4, k5, total };
std::uint64_t k6free_maximal_bound(int n, K6FreeKind kind);

} // namespace onep

#endif
