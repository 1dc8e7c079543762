#ifndef ONEPLANAR_CANONICAL_HPP
#define ONEPLANAR_CANONICAL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oneplanar/graph.hpp"

namespace onep {

// Order-independent certificate of an isomorphism class. Two graphs have equal
// certificates iff they are isomorphic.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

// Exact canonical form by ordered partition refinement with backtracking.
// Ties are broken toward the lexicographically smallest row-major adjacency
// bitstring. Limited to 32 vertices.
CanonicalForm canonical_form(const Graph& g);

// A relabeling that carries g onto its canonical representative (vertex v of g
// becomes position perm[v]).
std::vector<int> canonical_labeling(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

// Some isomorphism g -> h, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

// Invokes fn for every isomorphism g -> h; fn returns false to stop early.
void for_each_isomorphism(const Graph& g, const Graph& h,
                          const std::function<bool(const std::vector<int>&)>& fn);

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint8_t b : c.bytes) h = (h ^ b) * 1099511628211ull;
        return h;
    }
};

} // namespace onep

#endif
