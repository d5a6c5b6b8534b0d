#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planarlam/rooted_map.hpp"
#include "planarlam/surgery.hpp"

namespace planarlam {

// Recursion tree of a full decomposition, shared by both sides of the
// correspondence: a map is a vertex / isthmic / non-isthmic root exactly
// when its term is the identity / function-open / value-open. Replaying the
// trace reconstructs the original object on either side. The k index is
// stored map-side; the term replay applies the +1 offset, which lives only
// here.
struct DecompTrace {
    enum class Case { Vertex, Isthmic, NonIsthmic };
    struct Node {
        Case tag = Case::Vertex;
        int k = 0;       // non-isthmic backward-walk length (map indexing)
        int left = -1;   // child slots; children follow their parent
        int right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;

    LinearTerm replay_term() const;
    RootedMap replay_map() const;
    std::string to_string() const;
};

// Explicit-stack decompositions; depth is bounded by the object size but
// never consumes call stack.
DecompTrace decompose_map(const RootedMap& m);
DecompTrace decompose_term(const LinearTerm& t);

// The size-preserving correspondence: a map with n edges and outer face
// degree d maps to a term of size n+1 with d+1 outer neutral handles.
std::pair<LinearTerm, Coloring::Ptr> map_to_term(const RootedMap& m);
RootedMap term_to_map(const LinearTerm& t, const Coloring::Ptr& c);

struct BijectionReport {
    bool ok = true;
    int terms_checked = 0;
    int maps_checked = 0;
    std::vector<std::string> failures;
};

// Exhaustive roundtrip, count, and degree-law verification over every term
// of size <= max_size and every map with fewer edges.
BijectionReport verify_bijection(int max_size);

}  // namespace planarlam
