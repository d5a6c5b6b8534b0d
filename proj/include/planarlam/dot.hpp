#pragma once

#include <string>

#include "planarlam/coloring.hpp"
#include "planarlam/rooted_map.hpp"
#include "planarlam/term.hpp"

namespace planarlam {

// String diagram of a colored term as DOT. One node per derivation rule
// occurrence (kinds l, a, s), wires attributed blue (neutral) or red
// (normal) with their orientation as edge direction; context slots and the
// result appear as boundary nodes.
std::string emit_dot_diagram(const LinearTerm& t, const Coloring::Ptr& c);

// The map as a DOT multigraph: one node per vertex, the root dart drawn
// directed and labeled, every other edge undirected.
std::string emit_dot_map(const RootedMap& m);

}  // namespace planarlam
