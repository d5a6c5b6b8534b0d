#pragma once

#include <utility>
#include <vector>

#include "planarlam/coloring.hpp"
#include "planarlam/term.hpp"

namespace planarlam {

// Every normal planar term of the given size and degree, with its coloring,
// in canonical term order (Var < App < Lam, then componentwise). Exhaustive
// and duplicate free; the length equals the normal count table entry.
std::vector<std::pair<LinearTerm, Coloring::Ptr>> enumerate_npt(int size, int degree);

// The colorings alone, generated directly from the derivation grammar.
std::vector<Coloring::Ptr> enumerate_colorings(ColorKind kind, int size, int degree);

}  // namespace planarlam
