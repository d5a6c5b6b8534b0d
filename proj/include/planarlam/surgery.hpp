#pragma once

#include <utility>

#include "planarlam/handles.hpp"

namespace planarlam {

// Throws std::invalid_argument unless t is normal, planar, and has exactly
// one free variable. Returns the normal coloring.
Coloring::Ptr require_npt(const LinearTerm& t);

// Function-open composition: replace the free variable x of t1 by
// x(\y. t2-body). Sizes add; handle counts add plus one.
LinearTerm compose_fun_open(const LinearTerm& t1, const LinearTerm& t2);

// Exact inverse of compose_fun_open. Rejects terms that are not
// function-open.
std::pair<LinearTerm, LinearTerm> decompose_fun_open(const LinearTerm& t);

// Value-open composition: factor t1 at its k-th outer neutral handle
// (1-based) and apply the focused neutral subterm to a fresh outermost free
// variable. Size grows by one; the result has k+1 handles.
LinearTerm compose_val_open(const LinearTerm& t1, int handle_index);

// Exact inverse of compose_val_open: strips the leading lambda, deletes the
// application of the free variable, and returns the handle index that
// reconstructs t. Rejects terms that are not value-open.
std::pair<LinearTerm, int> decompose_val_open(const LinearTerm& t);

// The raw inverse surgery at an arbitrary neutral focus. Used by
// compose_val_open with an outer handle; at a non-outer focus the result is
// linear but not planar.
LinearTerm graft_free_var(const LinearTerm& t1, const TermPath& focus_path);

}  // namespace planarlam
