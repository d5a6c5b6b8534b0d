#pragma once

#include <vector>

#include "planarlam/coloring.hpp"
#include "planarlam/term.hpp"

namespace planarlam {

enum class TermStep { AppFun, AppArg, LamBody };
using TermPath = std::vector<TermStep>;

Term::Ptr subterm_at(const Term::Ptr& t, const TermPath& path);

// Rebuild with the subterm at `path` replaced; off-path structure is shared.
Term::Ptr replace_at(const Term::Ptr& t, const TermPath& path, Term::Ptr replacement);

// A factorization of a term at a neutral subterm: the root-to-focus path and
// the focused subterm itself.
struct Handle {
    TermPath path;
    Term::Ptr focus;
};

// Outer neutral handles in counterclockwise boundary order. At an
// application the whole node comes first, then argument-side handles, then
// (only when the argument is closed) function-side handles.
std::vector<Handle> outer_neutral_handles(const LinearTerm& t, const Coloring::Ptr& c);

enum class TrichotomyTag { IdentityTerm, FunctionOpen, ValueOpen };

// How a normal term with one free variable x uses it: the whole term, the
// function of some application x(u), or the argument of some u(x).
struct Trichotomy {
    TrichotomyTag tag;
    TermPath site;       // path to the application using x (empty for identity)
    Term::Ptr app_node;  // the subterm x(u) or u(x) (null for identity)
};

Trichotomy classify(const LinearTerm& t, const Coloring::Ptr& c);

// Path to the unique use of context slot 0 in a term with one free variable;
// false if the slot is never referenced.
bool find_free_var_use(const Term::Ptr& t, TermPath& out);

}  // namespace planarlam
