#include "planarlam/surgery.hpp"

#include <algorithm>
#include <stdexcept>

namespace planarlam {

Coloring::Ptr require_npt(const LinearTerm& t) {
    if (t.degree() != 1)
        throw std::invalid_argument("expected a term with exactly one free variable");
    if (!is_linear(t))
        throw std::invalid_argument("expected a linear term");
    auto c = color(t, ColorKind::Normal);
    if (!c)
        throw std::invalid_argument("expected a normal term (no beta redex)");
    if (!is_planar(t))
        throw std::invalid_argument("expected a planar term");
    return *c;
}

LinearTerm compose_fun_open(const LinearTerm& t1, const LinearTerm& t2) {
    require_npt(t1);
    require_npt(t2);
    // t2 closed under a fresh binder; the free use of x1 becomes x1(\y. t2)
    Term::Ptr closed_arg = Term::lam(t2.term);
    TermPath var_path;
    if (!find_free_var_use(t1.term, var_path))
        throw std::logic_error("compose_fun_open: free variable not found");
    Term::Ptr var_node = subterm_at(t1.term, var_path);
    Term::Ptr replacement = Term::app(var_node, closed_arg);
    return LinearTerm{replace_at(t1.term, var_path, replacement), t1.context};
}

std::pair<LinearTerm, LinearTerm> decompose_fun_open(const LinearTerm& t) {
    Coloring::Ptr c = require_npt(t);
    Trichotomy cls = classify(t, c);
    if (cls.tag != TrichotomyTag::FunctionOpen)
        throw std::invalid_argument("decompose_fun_open: term is not function-open");
    // site is x(arg); planarity forces arg to be a closed abstraction
    Term::Ptr arg = cls.app_node->arg();
    if (arg->kind() != Term::Kind::Lam)
        throw std::invalid_argument("decompose_fun_open: argument of the free variable is not closed");
    Term::Ptr t1_term = replace_at(t.term, cls.site, cls.app_node->fun());
    LinearTerm t1{std::move(t1_term), t.context};
    LinearTerm t2{arg->body(), {fresh_name({})}};
    require_npt(t1);
    require_npt(t2);
    return {std::move(t1), std::move(t2)};
}

LinearTerm graft_free_var(const LinearTerm& t1, const TermPath& focus_path) {
    if (t1.degree() != 1)
        throw std::invalid_argument("graft_free_var: term must have exactly one free variable");
    Term::Ptr focus = subterm_at(t1.term, focus_path);
    int lams_above = static_cast<int>(
        std::count(focus_path.begin(), focus_path.end(), TermStep::LamBody));
    // fresh variable sits under the new outermost lambda plus every binder
    // along the path
    Term::Ptr applied = Term::app(focus, Term::var(1 + lams_above));
    Term::Ptr body = replace_at(t1.term, focus_path, applied);
    return LinearTerm{Term::lam(std::move(body)), {fresh_name({})}};
}

LinearTerm compose_val_open(const LinearTerm& t1, int handle_index) {
    Coloring::Ptr c = require_npt(t1);
    std::vector<Handle> handles = outer_neutral_handles(t1, c);
    if (handle_index < 1 || handle_index > static_cast<int>(handles.size()))
        throw std::invalid_argument("compose_val_open: handle index out of range");
    return graft_free_var(t1, handles[handle_index - 1].path);
}

std::pair<LinearTerm, int> decompose_val_open(const LinearTerm& t) {
    Coloring::Ptr c = require_npt(t);
    Trichotomy cls = classify(t, c);
    if (cls.tag != TrichotomyTag::ValueOpen)
        throw std::invalid_argument("decompose_val_open: term is not value-open");
    if (t.term->kind() != Term::Kind::Lam)
        throw std::logic_error("decompose_val_open: value-open term must start with a lambda");
    // cls.site points at u(x); under the stripped lambda the same path
    // (minus the leading body step) points at u
    if (cls.site.empty() || cls.site.front() != TermStep::LamBody)
        throw std::logic_error("decompose_val_open: unexpected site");
    TermPath inner_site(cls.site.begin() + 1, cls.site.end());
    Term::Ptr stripped = t.term->body();
    Term::Ptr reduced = replace_at(stripped, inner_site, cls.app_node->fun());
    std::string name = fresh_name({});
    LinearTerm t1{std::move(reduced), {std::move(name)}};
    Coloring::Ptr c1 = require_npt(t1);
    std::vector<Handle> handles = outer_neutral_handles(t1, c1);
    for (size_t i = 0; i < handles.size(); ++i) {
        if (handles[i].path == inner_site)
            return {std::move(t1), static_cast<int>(i) + 1};
    }
    throw std::logic_error("decompose_val_open: focus is not an outer handle");
}

}  // namespace planarlam
