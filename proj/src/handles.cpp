#include "planarlam/handles.hpp"

#include <stdexcept>

namespace planarlam {

Term::Ptr subterm_at(const Term::Ptr& t, const TermPath& path) {
    Term::Ptr cur = t;
    for (TermStep s : path) {
        switch (s) {
        case TermStep::AppFun:
            if (cur->kind() != Term::Kind::App) throw std::invalid_argument("subterm_at: path mismatch");
            cur = cur->fun();
            break;
        case TermStep::AppArg:
            if (cur->kind() != Term::Kind::App) throw std::invalid_argument("subterm_at: path mismatch");
            cur = cur->arg();
            break;
        case TermStep::LamBody:
            if (cur->kind() != Term::Kind::Lam) throw std::invalid_argument("subterm_at: path mismatch");
            cur = cur->body();
            break;
        }
    }
    return cur;
}

namespace {

Term::Ptr replace_rec(const Term::Ptr& t, const TermPath& path, size_t at,
                      const Term::Ptr& replacement) {
    if (at == path.size()) return replacement;
    switch (path[at]) {
    case TermStep::AppFun:
        if (t->kind() != Term::Kind::App) throw std::invalid_argument("replace_at: path mismatch");
        return Term::app(replace_rec(t->fun(), path, at + 1, replacement), t->arg());
    case TermStep::AppArg:
        if (t->kind() != Term::Kind::App) throw std::invalid_argument("replace_at: path mismatch");
        return Term::app(t->fun(), replace_rec(t->arg(), path, at + 1, replacement));
    case TermStep::LamBody:
        if (t->kind() != Term::Kind::Lam) throw std::invalid_argument("replace_at: path mismatch");
        return Term::lam(replace_rec(t->body(), path, at + 1, replacement));
    }
    throw std::logic_error("replace_at: bad step");
}

void collect_handles(const Term::Ptr& t, const Coloring* c, TermPath& path,
                     std::vector<Handle>& out) {
    switch (c->rule()) {
    case Coloring::Rule::Var:
        if (t->kind() != Term::Kind::Var)
            throw std::invalid_argument("outer_neutral_handles: coloring does not match term");
        out.push_back(Handle{path, t});
        return;
    case Coloring::Rule::App: {
        if (t->kind() != Term::Kind::App)
            throw std::invalid_argument("outer_neutral_handles: coloring does not match term");
        out.push_back(Handle{path, t});
        path.push_back(TermStep::AppArg);
        collect_handles(t->arg(), c->right().get(), path, out);
        path.pop_back();
        if (c->right()->degree() == 0) {
            path.push_back(TermStep::AppFun);
            collect_handles(t->fun(), c->left().get(), path, out);
            path.pop_back();
        }
        return;
    }
    case Coloring::Rule::Coerce:
        collect_handles(t, c->left().get(), path, out);
        return;
    case Coloring::Rule::Lam:
        if (t->kind() != Term::Kind::Lam)
            throw std::invalid_argument("outer_neutral_handles: coloring does not match term");
        path.push_back(TermStep::LamBody);
        collect_handles(t->body(), c->left().get(), path, out);
        path.pop_back();
        return;
    }
}

}  // namespace

Term::Ptr replace_at(const Term::Ptr& t, const TermPath& path, Term::Ptr replacement) {
    return replace_rec(t, path, 0, replacement);
}

std::vector<Handle> outer_neutral_handles(const LinearTerm& t, const Coloring::Ptr& c) {
    if (!c) throw std::invalid_argument("outer_neutral_handles: null coloring");
    std::vector<Handle> out;
    TermPath path;
    collect_handles(t.term, c.get(), path, out);
    return out;
}

namespace {

bool find_free_use(const Term::Ptr& t, int depth, TermPath& path) {
    switch (t->kind()) {
    case Term::Kind::Var:
        return t->index() == depth;
    case Term::Kind::App:
        path.push_back(TermStep::AppFun);
        if (find_free_use(t->fun(), depth, path)) return true;
        path.back() = TermStep::AppArg;
        if (find_free_use(t->arg(), depth, path)) return true;
        path.pop_back();
        return false;
    case Term::Kind::Lam:
        path.push_back(TermStep::LamBody);
        if (find_free_use(t->body(), depth + 1, path)) return true;
        path.pop_back();
        return false;
    }
    return false;
}

}  // namespace

bool find_free_var_use(const Term::Ptr& t, TermPath& out) {
    out.clear();
    return find_free_use(t, 0, out);
}

Trichotomy classify(const LinearTerm& t, const Coloring::Ptr& c) {
    if (t.degree() != 1)
        throw std::invalid_argument("classify: term must have exactly one free variable");
    if (!c || c->kind() != ColorKind::Normal)
        throw std::invalid_argument("classify: needs a normal coloring");
    TermPath path;
    if (!find_free_var_use(t.term, path))
        throw std::invalid_argument("classify: free variable not used (term not linear)");
    if (path.empty())
        return Trichotomy{TrichotomyTag::IdentityTerm, {}, nullptr};
    // linearity rules out Lam as the parent of the unique free use
    TermStep last = path.back();
    path.pop_back();
    Term::Ptr parent = subterm_at(t.term, path);
    if (parent->kind() != Term::Kind::App)
        throw std::invalid_argument("classify: free variable under a binder (term not linear)");
    TrichotomyTag tag = last == TermStep::AppFun ? TrichotomyTag::FunctionOpen
                                                 : TrichotomyTag::ValueOpen;
    return Trichotomy{tag, path, parent};
}

}  // namespace planarlam
