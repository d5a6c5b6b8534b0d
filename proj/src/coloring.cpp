#include "planarlam/coloring.hpp"

#include <stdexcept>

namespace planarlam {

Coloring::Ptr Coloring::var_rule() {
    return Ptr(new Coloring(Rule::Var, nullptr, nullptr, 0, 1));
}

Coloring::Ptr Coloring::app_rule(Ptr neutral_fun, Ptr normal_arg) {
    if (!neutral_fun || neutral_fun->kind() != ColorKind::Neutral)
        throw std::invalid_argument("app_rule: function premise must be neutral");
    if (!normal_arg || normal_arg->kind() != ColorKind::Normal)
        throw std::invalid_argument("app_rule: argument premise must be normal");
    int sz = neutral_fun->size_ + normal_arg->size_;
    int dg = neutral_fun->degree_ + normal_arg->degree_;
    return Ptr(new Coloring(Rule::App, std::move(neutral_fun), std::move(normal_arg), sz, dg));
}

Coloring::Ptr Coloring::coerce_rule(Ptr neutral) {
    if (!neutral || neutral->kind() != ColorKind::Neutral)
        throw std::invalid_argument("coerce_rule: premise must be neutral");
    int sz = neutral->size_ + 1;
    int dg = neutral->degree_;
    return Ptr(new Coloring(Rule::Coerce, std::move(neutral), nullptr, sz, dg));
}

Coloring::Ptr Coloring::lam_rule(Ptr normal_body) {
    if (!normal_body || normal_body->kind() != ColorKind::Normal)
        throw std::invalid_argument("lam_rule: premise must be normal");
    if (normal_body->degree_ == 0)
        throw std::invalid_argument("lam_rule: premise has degree 0");
    int sz = normal_body->size_;
    int dg = normal_body->degree_ - 1;
    return Ptr(new Coloring(Rule::Lam, std::move(normal_body), nullptr, sz, dg));
}

namespace {

Coloring::Ptr color_neutral(const Term::Ptr& t);
Coloring::Ptr color_normal(const Term::Ptr& t);

Coloring::Ptr color_neutral(const Term::Ptr& t) {
    switch (t->kind()) {
    case Term::Kind::Var:
        return Coloring::var_rule();
    case Term::Kind::App: {
        Coloring::Ptr f = color_neutral(t->fun());
        if (!f) return nullptr;
        Coloring::Ptr a = color_normal(t->arg());
        if (!a) return nullptr;
        return Coloring::app_rule(std::move(f), std::move(a));
    }
    case Term::Kind::Lam:
        return nullptr;
    }
    return nullptr;
}

Coloring::Ptr color_normal(const Term::Ptr& t) {
    if (t->kind() == Term::Kind::Lam) {
        Coloring::Ptr b = color_normal(t->body());
        if (!b || b->degree() == 0) return nullptr;
        return Coloring::lam_rule(std::move(b));
    }
    Coloring::Ptr n = color_neutral(t);
    if (!n) return nullptr;
    return Coloring::coerce_rule(std::move(n));
}

}  // namespace

std::optional<Coloring::Ptr> color_term(const Term::Ptr& t, ColorKind kind) {
    Coloring::Ptr c =
        kind == ColorKind::Neutral ? color_neutral(t) : color_normal(t);
    if (!c) return std::nullopt;
    return c;
}

std::optional<Coloring::Ptr> color(const LinearTerm& t, ColorKind kind) {
    auto c = color_term(t.term, kind);
    if (c && (*c)->degree() != t.degree()) return std::nullopt;
    return c;
}

std::string head_variable(const LinearTerm& t, const Coloring::Ptr& c) {
    if (!c || c->kind() != ColorKind::Neutral)
        throw std::invalid_argument("head_variable: needs a neutral coloring");
    const Term* cur = t.term.get();
    const Coloring* d = c.get();
    while (d->rule() == Coloring::Rule::App) {
        cur = cur->fun().get();
        d = d->left().get();
    }
    if (d->rule() != Coloring::Rule::Var || cur->kind() != Term::Kind::Var)
        throw std::invalid_argument("head_variable: coloring does not match term");
    // the head spine passes through no lambdas, so the index is a context slot
    int idx = cur->index();
    if (idx < 0 || idx >= t.degree())
        throw std::invalid_argument("head_variable: head is not a free variable");
    return t.context[idx];
}

LinearTerm neutral_body(const LinearTerm& t, const Coloring::Ptr& c) {
    if (!c || c->kind() != ColorKind::Normal)
        throw std::invalid_argument("neutral_body: needs a normal coloring");
    Term::Ptr cur = t.term;
    const Coloring* d = c.get();
    std::vector<std::string> names;  // binders stripped, outermost first
    std::vector<std::string> taken = t.context;
    while (d->rule() == Coloring::Rule::Lam) {
        if (cur->kind() != Term::Kind::Lam)
            throw std::invalid_argument("neutral_body: coloring does not match term");
        std::string n = fresh_name(taken);
        taken.push_back(n);
        names.push_back(n);
        cur = cur->body();
        d = d->left().get();
    }
    if (d->rule() != Coloring::Rule::Coerce)
        throw std::invalid_argument("neutral_body: coloring does not match term");
    std::vector<std::string> context(names.rbegin(), names.rend());
    context.insert(context.end(), t.context.begin(), t.context.end());
    return LinearTerm{std::move(cur), std::move(context)};
}

Skeleton::Ptr skeleton_of(const Coloring::Ptr& c) {
    switch (c->rule()) {
    case Coloring::Rule::Var: return Skeleton::leaf();
    case Coloring::Rule::App:
        return Skeleton::app(skeleton_of(c->left()), skeleton_of(c->right()));
    case Coloring::Rule::Coerce: return skeleton_of(c->left());
    case Coloring::Rule::Lam: return Skeleton::lam(skeleton_of(c->left()));
    }
    throw std::logic_error("skeleton_of: bad rule");
}

}  // namespace planarlam
