#include "planarlam/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace planarlam {

Skeleton::Ptr Skeleton::leaf() {
    return Ptr(new Skeleton(Kind::Leaf, nullptr, nullptr, 1, 1));
}

Skeleton::Ptr Skeleton::app(Ptr fun, Ptr arg) {
    if (!fun || !arg) throw std::invalid_argument("Skeleton::app: null child");
    int d = fun->degree_ + arg->degree_;
    int l = fun->leaves_ + arg->leaves_;
    return Ptr(new Skeleton(Kind::App, std::move(fun), std::move(arg), d, l));
}

Skeleton::Ptr Skeleton::lam(Ptr body) {
    if (!body) throw std::invalid_argument("Skeleton::lam: null body");
    if (body->degree_ == 0)
        throw std::invalid_argument("Skeleton::lam: body has degree 0");
    int d = body->degree_ - 1;
    int l = body->leaves_;
    return Ptr(new Skeleton(Kind::Lam, std::move(body), nullptr, d, l));
}

Term::Ptr Term::var(int index) {
    if (index < 0) throw std::invalid_argument("Term::var: negative index");
    return Ptr(new Term(Kind::Var, index, nullptr, nullptr, 1));
}

Term::Ptr Term::app(Ptr fun, Ptr arg) {
    if (!fun || !arg) throw std::invalid_argument("Term::app: null child");
    int l = fun->leaves_ + arg->leaves_;
    return Ptr(new Term(Kind::App, -1, std::move(fun), std::move(arg), l));
}

Term::Ptr Term::lam(Ptr body) {
    if (!body) throw std::invalid_argument("Term::lam: null body");
    int l = body->leaves_;
    return Ptr(new Term(Kind::Lam, -1, std::move(body), nullptr, l));
}

bool term_equal(const Term::Ptr& a, const Term::Ptr& b) {
    return term_compare(a, b) == 0;
}

int term_compare(const Term::Ptr& a, const Term::Ptr& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind() != b->kind())
        return static_cast<int>(a->kind()) < static_cast<int>(b->kind()) ? -1 : 1;
    switch (a->kind()) {
    case Term::Kind::Var:
        if (a->index() != b->index()) return a->index() < b->index() ? -1 : 1;
        return 0;
    case Term::Kind::App: {
        int c = term_compare(a->fun(), b->fun());
        if (c != 0) return c;
        return term_compare(a->arg(), b->arg());
    }
    case Term::Kind::Lam:
        return term_compare(a->body(), b->body());
    }
    return 0;
}

bool alpha_equal(const LinearTerm& a, const LinearTerm& b) {
    return a.context.size() == b.context.size() && term_equal(a.term, b.term);
}

namespace {

void count_uses(const Term::Ptr& t, std::vector<int>& enclosing,
                std::vector<int>& binder_uses, std::vector<int>& free_uses,
                bool& out_of_range) {
    switch (t->kind()) {
    case Term::Kind::Var: {
        int idx = t->index();
        int depth = static_cast<int>(enclosing.size());
        if (idx < depth) {
            binder_uses[enclosing[depth - 1 - idx]] += 1;
        } else if (idx - depth < static_cast<int>(free_uses.size())) {
            free_uses[idx - depth] += 1;
        } else {
            out_of_range = true;
        }
        return;
    }
    case Term::Kind::App:
        count_uses(t->fun(), enclosing, binder_uses, free_uses, out_of_range);
        count_uses(t->arg(), enclosing, binder_uses, free_uses, out_of_range);
        return;
    case Term::Kind::Lam:
        binder_uses.push_back(0);
        enclosing.push_back(static_cast<int>(binder_uses.size()) - 1);
        count_uses(t->body(), enclosing, binder_uses, free_uses, out_of_range);
        enclosing.pop_back();
        return;
    }
}

}  // namespace

bool is_linear(const LinearTerm& t) {
    std::vector<int> enclosing;
    std::vector<int> binder_uses;
    std::vector<int> free_uses(t.context.size(), 0);
    bool out_of_range = false;
    count_uses(t.term, enclosing, binder_uses, free_uses, out_of_range);
    if (out_of_range) return false;
    auto once = [](int n) { return n == 1; };
    return std::all_of(binder_uses.begin(), binder_uses.end(), once) &&
           std::all_of(free_uses.begin(), free_uses.end(), once);
}

Skeleton::Ptr skeleton_of(const Term::Ptr& t) {
    switch (t->kind()) {
    case Term::Kind::Var: return Skeleton::leaf();
    case Term::Kind::App: return Skeleton::app(skeleton_of(t->fun()), skeleton_of(t->arg()));
    case Term::Kind::Lam: return Skeleton::lam(skeleton_of(t->body()));
    }
    throw std::logic_error("skeleton_of: bad kind");
}

Skeleton::Ptr skeleton_of(const LinearTerm& t) { return skeleton_of(t.term); }

namespace {

// Fig-1-style stack traversal. Slot ids 0..degree-1 stand for context
// positions; larger ids are fresh binders, stamped with the lambda depth at
// which they were introduced.
struct Decorator {
    bool right_to_left;
    int degree;
    std::vector<int> stack;           // back = top
    std::vector<int> binder_depth;    // binder id - degree -> depth at creation
    int next_binder = 0;

    Term::Ptr walk(const Skeleton::Ptr& s, int depth) {
        switch (s->kind()) {
        case Skeleton::Kind::Leaf: {
            int id = stack.back();
            stack.pop_back();
            if (id < degree) return Term::var(depth + id);
            return Term::var(depth - 1 - binder_depth[id - degree]);
        }
        case Skeleton::Kind::App: {
            if (right_to_left) {
                Term::Ptr a = walk(s->arg(), depth);
                Term::Ptr f = walk(s->fun(), depth);
                return Term::app(std::move(f), std::move(a));
            }
            Term::Ptr f = walk(s->fun(), depth);
            Term::Ptr a = walk(s->arg(), depth);
            return Term::app(std::move(f), std::move(a));
        }
        case Skeleton::Kind::Lam: {
            int id = degree + next_binder++;
            binder_depth.push_back(depth);
            stack.push_back(id);
            return Term::lam(walk(s->body(), depth + 1));
        }
        }
        throw std::logic_error("decorate: bad kind");
    }
};

LinearTerm decorate(const Skeleton::Ptr& s, bool right_to_left) {
    int i = s->degree();
    Decorator d;
    d.right_to_left = right_to_left;
    d.degree = i;
    // stack top must be context slot 0
    for (int j = i - 1; j >= 0; --j) d.stack.push_back(j);
    Term::Ptr body = d.walk(s, 0);
    std::vector<std::string> names;
    if (i == 1) {
        names.push_back("x");
    } else {
        for (int j = i; j >= 1; --j) names.push_back("x" + std::to_string(j));
    }
    return LinearTerm{std::move(body), std::move(names)};
}

}  // namespace

LinearTerm decorate_planar(const Skeleton::Ptr& s) { return decorate(s, false); }

LinearTerm decorate_rl(const Skeleton::Ptr& s) { return decorate(s, true); }

bool is_planar(const LinearTerm& t) {
    Skeleton::Ptr s = skeleton_of(t);
    if (s->degree() != t.degree()) return false;
    return term_equal(decorate_planar(s).term, t.term);
}

std::string fresh_name(const std::vector<std::string>& taken) {
    static const char* base[] = {"x", "y", "z", "w", "u", "v"};
    auto unused = [&taken](const std::string& n) {
        return std::find(taken.begin(), taken.end(), n) == taken.end();
    };
    for (const char* n : base)
        if (unused(n)) return n;
    for (int k = 1;; ++k) {
        std::string n = "x" + std::to_string(k);
        if (unused(n)) return n;
    }
}

}  // namespace planarlam
