#pragma once

#include <memory>
#include <string>
#include <vector>

namespace planarlam {

// Motzkin tree underlying a lambda term: V-leaves, binary A-nodes, unary
// L-nodes. Graded by degree = leaf count - L-node count.
class Skeleton {
public:
    enum class Kind { Leaf, App, Lam };
    using Ptr = std::shared_ptr<const Skeleton>;

    static Ptr leaf();
    static Ptr app(Ptr fun, Ptr arg);
    static Ptr lam(Ptr body);  // throws if body has degree 0

    Kind kind() const { return kind_; }
    const Ptr& fun() const { return left_; }
    const Ptr& arg() const { return right_; }
    const Ptr& body() const { return left_; }

    int degree() const { return degree_; }
    int leaf_count() const { return leaves_; }

private:
    Skeleton(Kind k, Ptr a, Ptr b, int degree, int leaves)
        : kind_(k), left_(std::move(a)), right_(std::move(b)),
          degree_(degree), leaves_(leaves) {}

    Kind kind_;
    Ptr left_, right_;
    int degree_;
    int leaves_;
};

// Nameless term tree. Var carries a binder-distance index: indices below the
// number of enclosing lambdas are bound, the remainder select a context slot.
class Term {
public:
    enum class Kind { Var, App, Lam };
    using Ptr = std::shared_ptr<const Term>;

    static Ptr var(int index);
    static Ptr app(Ptr fun, Ptr arg);
    static Ptr lam(Ptr body);

    Kind kind() const { return kind_; }
    int index() const { return index_; }
    const Ptr& fun() const { return left_; }
    const Ptr& arg() const { return right_; }
    const Ptr& body() const { return left_; }

    int leaf_count() const { return leaves_; }

private:
    Term(Kind k, int index, Ptr a, Ptr b, int leaves)
        : kind_(k), index_(index), left_(std::move(a)), right_(std::move(b)),
          leaves_(leaves) {}

    Kind kind_;
    int index_;
    Ptr left_, right_;
    int leaves_;
};

bool term_equal(const Term::Ptr& a, const Term::Ptr& b);

// Total order used for canonical enumeration output: Var < App < Lam,
// then recursively by components.
int term_compare(const Term::Ptr& a, const Term::Ptr& b);

// A linear lambda term: nameless body plus display names for its free
// variables, listed in consumption order (first name = first leaf consumed).
struct LinearTerm {
    Term::Ptr term;
    std::vector<std::string> context;

    int degree() const { return static_cast<int>(context.size()); }
};

// Terms are compared up to renaming: nameless bodies and context lengths.
bool alpha_equal(const LinearTerm& a, const LinearTerm& b);

// Every bound variable and every context slot referenced exactly once.
bool is_linear(const LinearTerm& t);

Skeleton::Ptr skeleton_of(const Term::Ptr& t);
Skeleton::Ptr skeleton_of(const LinearTerm& t);

// The unique planar decoration of a skeleton. Context names follow the
// stack convention: degree 1 gets [x], higher degrees [x<i>,...,x1].
LinearTerm decorate_planar(const Skeleton::Ptr& s);

// Alternate decoration with applications traversed right to left.
LinearTerm decorate_rl(const Skeleton::Ptr& s);

// True iff t coincides with the planar decoration of its own skeleton.
bool is_planar(const LinearTerm& t);

// Deterministic display names: x, y, z, w, u, v, x1, x2, ... skipping any
// name in `taken`.
std::string fresh_name(const std::vector<std::string>& taken);

}  // namespace planarlam
