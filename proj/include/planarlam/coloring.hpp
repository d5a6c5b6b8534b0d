#pragma once

#include <memory>
#include <optional>
#include <string>

#include "planarlam/term.hpp"

namespace planarlam {

enum class ColorKind { Neutral, Normal };

// Derivation witnessing that a term is neutral (head application shape) or
// normal (redex free). Rules:
//   Var:    x neutral, degree 1
//   App:    neutral(j) applied to normal(k) is neutral(j+k)
//   Coerce: a neutral term is normal; the only rule that contributes to size
//   Lam:    lambda over normal(i+1) is normal(i)
// A term has at most one derivation of each kind.
class Coloring {
public:
    enum class Rule { Var, App, Coerce, Lam };
    using Ptr = std::shared_ptr<const Coloring>;

    static Ptr var_rule();
    static Ptr app_rule(Ptr neutral_fun, Ptr normal_arg);
    static Ptr coerce_rule(Ptr neutral);
    static Ptr lam_rule(Ptr normal_body);

    Rule rule() const { return rule_; }
    ColorKind kind() const {
        return (rule_ == Rule::Var || rule_ == Rule::App) ? ColorKind::Neutral
                                                          : ColorKind::Normal;
    }
    const Ptr& left() const { return left_; }    // App: function premise; Coerce/Lam: sole premise
    const Ptr& right() const { return right_; }  // App: argument premise

    int size() const { return size_; }      // number of Coerce nodes
    int degree() const { return degree_; }  // context slots consumed

private:
    Coloring(Rule r, Ptr a, Ptr b, int size, int degree)
        : rule_(r), left_(std::move(a)), right_(std::move(b)),
          size_(size), degree_(degree) {}

    Rule rule_;
    Ptr left_, right_;
    int size_;
    int degree_;
};

// The unique coloring of the requested kind, or nullopt: a term with a beta
// redex has no Normal coloring, a term that is not a head application has no
// Neutral one.
std::optional<Coloring::Ptr> color(const LinearTerm& t, ColorKind kind);
std::optional<Coloring::Ptr> color_term(const Term::Ptr& t, ColorKind kind);

// Display name of the variable at the head position of a neutral term.
std::string head_variable(const LinearTerm& t, const Coloring::Ptr& c);

// Innermost neutral term under the leading lambdas of a normal term, with
// the stripped binders prepended to the context.
LinearTerm neutral_body(const LinearTerm& t, const Coloring::Ptr& c);

// The skeleton a coloring derives (colorings determine their skeletons).
Skeleton::Ptr skeleton_of(const Coloring::Ptr& c);

}  // namespace planarlam
