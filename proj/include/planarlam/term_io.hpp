#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "planarlam/term.hpp"

namespace planarlam {

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

class NonLinearError : public std::runtime_error {
public:
    explicit NonLinearError(const std::string& variable)
        : std::runtime_error("variable '" + variable + "' is not used exactly once"),
          variable_(variable) {}
    const std::string& variable() const { return variable_; }

private:
    std::string variable_;
};

class UnboundVariableError : public std::runtime_error {
public:
    explicit UnboundVariableError(const std::string& variable)
        : std::runtime_error("unbound variable '" + variable + "'"),
          variable_(variable) {}
    const std::string& variable() const { return variable_; }

private:
    std::string variable_;
};

// Grammar:
//   input   := [ '[' NAME (',' NAME)* ']' ] term
//   term    := lam | app
//   lam     := '\' NAME '.' term          (body extends maximally right)
//   app     := atom atom*                 (left-associative)
//   atom    := NAME | '(' term ')'
//   NAME    := [a-z][a-z0-9_]*
// 'λ' is accepted for '\' on input, never emitted.
LinearTerm parse_term(std::string_view text);

// Canonical form: context prefix "[a,b] " when nonempty, "\x. body" for
// abstractions, juxtaposition with minimal parentheses for applications.
// Bound names are regenerated deterministically.
std::string print_term(const LinearTerm& t);

}  // namespace planarlam
