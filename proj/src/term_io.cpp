#include "planarlam/term_io.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace planarlam {

namespace {

struct Token {
    enum class Kind { LBracket, RBracket, Comma, LParen, RParen, Lambda, Dot, Name, End };
    Kind kind;
    std::string text;
    size_t position;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        size_t at = pos_;
        if (pos_ >= src_.size()) return {Token::Kind::End, "", at};
        char c = src_[pos_];
        switch (c) {
        case '[': ++pos_; return {Token::Kind::LBracket, "[", at};
        case ']': ++pos_; return {Token::Kind::RBracket, "]", at};
        case ',': ++pos_; return {Token::Kind::Comma, ",", at};
        case '(': ++pos_; return {Token::Kind::LParen, "(", at};
        case ')': ++pos_; return {Token::Kind::RParen, ")", at};
        case '\\': ++pos_; return {Token::Kind::Lambda, "\\", at};
        case '.': ++pos_; return {Token::Kind::Dot, ".", at};
        default: break;
        }
        // UTF-8 lambda
        if (static_cast<unsigned char>(c) == 0xce && pos_ + 1 < src_.size() &&
            static_cast<unsigned char>(src_[pos_ + 1]) == 0xbb) {
            pos_ += 2;
            return {Token::Kind::Lambda, "\\", at};
        }
        if (c >= 'a' && c <= 'z') {
            size_t start = pos_;
            ++pos_;
            while (pos_ < src_.size()) {
                char d = src_[pos_];
                if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_') ++pos_;
                else break;
            }
            return {Token::Kind::Name, std::string(src_.substr(start, pos_ - start)), at};
        }
        throw SyntaxError("unexpected character", at);
    }

private:
    std::string_view src_;
    size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    LinearTerm parse() {
        std::vector<std::string> context;
        if (cur_.kind == Token::Kind::LBracket) {
            advance();
            if (cur_.kind == Token::Kind::Name) {
                context.push_back(cur_.text);
                advance();
                while (cur_.kind == Token::Kind::Comma) {
                    advance();
                    expect(Token::Kind::Name, "expected a variable name");
                    context.push_back(cur_.text);
                    advance();
                }
            }
            expect(Token::Kind::RBracket, "expected ']'");
            advance();
        }
        for (size_t i = 0; i < context.size(); ++i)
            for (size_t j = i + 1; j < context.size(); ++j)
                if (context[i] == context[j]) throw NonLinearError(context[i]);
        context_ = context;
        Term::Ptr body = parse_term_();
        expect(Token::Kind::End, "unexpected trailing input");
        LinearTerm t{std::move(body), std::move(context)};
        check_linearity(t);
        return t;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(Token::Kind k, const char* msg) {
        if (cur_.kind != k) throw SyntaxError(msg, cur_.position);
    }

    Term::Ptr parse_term_() {
        if (cur_.kind == Token::Kind::Lambda) {
            advance();
            expect(Token::Kind::Name, "expected a variable name after lambda");
            std::string name = cur_.text;
            advance();
            expect(Token::Kind::Dot, "expected '.' after lambda binder");
            advance();
            lam_names_.push_back(name);  // source order = preorder of the tree
            binders_.push_back(name);
            Term::Ptr body = parse_term_();
            binders_.pop_back();
            return Term::lam(std::move(body));
        }
        Term::Ptr t = parse_atom(true);
        for (;;) {
            if (cur_.kind == Token::Kind::Name || cur_.kind == Token::Kind::LParen) {
                Term::Ptr arg = parse_atom(true);
                t = Term::app(std::move(t), std::move(arg));
            } else if (cur_.kind == Token::Kind::Lambda) {
                // an unparenthesized lambda in argument position extends
                // maximally right: x \y.t parses as x (\y.t)
                Term::Ptr arg = parse_term_();
                t = Term::app(std::move(t), std::move(arg));
            } else {
                break;
            }
        }
        return t;
    }

    Term::Ptr parse_atom(bool required) {
        if (cur_.kind == Token::Kind::Name) {
            Term::Ptr v = resolve(cur_.text, cur_.position);
            advance();
            return v;
        }
        if (cur_.kind == Token::Kind::LParen) {
            advance();
            Term::Ptr t = parse_term_();
            expect(Token::Kind::RParen, "expected ')'");
            advance();
            return t;
        }
        if (required) throw SyntaxError("expected a term", cur_.position);
        return nullptr;
    }

    Term::Ptr resolve(const std::string& name, size_t position) {
        (void)position;
        for (int i = static_cast<int>(binders_.size()) - 1; i >= 0; --i) {
            if (binders_[i] == name)
                return Term::var(static_cast<int>(binders_.size()) - 1 - i);
        }
        for (size_t j = 0; j < context_.size(); ++j) {
            if (context_[j] == name)
                return Term::var(static_cast<int>(binders_.size() + j));
        }
        throw UnboundVariableError(name);
    }

    // Reports the first variable whose use count differs from one, with its
    // display name.
    void check_linearity(const LinearTerm& t) {
        std::vector<std::string> binder_names;
        std::vector<int> binder_uses;
        std::vector<int> free_uses(t.context.size(), 0);
        std::vector<int> enclosing;
        walk_uses(t.term, enclosing, binder_names, binder_uses, free_uses);
        for (size_t i = 0; i < binder_uses.size(); ++i)
            if (binder_uses[i] != 1) throw NonLinearError(binder_names[i]);
        for (size_t j = 0; j < free_uses.size(); ++j)
            if (free_uses[j] != 1) throw NonLinearError(t.context[j]);
    }

    void walk_uses(const Term::Ptr& t, std::vector<int>& enclosing,
                   std::vector<std::string>& binder_names,
                   std::vector<int>& binder_uses, std::vector<int>& free_uses) {
        switch (t->kind()) {
        case Term::Kind::Var: {
            int depth = static_cast<int>(enclosing.size());
            int idx = t->index();
            if (idx < depth) binder_uses[enclosing[depth - 1 - idx]] += 1;
            else free_uses[idx - depth] += 1;
            return;
        }
        case Term::Kind::App:
            walk_uses(t->fun(), enclosing, binder_names, binder_uses, free_uses);
            walk_uses(t->arg(), enclosing, binder_names, binder_uses, free_uses);
            return;
        case Term::Kind::Lam:
            binder_uses.push_back(0);
            binder_names.push_back(binder_names.size() < lam_names_.size()
                                       ? lam_names_[binder_names.size()]
                                       : "?");
            enclosing.push_back(static_cast<int>(binder_uses.size()) - 1);
            walk_uses(t->body(), enclosing, binder_names, binder_uses, free_uses);
            enclosing.pop_back();
            return;
        }
    }

    Lexer lexer_;
    Token cur_{Token::Kind::End, "", 0};
    std::vector<std::string> binders_;
    std::vector<std::string> context_;
    std::vector<std::string> lam_names_;
};

enum class PrintLevel { Top, AppFun, AppArg };

void print_rec(const Term::Ptr& t, PrintLevel level,
               std::vector<std::string>& scope, size_t context_size,
               std::string& out) {
    switch (t->kind()) {
    case Term::Kind::Var: {
        int idx = t->index();
        int depth = static_cast<int>(scope.size() - context_size);
        if (idx < depth) {
            out += scope[scope.size() - 1 - idx];
        } else {
            // context slots sit below the binders in scope order
            out += scope[idx - depth];
        }
        return;
    }
    case Term::Kind::App: {
        bool paren = level == PrintLevel::AppArg;
        if (paren) out += '(';
        print_rec(t->fun(), PrintLevel::AppFun, scope, context_size, out);
        out += ' ';
        print_rec(t->arg(), PrintLevel::AppArg, scope, context_size, out);
        if (paren) out += ')';
        return;
    }
    case Term::Kind::Lam: {
        bool paren = level != PrintLevel::Top;
        if (paren) out += '(';
        std::string name = fresh_name(scope);
        out += '\\';
        out += name;
        out += ". ";
        scope.push_back(name);
        print_rec(t->body(), PrintLevel::Top, scope, context_size, out);
        scope.pop_back();
        if (paren) out += ')';
        return;
    }
    }
}

}  // namespace

LinearTerm parse_term(std::string_view text) {
    Parser p(text);
    return p.parse();
}

std::string print_term(const LinearTerm& t) {
    std::string out;
    if (!t.context.empty()) {
        out += '[';
        for (size_t i = 0; i < t.context.size(); ++i) {
            if (i) out += ',';
            out += t.context[i];
        }
        out += "] ";
    }
    std::vector<std::string> scope = t.context;
    print_rec(t.term, PrintLevel::Top, scope, t.context.size(), out);
    return out;
}

}  // namespace planarlam
