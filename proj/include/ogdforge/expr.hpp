#pragma once

// Tiny rational-expression language for gadget table cells.
//   numbers, identifiers, + - * / ^int, parentheses, implicit product ("2 e1 a^2").

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace ogdforge {

using Env = std::map<std::string, Rational, std::less<>>;

class Expr {
public:
    Expr() : Expr(Rational(0)) {}
    explicit Expr(Rational c) : node_(std::make_shared<Node>(Node{Op::Const, std::move(c), {}, 0, {}, {}})) {}

    static Expr parse(std::string_view text);

    Rational eval(const Env& env) const { return eval(*node_, env); }

    void collect_symbols(std::set<std::string>& out) const { collect(*node_, out); }

private:
    enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow };
    struct Node {
        Op op;
        Rational value;
        std::string name;
        long exponent;
        std::shared_ptr<const Node> a, b;
    };
    using P = std::shared_ptr<const Node>;

    explicit Expr(P n) : node_(std::move(n)) {}

    static Rational eval(const Node& n, const Env& env) {
        switch (n.op) {
        case Op::Const: return n.value;
        case Op::Var: {
            auto it = env.find(n.name);
            if (it == env.end()) throw ValidationError("unbound symbol '" + n.name + "'");
            return it->second;
        }
        case Op::Add: return eval(*n.a, env) + eval(*n.b, env);
        case Op::Sub: return eval(*n.a, env) - eval(*n.b, env);
        case Op::Mul: return eval(*n.a, env) * eval(*n.b, env);
        case Op::Div: return eval(*n.a, env) / eval(*n.b, env);
        case Op::Neg: return -eval(*n.a, env);
        case Op::Pow: return eval(*n.a, env).pow(n.exponent);
        }
        return {};
    }

    static void collect(const Node& n, std::set<std::string>& out) {
        if (n.op == Op::Var) out.insert(n.name);
        if (n.a) collect(*n.a, out);
        if (n.b) collect(*n.b, out);
    }

    class Parser;

    P node_;
};

class Expr::Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    P run() {
        P e = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("expression '" + std::string(s_) + "': " + why + " at " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    static P bin(Op op, P a, P b) { return std::make_shared<Node>(Node{op, {}, {}, 0, std::move(a), std::move(b)}); }

    P expr() {
        P lhs = term();
        for (;;) {
            char c = peek();
            if (c == '+') { ++i_; lhs = bin(Op::Add, lhs, term()); }
            else if (c == '-') { ++i_; lhs = bin(Op::Sub, lhs, term()); }
            else return lhs;
        }
    }
    P term() {
        P lhs = unary();
        for (;;) {
            char c = peek();
            if (c == '*') { ++i_; lhs = bin(Op::Mul, lhs, unary()); }
            else if (c == '/') { ++i_; lhs = bin(Op::Div, lhs, unary()); }
            else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') lhs = bin(Op::Mul, lhs, power());
            else return lhs;
        }
    }
    P unary() {
        char c = peek();
        if (c == '-') { ++i_; return std::make_shared<Node>(Node{Op::Neg, {}, {}, 0, unary(), nullptr}); }
        if (c == '+') { ++i_; return unary(); }
        return power();
    }
    P power() {
        P base = primary();
        if (peek() == '^') {
            ++i_;
            skip();
            bool neg = false;
            if (i_ < s_.size() && s_[i_] == '-') { neg = true; ++i_; }
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (start == i_) fail("integer exponent expected");
            long e = std::stol(std::string(s_.substr(start, i_ - start)));
            return std::make_shared<Node>(Node{Op::Pow, {}, {}, neg ? -e : e, std::move(base), nullptr});
        }
        return base;
    }
    P primary() {
        char c = peek();
        if (c == '(') {
            ++i_;
            P e = expr();
            if (peek() != ')') fail("')' expected");
            ++i_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return std::make_shared<Node>(
                Node{Op::Const, Rational::parse(s_.substr(start, i_ - start)), {}, 0, nullptr, nullptr});
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            // identifiers: letters then digits (e1, e2, rho, a)
            while (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return std::make_shared<Node>(
                Node{Op::Var, {}, std::string(s_.substr(start, i_ - start)), 0, nullptr, nullptr});
        }
        fail(c ? std::string("unexpected '") + c + "'" : "unexpected end");
    }
};

inline Expr Expr::parse(std::string_view text) { return Expr(Parser(text).run()); }

inline Rational eval_expr(std::string_view text, const Env& env = {}) { return Expr::parse(text).eval(env); }

} // namespace ogdforge
