#pragma once

// Recursive-descent parser and evaluator for interval expressions.
//
// Grammar, lowest precedence first:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary (('^' | '**') exponent)?
//   exponent:= INTEGER (('^' | '**') exponent)?        right-associative
//   primary := NUMBER | NUMBER '±' NUMBER | '[' REAL ',' REAL ']'
//            | NAME | FUNC '(' expr ')' | '(' expr ')'
// FUNC is one of exp, log, sqrt.

#include <cctype>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "error.hpp"
#include "format.hpp"
#include "interval.hpp"
#include "literal.hpp"

namespace algint::expr {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Number {
    double value;
};
struct IntervalLiteral {
    GeneralizedInterval value;
};
struct Variable {
    std::string name;
};
struct Negate {
    NodePtr operand;
};
enum class BinaryOp : char { Add = '+', Sub = '-', Mul = '*', Div = '/' };
struct Binary {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
};
struct Power {
    NodePtr base;
    unsigned exponent;
};
struct Call {
    MonotoneFunction function;
    NodePtr argument;
};

struct Node {
    std::variant<Number, IntervalLiteral, Variable, Negate, Binary, Power, Call> value;
};

// Immutable syntax tree; copies share nodes.
class Ast {
public:
    explicit Ast(NodePtr root) : root_(std::move(root)) {}
    const Node& root() const noexcept { return *root_; }
    const NodePtr& root_ptr() const noexcept { return root_; }

private:
    NodePtr root_;
};

template <typename T>
NodePtr make(T v) {
    return std::make_shared<const Node>(Node{std::move(v)});
}

// Structural equality.
inline bool equal(const Node& a, const Node& b) {
    if (a.value.index() != b.value.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.value);
            if constexpr (std::is_same_v<T, Number>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<T, IntervalLiteral>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<T, Variable>) {
                return x.name == y.name;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return equal(*x.operand, *y.operand);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return x.op == y.op && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
            } else if constexpr (std::is_same_v<T, Power>) {
                return x.exponent == y.exponent && equal(*x.base, *y.base);
            } else {
                return x.function == y.function && equal(*x.argument, *y.argument);
            }
        },
        a.value);
}

inline bool operator==(const Ast& a, const Ast& b) { return equal(a.root(), b.root()); }

// Fully parenthesised text that parses back to an equal tree.
inline std::string print(const Node& n) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Number>) {
                return format_exact(x.value);
            } else if constexpr (std::is_same_v<T, IntervalLiteral>) {
                return "[" + format_exact(x.value.lo) + "," + format_exact(x.value.hi) + "]";
            } else if constexpr (std::is_same_v<T, Variable>) {
                return x.name;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return "(-" + print(*x.operand) + ")";
            } else if constexpr (std::is_same_v<T, Binary>) {
                return "(" + print(*x.lhs) + " " + static_cast<char>(x.op) + " " + print(*x.rhs) + ")";
            } else if constexpr (std::is_same_v<T, Power>) {
                return "(" + print(*x.base) + "^" + std::to_string(x.exponent) + ")";
            } else {
                return std::string(function_name(x.function)) + "(" + print(*x.argument) + ")";
            }
        },
        n.value);
}

inline std::string print(const Ast& ast) { return print(ast.root()); }

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Ast parse() {
        skip();
        if (pos_ >= s_.size()) fail("empty expression");
        NodePtr e = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return Ast(std::move(e));
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_ + 1, msg); }

    void skip() { algint::detail::skip_space(s_, pos_); }

    bool accept(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    // '*' that is not the first half of '**'
    bool accept_times() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '*' && s_.substr(pos_, 2) != "**") {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_pow() { return accept("**") || accept("^"); }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (accept("+")) {
                lhs = make(Binary{BinaryOp::Add, lhs, term()});
            } else if (accept("-")) {
                lhs = make(Binary{BinaryOp::Sub, lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            if (accept_times()) {
                lhs = make(Binary{BinaryOp::Mul, lhs, unary()});
            } else if (accept("/")) {
                lhs = make(Binary{BinaryOp::Div, lhs, unary()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary() {
        if (accept("-")) return make(Negate{unary()});
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (accept_pow()) return make(Power{base, exponent()});
        return base;
    }

    unsigned exponent() {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponents are not supported");
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            fail("exponent must be a nonnegative integer literal");
        }
        unsigned long long value = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            value = value * 10 + static_cast<unsigned>(s_[pos_] - '0');
            if (value > std::numeric_limits<unsigned>::max()) {
                pos_ = start;
                fail("exponent is too large");
            }
            ++pos_;
        }
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E')) {
            pos_ = start;
            fail("exponent must be an integer");
        }
        if (accept_pow()) {
            const std::size_t at = pos_;
            const unsigned inner = exponent();
            unsigned long long r = 1;
            for (unsigned i = 0; i < inner; ++i) {
                r *= value;
                if (r > std::numeric_limits<unsigned>::max()) {
                    pos_ = at;
                    fail("exponent is too large");
                }
                if (r == 0 || r == 1) break;
            }
            return static_cast<unsigned>(r);
        }
        return static_cast<unsigned>(value);
    }

    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = expr();
            if (!accept(")")) fail("expected ')'");
            return inner;
        }
        if (c == '[') {
            auto lit = algint::detail::scan_interval_literal(s_, pos_, false);
            return make(IntervalLiteral{*lit});
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            auto value = algint::detail::scan_real(s_, pos_, false);
            if (!value) fail("malformed number");
            std::size_t p = pos_;
            algint::detail::skip_space(s_, p);
            if (s_.substr(p, kPlusMinus.size()) != kPlusMinus) return make(Number{*value});
            pos_ = p + kPlusMinus.size();
            skip();
            auto radius = algint::detail::scan_real(s_, pos_, false);
            if (!radius) fail("expected radius after '\xC2\xB1'");
            return make(IntervalLiteral{{*value - *radius, *value + *radius}});
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            skip();
            if (pos_ < s_.size() && s_[pos_] == '(') {
                std::optional<MonotoneFunction> fn;
                if (name == "exp") fn = MonotoneFunction::Exp;
                if (name == "log") fn = MonotoneFunction::Log;
                if (name == "sqrt") fn = MonotoneFunction::Sqrt;
                if (!fn) {
                    pos_ = start;
                    fail("unknown function '" + name + "'");
                }
                ++pos_;
                NodePtr arg = expr();
                if (!accept(")")) fail("expected ')' after function argument");
                return make(Call{*fn, arg});
            }
            return make(Variable{std::move(name)});
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Ast parse(std::string_view text) { return detail::Parser(text).parse(); }

using Bindings = std::map<std::string, IntervalNumber, std::less<>>;

inline IntervalNumber eval(const Node& n, const Bindings& env, ArithmeticMode mode, AlgebraOrder order) {
    return std::visit(
        [&](const auto& x) -> IntervalNumber {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Number>) {
                return IntervalNumber::degenerate(x.value, order, mode);
            } else if constexpr (std::is_same_v<T, IntervalLiteral>) {
                return IntervalNumber(x.value, order, mode);
            } else if constexpr (std::is_same_v<T, Variable>) {
                auto it = env.find(x.name);
                if (it == env.end()) throw UnboundVariable(x.name);
                const IntervalNumber& v = it->second;
                if (v.mode() != mode) throw ModeMismatch();
                if (v.order() != order) throw OrderMismatch();
                return v;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return neg(eval(*x.operand, env, mode, order));
            } else if constexpr (std::is_same_v<T, Binary>) {
                const IntervalNumber a = eval(*x.lhs, env, mode, order);
                const IntervalNumber b = eval(*x.rhs, env, mode, order);
                switch (x.op) {
                    case BinaryOp::Add: return add(a, b);
                    case BinaryOp::Sub: return sub(a, b);
                    case BinaryOp::Mul: return mul(a, b);
                    case BinaryOp::Div: return div(a, b);
                }
                throw Error("unknown binary operator");
            } else if constexpr (std::is_same_v<T, Power>) {
                return pow_int(eval(*x.base, env, mode, order), x.exponent);
            } else {
                return lift_monotone(x.function, eval(*x.argument, env, mode, order));
            }
        },
        n.value);
}

inline IntervalNumber eval(const Ast& ast, const Bindings& env, ArithmeticMode mode,
                           AlgebraOrder order = AlgebraOrder::A4) {
    return eval(ast.root(), env, mode, order);
}

// Wraps an expression in one variable as an interval function.
inline std::function<IntervalNumber(const IntervalNumber&)> as_function(Ast ast, std::string variable = "x") {
    return [ast = std::move(ast), variable = std::move(variable)](const IntervalNumber& x) {
        Bindings env;
        env.emplace(variable, x);
        return eval(ast, env, x.mode(), x.order());
    };
}

}  // namespace algint::expr
