#include "oracles.hpp"

#include <gtest/gtest.h>

#include <string>

using namespace algint;
using namespace algint::expr;

namespace {

constexpr AlgebraOrder A4 = AlgebraOrder::A4;
constexpr ArithmeticMode Sem = ArithmeticMode::Semantic;
constexpr ArithmeticMode Tru = ArithmeticMode::True;

NodePtr var(const char* n) { return make(Variable{n}); }
NodePtr lit(double v) { return make(Number{v}); }
NodePtr bin(BinaryOp op, NodePtr a, NodePtr b) { return make(Binary{op, std::move(a), std::move(b)}); }

std::size_t error_position(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    return 0;
}

IntervalNumber eval_at(const std::string& text, GeneralizedInterval x, ArithmeticMode mode,
                       AlgebraOrder order = A4) {
    Bindings env;
    env.emplace("x", IntervalNumber(x, order, mode));
    return eval(parse(text), env, mode, order);
}

}  // namespace

TEST(Parse, Shapes) {
    EXPECT_EQ(parse("x^2-2*x+1"),
              Ast(bin(BinaryOp::Add,
                      bin(BinaryOp::Sub, make(Power{var("x"), 2}), bin(BinaryOp::Mul, lit(2), var("x"))), lit(1))));
    EXPECT_EQ(parse("x*exp(x)"), Ast(bin(BinaryOp::Mul, var("x"), make(Call{MonotoneFunction::Exp, var("x")}))));
    EXPECT_EQ(parse("x**2"), parse("x^2"));
    EXPECT_EQ(parse("x*(exp(x))"), parse("x*exp(x)"));
    EXPECT_EQ(parse("2^3^2"), Ast(make(Power{lit(2), 9})));
    EXPECT_EQ(parse("-x^2"), Ast(make(Negate{make(Power{var("x"), 2})})));
    EXPECT_EQ(parse("a-b-c"), Ast(bin(BinaryOp::Sub, bin(BinaryOp::Sub, var("a"), var("b")), var("c"))));
    EXPECT_EQ(parse("a/b*c"), Ast(bin(BinaryOp::Mul, bin(BinaryOp::Div, var("a"), var("b")), var("c"))));
    EXPECT_EQ(parse("2\xC2\xB1" "0.5"), Ast(make(IntervalLiteral{{1.5, 2.5}})));
    EXPECT_EQ(parse("[-1, 2]"), Ast(make(IntervalLiteral{{-1, 2}})));
}

TEST(Parse, PositionedErrors) {
    EXPECT_EQ(error_position("x*+"), 3u);
    EXPECT_EQ(error_position(""), 1u);
    EXPECT_EQ(error_position("(x"), 3u);
    EXPECT_EQ(error_position("x)"), 2u);
    EXPECT_EQ(error_position("foo(x)"), 1u);
    EXPECT_EQ(error_position("x^-1"), 3u);
    EXPECT_EQ(error_position("x^1.5"), 3u);
    EXPECT_EQ(error_position("x $ y"), 3u);
    EXPECT_EQ(error_position("[1,"), 4u);
    EXPECT_EQ(error_position("x^99999999999"), 3u);
}

TEST(Parse, PrintRoundTrip) {
    const char* corpus[] = {
        "x^2-2*x+1", "x*(x-2)+1", "(x-1)**2", "x*exp(x)", "-x", "--x", "-(x+y)*z", "sqrt(log(x+3))/2",
        "[-1,2]*x", "2\xC2\xB1" "0.1 - x", "1e-3*x^3", "a/b/c", "((((x))))", "0.1+0.2", "x^0", "2^3^2",
    };
    for (const char* text : corpus) {
        const Ast a = parse(text);
        const std::string printed = print(a);
        EXPECT_EQ(parse(printed), a) << text << " -> " << printed;
    }
}

TEST(ParseProperty, TotalOnRandomText) {
    oracle::Sampler s(51);
    const std::string alphabet = "x1.+-*/^()[], e";
    for (int k = 0; k < 10000; ++k) {
        std::string text;
        const int len = static_cast<int>(s.real(0, 12));
        for (int i = 0; i < len; ++i) text += alphabet[static_cast<std::size_t>(s.real(0, alphabet.size() - 0.001))];
        try {
            const Ast a = parse(text);
            ASSERT_EQ(parse(print(a)), a) << text;
        } catch (const ParseError& e) {
            ASSERT_GE(e.position(), 1u) << text;
            ASSERT_LE(e.position(), text.size() + 1) << text;
        }
    }
}

TEST(Eval, SessionPolynomials) {
    for (const char* f : {"x^2-2*x+1", "x*(x-2)+1", "(x-1)^2"}) {
        EXPECT_EQ(eval_at(f, {-1, 2}, Tru).canonical(), (GeneralizedInterval{-1, 2})) << f;
        EXPECT_EQ(eval_at(f, {-1, 2}, Sem).canonical(), (GeneralizedInterval{-7, 8})) << f;
        EXPECT_EQ(eval_at(f, {3, 4}, Tru).canonical(), (GeneralizedInterval{4, 9})) << f;
        EXPECT_EQ(eval_at(f, {3, 4}, Sem).canonical(), (GeneralizedInterval{2, 11})) << f;
    }
}

TEST(Eval, Errors) {
    EXPECT_THROW(eval(parse("y"), {}, Tru), UnboundVariable);
    Bindings env;
    env.emplace("x", IntervalNumber(0, 1, A4, Sem));
    EXPECT_THROW(eval(parse("x"), env, Tru), ModeMismatch);
    EXPECT_THROW(eval(parse("x"), env, Sem, AlgebraOrder::A5), OrderMismatch);
    EXPECT_THROW(eval(parse("1/x"), env, Sem), DivisionNotAllowed);
    EXPECT_THROW(eval(parse("log(x)"), env, Sem), DomainError);
}

TEST(Eval, AsFunction) {
    const auto f = as_function(parse("x*exp(x)"));
    const auto y = f(IntervalNumber::degenerate(1.0));
    EXPECT_DOUBLE_EQ(y.midpoint(), std::exp(1.0));
}

// Identities whose two sides distribute to the same coefficient vector.
TEST(EvalProperty, PolynomialIdentitiesAgreeCoefficientwise) {
    const std::pair<const char*, const char*> identities[] = {
        {"(x+1)^2", "x^2+2*x+1"},
        {"(x-1)^2", "x^2-2*x+1"},
        {"(x+1)*(x-1)", "x^2-1"},
        {"(x+2)^3", "x^3+6*x^2+12*x+8"},
        {"(x-1)^3", "x^3-3*x^2+3*x-1"},
        {"x*(x+1)*(x+2)", "x^3+3*x^2+2*x"},
        {"(x^2+1)*(x^2-1)", "x^4-1"},
        {"(x+1)^4", "x^4+4*x^3+6*x^2+4*x+1"},
        {"x*(x-2)+1", "(x-1)^2"},
        {"(2*x+3)*(x-4)", "2*x^2-5*x-12"},
        {"(x-1)*(x^2+x+1)", "x^3-1"},
        {"(x+1)*(x^2-x+1)", "x^3+1"},
        {"3*(x+2)-2*(x+3)", "x"},
        {"(x+3)^2-(x-3)^2", "12*x"},
        {"x*(x*(x+1)+1)+1", "x^3+x^2+x+1"},
        {"(x^2-x)*(x+1)", "x^3-x"},
        {"(x+0.5)^2", "x^2+x+0.25"},
        {"(x-2)*(x-3)", "x^2-5*x+6"},
        {"(x^2+x)^2", "x^4+2*x^3+x^2"},
        {"4*(x+1)*(x-1)+4", "4*x^2"},
    };
    oracle::Sampler s(52);
    for (AlgebraOrder order : oracle::kOrders) {
        for (int k = 0; k < 200; ++k) {
            const auto x = s.proper_dyadic(2);
            for (const auto& [lhs, rhs] : identities) {
                const auto a = eval_at(lhs, x, Tru, order);
                const auto b = eval_at(rhs, x, Tru, order);
                ASSERT_TRUE(identical(a, b)) << lhs << " vs " << rhs << " at " << to_string(x);
            }
        }
    }
}
