// Reproduces a short interactive session: the same expressions evaluated in
// semantic and true arithmetic.

#include <algint/algint.hpp>

#include <cstdio>

int main() {
    using namespace algint;
    for (ArithmeticMode mode : {ArithmeticMode::Semantic, ArithmeticMode::True}) {
        const IntervalNumber a(-1, 2, AlgebraOrder::A4, mode);
        const IntervalNumber b(3, 4, AlgebraOrder::A4, mode);
        const IntervalNumber c(3, 12, AlgebraOrder::A4, mode);
        std::printf("%s\n", mode == ArithmeticMode::Semantic ? "semantic" : "true");
        std::printf("  a-a       = %s\n", (a - a).to_string().c_str());
        std::printf("  a*b       = %s\n", (a * b).to_string().c_str());
        std::printf("  b/b       = %s\n", (b / b).to_string().c_str());
        std::printf("  a*(b+c)   = %s\n", (a * (b + c)).to_string().c_str());
        std::printf("  a*b+a*c   = %s\n", (a * b + a * c).to_string().c_str());
        std::printf("  a/c-b/c   = %s\n", (a / c - b / c).to_string().c_str());
    }

    const auto f = expr::as_function(expr::parse("x*exp(x)"));
    OptimizerConfig cfg;
    cfg.style = DerivativeStyle::Full;
    cfg.eps = 1e-10;
    const auto r = newton_raphson(f, IntervalNumber::centered(2.0, 0.1), cfg);
    std::printf("argmin x*exp(x) = %s after %zu steps\n", r.x.to_string().c_str(), r.trace.back().index);
}
