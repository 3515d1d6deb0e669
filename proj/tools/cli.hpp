#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// that tests can drive it in-process.
//
// Exit codes: 0 success, 2 input/parse error, 3 algorithm failure.

#include <algint/algint.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace algint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitAlgorithm = 3;

struct GlobalFlags {
    std::string mode = "true";
    int order = 4;
    std::string csv;
    bool raw = false;

    ArithmeticMode arithmetic_mode() const {
        return mode == "semantic" ? ArithmeticMode::Semantic : ArithmeticMode::True;
    }
    AlgebraOrder algebra_order() const { return order_from_int(order); }
};

namespace detail {

// Raised for bad user input that is detected outside the library.
class InputError : public Error {
public:
    using Error::Error;
};

inline std::string matrix_to_string(const IntervalMatrix& m, bool raw) {
    std::string s = "[*\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j).to_string(raw);
        s += "\n";
    }
    return s + "*]";
}

inline std::string vector_to_string(const IntervalVector& v, bool raw) {
    std::string s;
    for (const auto& e : v) s += e.to_string(raw);
    return s;
}

inline expr::Bindings parse_bindings(const std::vector<std::string>& lets, const GlobalFlags& g) {
    expr::Bindings env;
    for (const auto& let : lets) {
        const auto eq = let.find('=');
        if (eq == std::string::npos || eq == 0) throw InputError("--let expects NAME=INTERVAL, got '" + let + "'");
        const std::string name = let.substr(0, eq);
        const GeneralizedInterval value = parse_interval_literal(std::string_view(let).substr(eq + 1));
        env.insert_or_assign(name, IntervalNumber(value, g.algebra_order(), g.arithmetic_mode()));
    }
    return env;
}

inline std::string evaluate_item(const std::string& item, const expr::Bindings& env, const GlobalFlags& g,
                                 bool stats) {
    const auto mode = g.arithmetic_mode();
    const auto order = g.algebra_order();
    const auto cmp_at = item.find_first_of("<>");
    if (cmp_at != std::string::npos) {
        const auto lhs = expr::eval(expr::parse(item.substr(0, cmp_at)), env, mode, order);
        const auto rhs = expr::eval(expr::parse(item.substr(cmp_at + 1)), env, mode, order);
        const bool holds = item[cmp_at] == '<' ? lhs < rhs : lhs > rhs;
        return holds ? "True" : "False";
    }
    const IntervalNumber v = expr::eval(expr::parse(item), env, mode, order);
    if (!stats) return v.to_string(g.raw);
    const auto c = v.collapse();
    return format_real(c.min()) + " " + format_real(c.max()) + " " + format_real(c.norm()) + " " +
           format_real(c.width()) + " " + format_real(c.midpoint());
}

inline IntervalMatrix load_matrix(const std::string& file, const std::string& demo, double eps,
                                  const GlobalFlags& g) {
    const auto order = g.algebra_order();
    const auto mode = g.arithmetic_mode();
    if (!file.empty() && !demo.empty()) throw InputError("use either --file or --demo, not both");
    if (!demo.empty()) {
        if (demo == "sample2x2") return demo_matrix_2x2(eps, order, mode);
        if (demo == "sample3x3") return demo_matrix_3x3(eps, order, mode);
        throw InputError("unknown demo matrix '" + demo + "' (expected sample2x2 or sample3x3)");
    }
    if (file.empty()) throw InputError("a matrix is required: pass --file PATH or --demo NAME");
    std::ifstream in(file);
    if (!in) throw InputError("cannot open matrix file '" + file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str(), order, mode);
}

template <typename Write>
void write_csv(const std::string& path, Write write) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw InputError("cannot write CSV file '" + path + "'");
    write(out);
}

inline void require_order4(const GlobalFlags& g, const char* command) {
    if (g.order != 4) throw InputError(std::string(command) + " divides and requires --order 4");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interval arithmetic in associative algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--mode", g.mode, "Arithmetic mode")->check(CLI::IsMember({"semantic", "true"}));
    app.add_option("--order", g.order, "Algebra order")->check(CLI::IsMember({4, 5, 7}));
    app.add_option("--csv", g.csv, "Write the iteration trace to this CSV file");
    app.add_flag("--raw", g.raw, "Print raw (lo,hi) pairs instead of canonical [min,max]");

    // calc
    std::vector<std::string> lets;
    std::vector<std::string> items;
    bool stats = false;
    auto* calc = app.add_subcommand("calc", "Evaluate interval expressions");
    calc->add_option("--let", lets, "Bind NAME=INTERVAL (repeatable)")->allow_extra_args(false);
    calc->add_flag("--stats", stats, "Print min max norm width midpoint instead of the interval");
    // Expressions are the arguments after the options, taken verbatim so that
    // "[a,b]" and leading '-' survive.
    calc->prefix_command();
    calc->fallthrough(false);
    calc->add_option("--mode", g.mode, "Arithmetic mode")->check(CLI::IsMember({"semantic", "true"}));
    calc->add_option("--order", g.order, "Algebra order")->check(CLI::IsMember({4, 5, 7}));
    calc->add_flag("--raw", g.raw, "Print raw (lo,hi) pairs instead of canonical [min,max]");

    // compare-mul
    std::string mx, my;
    auto* cmpmul = app.add_subcommand("compare-mul", "Compare Minkowski and algebra products");
    cmpmul->add_option("--x", mx, "First interval")->required();
    cmpmul->add_option("--y", my, "Second interval")->required();

    // gradient / newton
    struct OptArgs {
        std::string expression;
        std::string x0;
        double rho = 1e-2;
        double h = 1e-6;
        std::optional<double> eps;
        std::string style = "midpoint";
        std::size_t max_iter = 100000;
    };
    OptArgs grad_args;
    OptArgs newton_args;
    auto add_opt_flags = [](CLI::App* sub, OptArgs& a) {
        sub->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
        sub->add_option("--expr", a.expression, "Function of x to minimise")->required();
        sub->add_option("--x0", a.x0, "Initial interval")->required();
        sub->add_option("--rho", a.rho, "Gradient step");
        sub->add_option("--h", a.h, "Finite-difference step");
        sub->add_option("--eps", a.eps, "Stop when |f'(x)| <= eps");
        sub->add_option("--style", a.style, "Finite-difference style")->check(CLI::IsMember({"midpoint", "full"}));
        sub->add_option("--max-iter", a.max_iter, "Iteration limit");
    };
    auto* gradient = app.add_subcommand("gradient", "Fixed-step gradient descent");
    add_opt_flags(gradient, grad_args);
    auto* newton = app.add_subcommand("newton", "Newton-Raphson descent");
    add_opt_flags(newton, newton_args);

    // eigen / invert
    struct MatArgs {
        std::string file;
        std::string demo;
        double eps = 0.0;
        std::size_t iters = 10;
        double tol = 1e-12;
        std::size_t max_iter = 100;
    };
    MatArgs eig_args;
    MatArgs inv_args;
    auto* eigen = app.add_subcommand("eigen", "Dominant eigenpair by power iteration");
    eigen->add_option("--file", eig_args.file, "Matrix text file");
    eigen->add_option("--demo", eig_args.demo, "Built-in matrix: sample2x2 or sample3x3");
    eigen->add_option("--eps", eig_args.eps, "Radius added to every demo entry");
    eigen->add_option("--iters", eig_args.iters, "Number of iterations");
    auto* invert = app.add_subcommand("invert", "Schulz-Hotelling inverse");
    invert->add_option("--file", inv_args.file, "Matrix text file");
    invert->add_option("--demo", inv_args.demo, "Built-in matrix: sample2x2 or sample3x3");
    invert->add_option("--eps", inv_args.eps, "Radius added to every demo entry");
    invert->add_option("--tol", inv_args.tol, "Residual tolerance");
    invert->add_option("--max-iter", inv_args.max_iter, "Iteration limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    // Parse and validate inputs; everything here maps to exit code 2.
    try {
        if (calc->parsed()) {
            items = calc->remaining();
            std::erase(items, std::string("--"));
            if (items.empty()) throw detail::InputError("calc needs at least one expression");
            const auto env = detail::parse_bindings(lets, g);
            std::string line;
            for (const auto& item : items) {
                if (!line.empty()) line += ' ';
                line += detail::evaluate_item(item, env, g, stats);
            }
            out << line << '\n';
            return kExitOk;
        }

        if (cmpmul->parsed()) {
            const auto x = parse_interval_literal(mx);
            const auto y = parse_interval_literal(my);
            if (!x.is_proper() || !y.is_proper()) throw detail::InputError("compare-mul needs proper intervals");
            auto row = [&](const std::string& label, const GeneralizedInterval& p) {
                std::string text = to_string(p, g.raw);
                out << std::left << std::setw(11) << label << std::setw(28) << text << "width "
                    << format_real(p.width()) << '\n';
            };
            row("minkowski", minkowski::mul(x, y));
            for (AlgebraOrder o : {AlgebraOrder::A4, AlgebraOrder::A5, AlgebraOrder::A7}) {
                const IntervalNumber p = mul(IntervalNumber(x, o), IntervalNumber(y, o));
                row("order-" + std::to_string(dimension(o)), p.collapse());
            }
            return kExitOk;
        }

        if (gradient->parsed() || newton->parsed()) {
            const bool is_newton = newton->parsed();
            const OptArgs& a = is_newton ? newton_args : grad_args;
            if (is_newton) detail::require_order4(g, "newton");
            OptimizerConfig cfg;
            cfg.h = a.h;
            cfg.rho = a.rho;
            cfg.eps = a.eps.value_or(is_newton ? 1e-10 : 1e-6);
            cfg.max_iter = a.max_iter;
            cfg.style = a.style == "full" ? DerivativeStyle::Full : DerivativeStyle::Midpoint;
            cfg.validate();
            if (cfg.style == DerivativeStyle::Full && g.arithmetic_mode() != ArithmeticMode::True)
                throw detail::InputError("--style full requires --mode true");
            const IntervalNumber x0(parse_interval_literal(a.x0), g.algebra_order(), g.arithmetic_mode());
            const auto f = expr::as_function(expr::parse(a.expression));
            (void)f(x0);  // surfaces unbound variables and domain errors as input errors

            try {
                const OptimizationResult r = is_newton ? newton_raphson(f, x0, cfg) : gradient_descent(f, x0, cfg);
                detail::write_csv(g.csv, [&](std::ostream& os) { write_trace_csv(os, r.trace); });
                out << "x = " << r.x.to_string(g.raw) << '\n'
                    << "midpoint = " << format_real(r.x.midpoint()) << '\n'
                    << "width = " << format_real(r.x.width()) << '\n'
                    << "iterations = " << r.trace.back().index << '\n';
                return kExitOk;
            } catch (const OptimizationFailed& e) {
                detail::write_csv(g.csv, [&](std::ostream& os) { write_trace_csv(os, e.trace()); });
                err << e.what() << '\n';
                return kExitAlgorithm;
            }
        }

        if (eigen->parsed()) {
            detail::require_order4(g, "eigen");
            const IntervalMatrix m = detail::load_matrix(eig_args.file, eig_args.demo, eig_args.eps, g);
            if (!m.is_square()) throw detail::InputError("eigen needs a square matrix");
            std::vector<IntervalNumber> ones(m.cols(), IntervalNumber::one(m.order(), m.mode()));
            try {
                const auto r = power_iterate(m, IntervalVector(ones), eig_args.iters);
                detail::write_csv(g.csv, [&](std::ostream& os) {
                    os << "iter,lambda_lo,lambda_hi\n";
                    for (const auto& rec : r.trace)
                        os << rec.index << ',' << format_csv_real(rec.eigenvalue.lo) << ','
                           << format_csv_real(rec.eigenvalue.hi) << '\n';
                });
                out << "M= " << detail::matrix_to_string(m, g.raw) << '\n'
                    << "eigenvalue = " << r.eigenvalue.to_string(g.raw) << '\n'
                    << "eigenvalue midpoint = " << format_real(r.eigenvalue.midpoint()) << '\n'
                    << "eigenvector = " << detail::vector_to_string(r.eigenvector, g.raw) << '\n';
                return kExitOk;
            } catch (const Error& e) {
                err << e.what() << '\n';
                return kExitAlgorithm;
            }
        }

        if (invert->parsed()) {
            detail::require_order4(g, "invert");
            if (g.arithmetic_mode() != ArithmeticMode::True) throw detail::InputError("invert requires --mode true");
            const IntervalMatrix m = detail::load_matrix(inv_args.file, inv_args.demo, inv_args.eps, g);
            if (!m.is_square()) throw detail::InputError("invert needs a square matrix");
            try {
                const IntervalMatrix inv = schulz_invert(m, inv_args.tol, inv_args.max_iter);
                const IntervalMatrix inv_inv = schulz_invert(inv, inv_args.tol, inv_args.max_iter);
                out << "M= " << detail::matrix_to_string(m, g.raw) << '\n'
                    << "Inverse matrix =  " << detail::matrix_to_string(inv, g.raw) << '\n'
                    << "M^(-1)*M= " << detail::matrix_to_string(matmul(inv, m), g.raw) << '\n'
                    << "M*M^(-1)= " << detail::matrix_to_string(matmul(m, inv), g.raw) << '\n'
                    << "(M^(-1))^(-1)= " << detail::matrix_to_string(inv_inv, g.raw) << '\n';
                return kExitOk;
            } catch (const Error& e) {
                err << e.what() << '\n';
                return kExitAlgorithm;
            }
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace algint::cli
