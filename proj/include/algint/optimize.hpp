#pragma once

// Finite differences on interval functions and the fixed-step gradient and
// Newton-Raphson descent loops, with per-iteration traces.

#include <cstddef>
#include <exception>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "format.hpp"
#include "interval.hpp"

namespace algint {

using IntervalFunction = std::function<IntervalNumber(const IntervalNumber&)>;

enum class DerivativeStyle {
    Midpoint,  // degenerate interval built from the midpoint of the difference
    Full,      // the whole interval quotient
};

struct OptimizerConfig {
    double h = 1e-6;
    double rho = 1e-2;
    double eps = 1e-6;
    std::size_t max_iter = 100000;
    DerivativeStyle style = DerivativeStyle::Midpoint;

    void validate() const {
        if (!(h > 0.0)) throw DomainError("finite-difference step h must be positive");
        if (!(rho > 0.0)) throw DomainError("gradient step rho must be positive");
        if (!(eps > 0.0)) throw DomainError("stopping threshold eps must be positive");
        if (max_iter < 1) throw DomainError("max_iter must be at least 1");
    }
};

struct IterationRecord {
    std::size_t index;
    GeneralizedInterval x;
    GeneralizedInterval fx;
};

struct OptimizationResult {
    IntervalNumber x;
    std::vector<IterationRecord> trace;
};

// Any failure inside a descent loop. The trace up to the failure is kept;
// an underlying arithmetic error is attached as the nested exception.
class OptimizationFailed : public Error {
public:
    OptimizationFailed(const std::string& what, std::vector<IterationRecord> trace)
        : Error(what), trace_(std::move(trace)) {}

    const std::vector<IterationRecord>& trace() const noexcept { return trace_; }

private:
    std::vector<IterationRecord> trace_;
};

class MaxIterationsExceeded : public OptimizationFailed {
public:
    using OptimizationFailed::OptimizationFailed;
};

// Central difference (f(x+h) - f(x-h)) / 2h.
inline IntervalNumber fd_first(const IntervalFunction& f, const IntervalNumber& x, double h, DerivativeStyle style) {
    const IntervalNumber diff = f(x + h) - f(x - h);
    if (style == DerivativeStyle::Midpoint) {
        return IntervalNumber::degenerate(diff.midpoint() / h / 2.0, x.order(), x.mode());
    }
    return scalar_mul(1.0 / (2.0 * h), diff);
}

// (f(x+h) + f(x-h) - 2 f(x)) / h^2
inline IntervalNumber fd_second(const IntervalFunction& f, const IntervalNumber& x, double h, DerivativeStyle style) {
    const IntervalNumber num = f(x + h) + f(x - h) - scalar_mul(2.0, f(x));
    if (style == DerivativeStyle::Midpoint) {
        return IntervalNumber::degenerate(num.midpoint() / (h * h), x.order(), x.mode());
    }
    return scalar_mul(1.0 / (h * h), num);
}

namespace detail {

template <typename Step>
OptimizationResult descend(const IntervalFunction& f, IntervalNumber x, const OptimizerConfig& cfg,
                           const char* name, Step step) {
    cfg.validate();
    if (cfg.style == DerivativeStyle::Full && x.mode() != ArithmeticMode::True) {
        throw InvalidMode(std::string(name) + " with full-interval differences requires true arithmetic");
    }
    std::vector<IterationRecord> trace;
    trace.push_back({0, x.collapse(), f(x).collapse()});
    for (std::size_t it = 1;; ++it) {
        try {
            const IntervalNumber grad = fd_first(f, x, cfg.h, cfg.style);
            if (grad.norm() <= cfg.eps) return {x, std::move(trace)};
            if (it > cfg.max_iter) {
                throw MaxIterationsExceeded(std::string(name) + " did not converge in " +
                                                std::to_string(cfg.max_iter) + " iterations",
                                            std::move(trace));
            }
            x = step(x, grad);
            trace.push_back({it, x.collapse(), f(x).collapse()});
        } catch (const OptimizationFailed&) {
            throw;
        } catch (const Error& e) {
            std::throw_with_nested(OptimizationFailed(
                std::string(name) + " failed at iteration " + std::to_string(it) + ": " + e.what(), trace));
        }
    }
}

}  // namespace detail

// x <- x - rho f'(x) until |f'(x)| <= eps.
inline OptimizationResult gradient_descent(const IntervalFunction& f, const IntervalNumber& x0,
                                           const OptimizerConfig& cfg) {
    return detail::descend(f, x0, cfg, "gradient descent", [&](const IntervalNumber& x, const IntervalNumber& g) {
        return x - scalar_mul(cfg.rho, g);
    });
}

// x <- x - f'(x) / f''(x) until |f'(x)| <= eps.
inline OptimizationResult newton_raphson(const IntervalFunction& f, const IntervalNumber& x0,
                                         const OptimizerConfig& cfg) {
    return detail::descend(f, x0, cfg, "Newton-Raphson", [&](const IntervalNumber& x, const IntervalNumber& g) {
        return x - div(g, fd_second(f, x, cfg.h, cfg.style));
    });
}

inline void write_trace_csv(std::ostream& out, const std::vector<IterationRecord>& trace) {
    out << "iter,x_lo,x_hi,x_mid,x_width,f_lo,f_hi\n";
    for (const auto& r : trace) {
        out << r.index << ',' << format_csv_real(r.x.lo) << ',' << format_csv_real(r.x.hi) << ','
            << format_csv_real(r.x.midpoint()) << ',' << format_csv_real(r.x.width()) << ','
            << format_csv_real(r.fx.lo) << ',' << format_csv_real(r.fx.hi) << '\n';
    }
}

}  // namespace algint
