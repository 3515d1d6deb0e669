#pragma once

// Interval vectors and matrices over IntervalNumber, with power iteration and
// the Schulz-Hotelling inverse. Nothing is collapsed between operations
// except where a scalar function (sqrt in two_norm) needs endpoints.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "interval.hpp"
#include "literal.hpp"

namespace algint {

class IntervalVector {
public:
    explicit IntervalVector(std::vector<IntervalNumber> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw ShapeMismatch("interval vectors must be nonempty");
        for (const auto& e : entries_) entries_.front().check_compatible(e);
    }

    IntervalVector(std::initializer_list<IntervalNumber> entries)
        : IntervalVector(std::vector<IntervalNumber>(entries)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    ArithmeticMode mode() const noexcept { return entries_.front().mode(); }
    AlgebraOrder order() const noexcept { return entries_.front().order(); }

    const IntervalNumber& operator[](std::size_t i) const noexcept { return entries_[i]; }
    IntervalNumber& operator[](std::size_t i) noexcept { return entries_[i]; }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

private:
    std::vector<IntervalNumber> entries_;
};

class IntervalMatrix {
public:
    IntervalMatrix(std::size_t rows, std::size_t cols, std::vector<IntervalNumber> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows_ == 0 || cols_ == 0) throw ShapeMismatch("interval matrices must be nonempty");
        if (entries_.size() != rows_ * cols_) throw ShapeMismatch("entry count does not match the matrix shape");
        for (const auto& e : entries_) entries_.front().check_compatible(e);
    }

    explicit IntervalMatrix(const std::vector<IntervalVector>& rows) : rows_(rows.size()) {
        if (rows.empty()) throw ShapeMismatch("interval matrices must be nonempty");
        cols_ = rows.front().size();
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ShapeMismatch("matrix rows have different lengths");
            entries_.insert(entries_.end(), r.begin(), r.end());
        }
        for (const auto& e : entries_) entries_.front().check_compatible(e);
    }

    static IntervalMatrix from_intervals(const std::vector<std::vector<GeneralizedInterval>>& rows,
                                         AlgebraOrder order = AlgebraOrder::A4,
                                         ArithmeticMode mode = ArithmeticMode::True) {
        std::vector<IntervalVector> built;
        built.reserve(rows.size());
        for (const auto& r : rows) {
            std::vector<IntervalNumber> row;
            row.reserve(r.size());
            for (const auto& x : r) row.emplace_back(x, order, mode);
            built.emplace_back(std::move(row));
        }
        return IntervalMatrix(built);
    }

    // Degenerate identity.
    static IntervalMatrix identity(std::size_t n, AlgebraOrder order = AlgebraOrder::A4,
                                   ArithmeticMode mode = ArithmeticMode::True) {
        std::vector<IntervalNumber> e(n * n, IntervalNumber::zero(order, mode));
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = IntervalNumber::one(order, mode);
        return IntervalMatrix(n, n, std::move(e));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    ArithmeticMode mode() const noexcept { return entries_.front().mode(); }
    AlgebraOrder order() const noexcept { return entries_.front().order(); }

    const IntervalNumber& operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
    IntervalNumber& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }

    IntervalVector row(std::size_t i) const {
        return IntervalVector(std::vector<IntervalNumber>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
    }

    const std::vector<IntervalNumber>& entries() const noexcept { return entries_; }

private:
    std::size_t rows_;
    std::size_t cols_ = 0;
    std::vector<IntervalNumber> entries_;
};

// Left-to-right sum of u_i v_i.
inline IntervalNumber dot(const IntervalVector& u, const IntervalVector& v) {
    if (u.size() != v.size()) throw ShapeMismatch("dot product of vectors with different lengths");
    IntervalNumber acc = mul(u[0], v[0]);
    for (std::size_t i = 1; i < u.size(); ++i) acc = add(acc, mul(u[i], v[i]));
    return acc;
}

inline IntervalVector matvec(const IntervalMatrix& m, const IntervalVector& u) {
    if (m.cols() != u.size()) throw ShapeMismatch("matrix-vector shapes do not conform");
    std::vector<IntervalNumber> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        IntervalNumber acc = mul(m(i, 0), u[0]);
        for (std::size_t j = 1; j < m.cols(); ++j) acc = add(acc, mul(m(i, j), u[j]));
        out.push_back(acc);
    }
    return IntervalVector(std::move(out));
}

inline IntervalMatrix matmul(const IntervalMatrix& a, const IntervalMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("matrix product shapes do not conform");
    std::vector<IntervalNumber> out;
    out.reserve(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            IntervalNumber acc = mul(a(i, 0), b(0, j));
            for (std::size_t k = 1; k < a.cols(); ++k) acc = add(acc, mul(a(i, k), b(k, j)));
            out.push_back(acc);
        }
    }
    return IntervalMatrix(a.rows(), b.cols(), std::move(out));
}

namespace detail {

template <typename Op>
IntervalMatrix entrywise(const IntervalMatrix& a, const IntervalMatrix& b, Op op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix shapes differ");
    std::vector<IntervalNumber> out;
    out.reserve(a.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k) out.push_back(op(a.entries()[k], b.entries()[k]));
    return IntervalMatrix(a.rows(), a.cols(), std::move(out));
}

}  // namespace detail

inline IntervalMatrix add(const IntervalMatrix& a, const IntervalMatrix& b) {
    return detail::entrywise(a, b, [](const IntervalNumber& x, const IntervalNumber& y) { return add(x, y); });
}

inline IntervalMatrix sub(const IntervalMatrix& a, const IntervalMatrix& b) {
    return detail::entrywise(a, b, [](const IntervalNumber& x, const IntervalNumber& y) { return sub(x, y); });
}

inline IntervalMatrix transpose(const IntervalMatrix& m) {
    std::vector<IntervalNumber> out;
    out.reserve(m.entries().size());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m(i, j));
    return IntervalMatrix(m.cols(), m.rows(), std::move(out));
}

// sum over i,j of m_ij^2
inline IntervalNumber frob_sq(const IntervalMatrix& m) {
    const auto& e = m.entries();
    IntervalNumber acc = mul(e[0], e[0]);
    for (std::size_t k = 1; k < e.size(); ++k) acc = add(acc, mul(e[k], e[k]));
    return acc;
}

inline IntervalNumber two_norm(const IntervalVector& u) {
    return lift_monotone(MonotoneFunction::Sqrt, dot(u, u));
}

struct EigenRecord {
    std::size_t index;
    GeneralizedInterval eigenvalue;
};

struct PowerIterationResult {
    IntervalNumber eigenvalue;
    IntervalVector eigenvector;
    std::vector<EigenRecord> trace;
};

inline IntervalNumber rayleigh_quotient(const IntervalMatrix& m, const IntervalVector& u) {
    return div(dot(u, matvec(m, u)), dot(u, u));
}

// Power iteration with 2-norm normalisation: u <- M u / |M u|, eigenvalue by
// the Rayleigh quotient. The trace holds one record per iteration.
inline PowerIterationResult power_iterate(const IntervalMatrix& m, const IntervalVector& u0, std::size_t iters) {
    if (!m.is_square()) throw ShapeMismatch("power iteration needs a square matrix");
    if (m.cols() != u0.size()) throw ShapeMismatch("initial vector length does not match the matrix");
    if (m.order() != AlgebraOrder::A4) throw UnsupportedOrder("power iteration divides and is only defined in A4");

    IntervalVector u = u0;
    std::vector<EigenRecord> trace;
    trace.reserve(iters);
    for (std::size_t k = 1; k <= iters; ++k) {
        const IntervalVector w = matvec(m, u);
        const IntervalNumber inv_norm = inverse(two_norm(w));
        std::vector<IntervalNumber> next;
        next.reserve(w.size());
        for (const auto& wi : w) next.push_back(mul(wi, inv_norm));
        u = IntervalVector(std::move(next));
        trace.push_back({k, rayleigh_quotient(m, u).collapse()});
    }
    return {rayleigh_quotient(m, u), u, std::move(trace)};
}

struct SchulzOptions {
    double tol = 1e-12;
    std::size_t max_iter = 100;
};

struct SchulzResult {
    IntervalMatrix inverse;
    // residual of each accepted iterate, starting with X0
    std::vector<double> residuals;
};

// max_ij |midpoint((M X - I)_ij)|
inline double schulz_residual(const IntervalMatrix& m, const IntervalMatrix& x) {
    const IntervalMatrix r = sub(matmul(m, x), IntervalMatrix::identity(m.rows(), m.order(), m.mode()));
    double worst = 0.0;
    for (const auto& e : r.entries()) worst = std::max(worst, std::abs(e.midpoint()));
    return worst;
}

// Schulz-Hotelling iteration X <- X (2I - M X) from X0 = M^T / sum(M_ij^2).
inline SchulzResult schulz_iterate(const IntervalMatrix& m, const SchulzOptions& opts = {}) {
    if (!m.is_square()) throw ShapeMismatch("only square matrices can be inverted");
    if (m.order() != AlgebraOrder::A4) throw UnsupportedOrder("Schulz inversion divides and is only defined in A4");
    if (m.mode() != ArithmeticMode::True) throw InvalidMode("Schulz inversion requires true arithmetic");

    const std::size_t n = m.rows();
    const IntervalNumber scale = inverse(frob_sq(m));
    const IntervalMatrix mt = transpose(m);
    std::vector<IntervalNumber> x0;
    x0.reserve(n * n);
    for (const auto& e : mt.entries()) x0.push_back(mul(e, scale));

    IntervalMatrix x(n, n, std::move(x0));
    const IntervalMatrix identity = IntervalMatrix::identity(n, m.order(), m.mode());
    const IntervalMatrix two_identity = add(identity, identity);

    std::vector<double> residuals;
    for (std::size_t it = 0;; ++it) {
        const IntervalMatrix mx = matmul(m, x);
        const IntervalMatrix r = sub(mx, identity);
        double worst = 0.0;
        for (const auto& e : r.entries()) worst = std::max(worst, std::abs(e.midpoint()));
        residuals.push_back(worst);
        if (worst < opts.tol) return {x, std::move(residuals)};
        if (it >= opts.max_iter) {
            throw NonConvergence("Schulz iteration did not converge in " + std::to_string(opts.max_iter) +
                                     " iterations",
                                 worst);
        }
        x = matmul(x, sub(two_identity, mx));
    }
}

inline IntervalMatrix schulz_invert(const IntervalMatrix& m, double tol = 1e-12, std::size_t max_iter = 100) {
    return schulz_iterate(m, SchulzOptions{tol, max_iter}).inverse;
}

// Matrix text: one row per line, entries separated by commas outside
// brackets, each entry an interval literal. Blank lines and lines starting
// with '#' are skipped.
inline IntervalMatrix parse_matrix(std::string_view text, AlgebraOrder order = AlgebraOrder::A4,
                                   ArithmeticMode mode = ArithmeticMode::True) {
    std::vector<std::vector<GeneralizedInterval>> rows;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;

        std::vector<GeneralizedInterval> row;
        int depth = 0;
        std::size_t cell = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i < line.size() && line[i] == '[') ++depth;
            if (i < line.size() && line[i] == ']') --depth;
            if (i == line.size() || (line[i] == ',' && depth == 0)) {
                try {
                    row.push_back(parse_interval_literal(line.substr(cell, i - cell)));
                } catch (const ParseError& e) {
                    throw ParseError(cell + e.position(),
                                     "line " + std::to_string(line_no) + ": " + e.message());
                }
                cell = i + 1;
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ShapeMismatch("matrix text contains no rows");
    return IntervalMatrix::from_intervals(rows, order, mode);
}

// [[1,2],[3,4]] with every entry widened to [v - eps, v + eps].
inline IntervalMatrix demo_matrix_2x2(double eps, AlgebraOrder order = AlgebraOrder::A4,
                                      ArithmeticMode mode = ArithmeticMode::True) {
    const double v[2][2] = {{1, 2}, {3, 4}};
    std::vector<std::vector<GeneralizedInterval>> rows(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rows[i].push_back({v[i][j] - eps, v[i][j] + eps});
    return IntervalMatrix::from_intervals(rows, order, mode);
}

// Symmetric [[1,4,5],[4,2,6],[5,6,3]] widened by eps.
inline IntervalMatrix demo_matrix_3x3(double eps, AlgebraOrder order = AlgebraOrder::A4,
                                      ArithmeticMode mode = ArithmeticMode::True) {
    const double v[3][3] = {{1, 4, 5}, {4, 2, 6}, {5, 6, 3}};
    std::vector<std::vector<GeneralizedInterval>> rows(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rows[i].push_back({v[i][j] - eps, v[i][j] + eps});
    return IntervalMatrix::from_intervals(rows, order, mode);
}

}  // namespace algint
