#pragma once

// Finite-dimensional associative algebras A4, A5 and A7 whose generators are
// unit intervals and whose products are the Minkowski products of those
// generators. Interval numbers live in these algebras as coefficient vectors.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include "error.hpp"

namespace algint {

enum class AlgebraOrder : std::uint8_t { A4 = 4, A5 = 5, A7 = 7 };

inline constexpr std::size_t kMaxDimension = 7;

constexpr std::size_t dimension(AlgebraOrder order) noexcept {
    return static_cast<std::size_t>(order);
}

inline AlgebraOrder order_from_int(int n) {
    switch (n) {
        case 4: return AlgebraOrder::A4;
        case 5: return AlgebraOrder::A5;
        case 7: return AlgebraOrder::A7;
        default:
            throw UnsupportedOrder("algebra order must be 4, 5 or 7 (got " + std::to_string(n) + ")");
    }
}

// Endpoints of a generator e_{i+1} viewed as an interval [lo, hi].
struct GeneratorEndpoints {
    double lo;
    double hi;
};

// e1=[1,1] e2=[0,1] e3=[-1,0] e4=[-1,-1] e5=[-1,1] e6=[-1,1/2] e7=[-1/2,1]
inline constexpr std::array<GeneratorEndpoints, kMaxDimension> kGenerators{{
    {1.0, 1.0},
    {0.0, 1.0},
    {-1.0, 0.0},
    {-1.0, -1.0},
    {-1.0, 1.0},
    {-1.0, 0.5},
    {-0.5, 1.0},
}};

// Multiplication tables with 0-based generator indices: row i, column j holds
// k such that e_{i+1} e_{j+1} = e_{k+1}. Every structure constant is 0 or 1.
using StructureTable = std::array<std::array<std::uint8_t, kMaxDimension>, kMaxDimension>;

namespace detail {

// The order-7 table; the order-5 and order-4 tables are its leading blocks.
inline constexpr StructureTable kTable7{{
    {0, 1, 2, 3, 4, 5, 6},
    {1, 1, 2, 2, 4, 5, 6},
    {2, 2, 1, 1, 4, 6, 5},
    {3, 2, 1, 0, 4, 6, 5},
    {4, 4, 4, 4, 4, 4, 4},
    {5, 5, 6, 6, 4, 6, 5},
    {6, 6, 5, 5, 4, 5, 6},
}};

}  // namespace detail

// The table for `order`; only the leading dimension(order) block is meaningful.
constexpr const StructureTable& structure_table(AlgebraOrder /*order*/) noexcept {
    return detail::kTable7;
}

// Index of e_{i+1} e_{j+1}, 0-based.
constexpr std::size_t generator_product(AlgebraOrder order, std::size_t i, std::size_t j) noexcept {
    return structure_table(order)[i][j];
}

class AlgebraElement {
public:
    explicit AlgebraElement(AlgebraOrder order = AlgebraOrder::A4) noexcept : order_(order) {}

    AlgebraElement(AlgebraOrder order, std::initializer_list<double> coeffs) : order_(order) {
        if (coeffs.size() != dimension(order)) {
            throw UnsupportedOrder("coefficient count does not match the algebra order");
        }
        std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
    }

    AlgebraElement(AlgebraOrder order, std::span<const double> coeffs) : order_(order) {
        if (coeffs.size() != dimension(order)) {
            throw UnsupportedOrder("coefficient count does not match the algebra order");
        }
        std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
    }

    static AlgebraElement zero(AlgebraOrder order) noexcept { return AlgebraElement(order); }

    static AlgebraElement unit(AlgebraOrder order) noexcept { return generator(order, 0); }

    static AlgebraElement generator(AlgebraOrder order, std::size_t index, double scale = 1.0) noexcept {
        AlgebraElement e(order);
        e.coeffs_[index] = scale;
        return e;
    }

    AlgebraOrder order() const noexcept { return order_; }
    std::size_t size() const noexcept { return dimension(order_); }

    double operator[](std::size_t i) const noexcept { return coeffs_[i]; }
    double& operator[](std::size_t i) noexcept { return coeffs_[i]; }

    std::span<const double> coeffs() const noexcept { return {coeffs_.data(), size()}; }

    // Coefficientwise identity (+0 and -0 compare equal).
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) noexcept {
        if (a.order_ != b.order_) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.coeffs_[i] != b.coeffs_[i]) return false;
        }
        return true;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check_same_order(o);
        for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    AlgebraElement& operator-=(const AlgebraElement& o) {
        check_same_order(o);
        for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    AlgebraElement& operator*=(double s) noexcept {
        for (std::size_t i = 0; i < size(); ++i) coeffs_[i] *= s;
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(double s, AlgebraElement a) noexcept { return a *= s; }

    friend AlgebraElement operator-(AlgebraElement a) noexcept {
        for (std::size_t i = 0; i < a.size(); ++i) a.coeffs_[i] = -a.coeffs_[i];
        return a;
    }

    void check_same_order(const AlgebraElement& o) const {
        if (order_ != o.order_) throw OrderMismatch();
    }

private:
    AlgebraOrder order_;
    std::array<double, kMaxDimension> coeffs_{};
};

// Bilinear extension of the structure table.
inline AlgebraElement alg_mul(const AlgebraElement& u, const AlgebraElement& v) {
    u.check_same_order(v);
    const auto& table = structure_table(u.order());
    const std::size_t n = u.size();
    AlgebraElement r(u.order());
    // Symmetric pairing so that alg_mul(u, v) and alg_mul(v, u) round identically.
    for (std::size_t i = 0; i < n; ++i) {
        r[table[i][i]] += u[i] * v[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            r[table[i][j]] += u[i] * v[j] + u[j] * v[i];
        }
    }
    return r;
}

// Coordinates of an A4 element in the primed basis
//   e1' = e1 - e2,  e2' = e2,  e3' = e3,  e4' = e4 - e3,
// in which A4 splits into the ideals I1 = <e1', e4'> and I2 = <e2', e3'>.
// Each ideal multiplies like the split-complex numbers (a + bj, j^2 = 1).
struct SplitCoords {
    std::array<double, 2> i1{};  // (x1', x4')
    std::array<double, 2> i2{};  // (x2', x3')

    friend bool operator==(const SplitCoords&, const SplitCoords&) = default;
};

inline void require_order4(const AlgebraElement& u, const char* what) {
    if (u.order() != AlgebraOrder::A4) {
        throw UnsupportedOrder(std::string(what) + " is only defined in A4");
    }
}

inline SplitCoords to_split(const AlgebraElement& u) {
    require_order4(u, "split coordinates");
    return SplitCoords{{u[0], u[3]}, {u[0] + u[1], u[2] + u[3]}};
}

inline AlgebraElement from_split(const SplitCoords& s) {
    const double x1 = s.i1[0];
    const double x4 = s.i1[1];
    return AlgebraElement(AlgebraOrder::A4, {x1, s.i2[0] - x1, s.i2[1] - x4, x4});
}

// Split-complex product (a + bj)(c + dj) = (ac + bd) + (ad + bc)j.
inline std::array<double, 2> split_complex_mul(const std::array<double, 2>& x,
                                               const std::array<double, 2>& y) noexcept {
    return {x[0] * y[0] + x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
}

inline bool is_invertible(const AlgebraElement& u) {
    const SplitCoords s = to_split(u);
    return s.i1[0] != s.i1[1] && s.i1[0] != -s.i1[1] && s.i2[0] != s.i2[1] && s.i2[0] != -s.i2[1];
}

// Multiplicative inverse in A4. An element is invertible iff x4' != +-x1' and
// x3' != +-x2'; in each ideal (a, b)^-1 = (a, -b) / (a^2 - b^2).
inline AlgebraElement alg_inv(const AlgebraElement& u) {
    require_order4(u, "the multiplicative inverse");
    if (!is_invertible(u)) throw NotInvertible();
    const SplitCoords s = to_split(u);
    auto inv_ideal = [](const std::array<double, 2>& p) -> std::array<double, 2> {
        const double det = (p[0] - p[1]) * (p[0] + p[1]);
        return {p[0] / det, -p[1] / det};
    };
    return from_split(SplitCoords{inv_ideal(s.i1), inv_ideal(s.i2)});
}

}  // namespace algint
