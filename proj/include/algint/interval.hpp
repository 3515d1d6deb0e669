#pragma once

// Interval numbers: intervals embedded in A4/A5/A7, kept as algebra elements
// between operations and collapsed to endpoints only on demand.

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include "algebra.hpp"
#include "error.hpp"
#include "format.hpp"

namespace algint {

// Endpoint pair; improper (lo > hi) values are the negative classes of the
// completion of the interval semigroup.
struct GeneralizedInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool is_proper() const noexcept { return lo <= hi; }

    GeneralizedInterval canonical() const noexcept {
        return lo <= hi ? *this : GeneralizedInterval{hi, lo};
    }

    double min() const noexcept { return lo <= hi ? lo : hi; }
    double max() const noexcept { return lo <= hi ? hi : lo; }

    double width() const noexcept { return std::abs(hi - lo); }
    double midpoint() const noexcept { return (lo + hi) / 2.0; }
    double norm() const noexcept { return width() + std::abs(midpoint()); }

    bool contains_zero() const noexcept { return min() <= 0.0 && 0.0 <= max(); }

    friend bool operator==(const GeneralizedInterval&, const GeneralizedInterval&) = default;
};

// "[min,max]", or "(lo,hi)" when `raw` is set.
inline std::string to_string(const GeneralizedInterval& x, bool raw = false) {
    if (raw) return "(" + format_real(x.lo) + "," + format_real(x.hi) + ")";
    const auto c = x.canonical();
    return "[" + format_real(c.lo) + "," + format_real(c.hi) + "]";
}

inline bool contains(const GeneralizedInterval& outer, const GeneralizedInterval& inner) noexcept {
    const auto o = outer.canonical();
    const auto i = inner.canonical();
    return o.lo <= i.lo && i.hi <= o.hi;
}

namespace detail {

// Generator indices sorted by the angle of their ray in the (lo, hi) plane,
// from e1 = (1,1) round to e4 = (-1,-1). Adjacent pairs bound the cones used
// by the embedding.
struct RaySequence {
    std::array<std::uint8_t, kMaxDimension> index;
    std::size_t size;
};

constexpr RaySequence ray_sequence(AlgebraOrder order) noexcept {
    switch (order) {
        case AlgebraOrder::A5: return {{0, 1, 4, 2, 3}, 5};
        case AlgebraOrder::A7: return {{0, 1, 6, 4, 5, 2, 3}, 7};
        case AlgebraOrder::A4: break;
    }
    return {{0, 1, 2, 3}, 4};
}

inline AlgebraElement embed_proper(double lo, double hi, AlgebraOrder order) {
    AlgebraElement e(order);
    if (lo == 0.0 && hi == 0.0) return e;
    const RaySequence seq = ray_sequence(order);
    for (std::size_t k = 0; k + 1 < seq.size; ++k) {
        const std::size_t a = seq.index[k];
        const std::size_t b = seq.index[k + 1];
        const auto ga = kGenerators[a];
        const auto gb = kGenerators[b];
        // Generator endpoints are 0, +-1 or +-1/2 and det is 1 or 1/2, so the
        // sign of each numerator is exact.
        const double det = ga.lo * gb.hi - ga.hi * gb.lo;
        const double alpha = (lo * gb.hi - hi * gb.lo) / det;
        const double beta = (ga.lo * hi - ga.hi * lo) / det;
        if (alpha >= 0.0 && beta >= 0.0) {
            e[a] = alpha;
            e[b] = beta;
            return e;
        }
    }
    throw DomainError("cannot embed a non-finite interval");
}

}  // namespace detail

// Nonnegative decomposition of a proper interval on the two generator rays
// bounding its cone. Improper pairs embed as -embed(-lo, -hi).
inline AlgebraElement embed(double lo, double hi, AlgebraOrder order = AlgebraOrder::A4) {
    if (lo <= hi) return detail::embed_proper(lo, hi, order);
    return -detail::embed_proper(-lo, -hi, order);
}

inline AlgebraElement embed(const GeneralizedInterval& x, AlgebraOrder order = AlgebraOrder::A4) {
    return embed(x.lo, x.hi, order);
}

// Linear map back to endpoints: lo = sum a_i lo(e_i), hi = sum a_i hi(e_i).
// In A4 this is [a1 - a3 - a4, a1 + a2 - a4].
inline GeneralizedInterval collapse(const AlgebraElement& e) noexcept {
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        lo += e[i] * kGenerators[i].lo;
        hi += e[i] * kGenerators[i].hi;
    }
    return {lo, hi};
}

// Set negation on generators: e1<->e4, e2<->e3, e5 fixed, e6<->e7.
inline AlgebraElement set_negation(const AlgebraElement& e) noexcept {
    static constexpr std::array<std::uint8_t, kMaxDimension> kImage{3, 2, 1, 0, 4, 6, 5};
    AlgebraElement r(e.order());
    for (std::size_t i = 0; i < e.size(); ++i) r[kImage[i]] = e[i];
    return r;
}

enum class ArithmeticMode : std::uint8_t { Semantic, True };

inline const char* to_string(ArithmeticMode m) noexcept {
    return m == ArithmeticMode::Semantic ? "semantic" : "true";
}

enum class MonotoneFunction : std::uint8_t { Exp, Log, Sqrt };

class IntervalNumber {
public:
    IntervalNumber() = default;

    IntervalNumber(AlgebraElement elem, ArithmeticMode mode) noexcept : mode_(mode), elem_(elem) {}

    IntervalNumber(double lo, double hi, AlgebraOrder order = AlgebraOrder::A4,
                   ArithmeticMode mode = ArithmeticMode::True)
        : mode_(mode), elem_(embed(lo, hi, order)) {}

    IntervalNumber(const GeneralizedInterval& x, AlgebraOrder order = AlgebraOrder::A4,
                   ArithmeticMode mode = ArithmeticMode::True)
        : IntervalNumber(x.lo, x.hi, order, mode) {}

    // [value, value]
    static IntervalNumber degenerate(double value, AlgebraOrder order = AlgebraOrder::A4,
                                     ArithmeticMode mode = ArithmeticMode::True) {
        return IntervalNumber(value, value, order, mode);
    }

    // [center - eps, center + eps]
    static IntervalNumber centered(double center, double eps, AlgebraOrder order = AlgebraOrder::A4,
                                   ArithmeticMode mode = ArithmeticMode::True) {
        return IntervalNumber(center - eps, center + eps, order, mode);
    }

    static IntervalNumber zero(AlgebraOrder order, ArithmeticMode mode) noexcept {
        return IntervalNumber(AlgebraElement::zero(order), mode);
    }

    static IntervalNumber one(AlgebraOrder order, ArithmeticMode mode) noexcept {
        return IntervalNumber(AlgebraElement::unit(order), mode);
    }

    ArithmeticMode mode() const noexcept { return mode_; }
    AlgebraOrder order() const noexcept { return elem_.order(); }
    const AlgebraElement& element() const noexcept { return elem_; }

    GeneralizedInterval collapse() const noexcept { return algint::collapse(elem_); }
    GeneralizedInterval canonical() const noexcept { return collapse().canonical(); }

    double lo() const noexcept { return canonical().lo; }
    double hi() const noexcept { return canonical().hi; }
    double width() const noexcept { return collapse().width(); }
    double midpoint() const noexcept { return collapse().midpoint(); }
    double norm() const noexcept { return collapse().norm(); }

    std::string to_string(bool raw = false) const { return algint::to_string(collapse(), raw); }

    void check_compatible(const IntervalNumber& o) const {
        if (mode_ != o.mode_) throw ModeMismatch();
        elem_.check_same_order(o.elem_);
    }

    // Same canonical interval. Use `identical` for element-level identity.
    friend bool operator==(const IntervalNumber& a, const IntervalNumber& b) noexcept {
        return a.canonical() == b.canonical();
    }

    friend std::weak_ordering operator<=>(const IntervalNumber& a, const IntervalNumber& b) noexcept;

private:
    ArithmeticMode mode_ = ArithmeticMode::True;
    AlgebraElement elem_;
};

inline bool identical(const IntervalNumber& a, const IntervalNumber& b) noexcept {
    return a.mode() == b.mode() && a.element() == b.element();
}

// True mode negates coefficients (the group opposite). Semantic mode is the
// set negation of the canonical interval: the generator involution when the
// element collapses to a proper interval, the group opposite otherwise (both
// collapse to [-max, -min]).
inline IntervalNumber neg(const IntervalNumber& x) {
    if (x.mode() == ArithmeticMode::True || !x.collapse().is_proper()) {
        return IntervalNumber(-x.element(), x.mode());
    }
    return IntervalNumber(set_negation(x.element()), x.mode());
}

inline IntervalNumber add(const IntervalNumber& x, const IntervalNumber& y) {
    x.check_compatible(y);
    return IntervalNumber(x.element() + y.element(), x.mode());
}

inline IntervalNumber sub(const IntervalNumber& x, const IntervalNumber& y) {
    x.check_compatible(y);
    if (x.mode() == ArithmeticMode::True) return IntervalNumber(x.element() - y.element(), x.mode());
    return add(x, neg(y));
}

inline IntervalNumber scalar_add(double alpha, const IntervalNumber& x) {
    return add(x, IntervalNumber::degenerate(alpha, x.order(), x.mode()));
}

inline IntervalNumber scalar_mul(double alpha, const IntervalNumber& x) {
    if (alpha >= 0.0) return IntervalNumber(alpha * x.element(), x.mode());
    return IntervalNumber(-alpha * neg(x).element(), x.mode());
}

inline IntervalNumber mul(const IntervalNumber& x, const IntervalNumber& y) {
    x.check_compatible(y);
    return IntervalNumber(alg_mul(x.element(), y.element()), x.mode());
}

inline IntervalNumber inverse(const IntervalNumber& y) {
    if (y.order() != AlgebraOrder::A4) {
        throw UnsupportedOrder("interval division is only defined in A4");
    }
    if (!is_invertible(y.element())) throw DivisionNotAllowed(y.to_string());
    return IntervalNumber(alg_inv(y.element()), y.mode());
}

inline IntervalNumber div(const IntervalNumber& x, const IntervalNumber& y) {
    x.check_compatible(y);
    return mul(x, inverse(y));
}

inline IntervalNumber operator-(const IntervalNumber& x) { return neg(x); }
inline IntervalNumber operator+(const IntervalNumber& x, const IntervalNumber& y) { return add(x, y); }
inline IntervalNumber operator-(const IntervalNumber& x, const IntervalNumber& y) { return sub(x, y); }
inline IntervalNumber operator*(const IntervalNumber& x, const IntervalNumber& y) { return mul(x, y); }
inline IntervalNumber operator/(const IntervalNumber& x, const IntervalNumber& y) { return div(x, y); }

inline IntervalNumber operator+(const IntervalNumber& x, double a) { return scalar_add(a, x); }
inline IntervalNumber operator+(double a, const IntervalNumber& x) { return scalar_add(a, x); }
inline IntervalNumber operator-(const IntervalNumber& x, double a) {
    return sub(x, IntervalNumber::degenerate(a, x.order(), x.mode()));
}
inline IntervalNumber operator-(double a, const IntervalNumber& x) {
    return sub(IntervalNumber::degenerate(a, x.order(), x.mode()), x);
}
inline IntervalNumber operator*(double a, const IntervalNumber& x) { return scalar_mul(a, x); }
inline IntervalNumber operator*(const IntervalNumber& x, double a) { return scalar_mul(a, x); }
inline IntervalNumber operator/(const IntervalNumber& x, double a) {
    return div(x, IntervalNumber::degenerate(a, x.order(), x.mode()));
}

inline IntervalNumber& operator+=(IntervalNumber& x, const IntervalNumber& y) { return x = x + y; }
inline IntervalNumber& operator-=(IntervalNumber& x, const IntervalNumber& y) { return x = x - y; }
inline IntervalNumber& operator*=(IntervalNumber& x, const IntervalNumber& y) { return x = x * y; }

inline bool contains(const IntervalNumber& outer, const IntervalNumber& inner) noexcept {
    return contains(outer.collapse(), inner.collapse());
}

// Total preorder on canonical intervals: by midpoint when neither contains the
// other, by width when one does; ties fall through to the other key.
inline std::weak_ordering cmp(const GeneralizedInterval& x, const GeneralizedInterval& y) noexcept {
    const auto a = x.canonical();
    const auto b = y.canonical();
    const bool nested = contains(a, b) || contains(b, a);
    auto by = [](double p, double q) -> std::weak_ordering {
        if (p < q) return std::weak_ordering::less;
        if (q < p) return std::weak_ordering::greater;
        return std::weak_ordering::equivalent;
    };
    const auto first = nested ? by(a.width(), b.width()) : by(a.midpoint(), b.midpoint());
    if (first != std::weak_ordering::equivalent) return first;
    return nested ? by(a.midpoint(), b.midpoint()) : by(a.width(), b.width());
}

inline std::weak_ordering operator<=>(const IntervalNumber& a, const IntervalNumber& b) noexcept {
    return cmp(a.collapse(), b.collapse());
}

inline const char* function_name(MonotoneFunction f) noexcept {
    switch (f) {
        case MonotoneFunction::Exp: return "exp";
        case MonotoneFunction::Log: return "log";
        case MonotoneFunction::Sqrt: return "sqrt";
    }
    return "?";
}

// Applies an increasing scalar function to both endpoints of the collapsed
// pair (orientation preserved) and re-embeds the result.
inline IntervalNumber lift_monotone(MonotoneFunction f, const IntervalNumber& x) {
    const GeneralizedInterval c = x.collapse();
    double (*fn)(double) = nullptr;
    switch (f) {
        case MonotoneFunction::Exp: fn = [](double v) { return std::exp(v); }; break;
        case MonotoneFunction::Log:
            if (!(c.min() > 0.0)) throw DomainError("log requires a strictly positive interval, got " + x.to_string());
            fn = [](double v) { return std::log(v); };
            break;
        case MonotoneFunction::Sqrt:
            if (!(c.min() >= 0.0)) throw DomainError("sqrt requires a nonnegative interval, got " + x.to_string());
            fn = [](double v) { return std::sqrt(v); };
            break;
    }
    return IntervalNumber(fn(c.lo), fn(c.hi), x.order(), x.mode());
}

inline IntervalNumber exp(const IntervalNumber& x) { return lift_monotone(MonotoneFunction::Exp, x); }
inline IntervalNumber log(const IntervalNumber& x) { return lift_monotone(MonotoneFunction::Log, x); }
inline IntervalNumber sqrt(const IntervalNumber& x) { return lift_monotone(MonotoneFunction::Sqrt, x); }

// x^k as a left fold of algebra products; x^0 is [1,1].
inline IntervalNumber pow_int(const IntervalNumber& x, unsigned k) {
    if (k == 0) return IntervalNumber::one(x.order(), x.mode());
    IntervalNumber r = x;
    for (unsigned i = 1; i < k; ++i) r = mul(r, x);
    return r;
}

}  // namespace algint
