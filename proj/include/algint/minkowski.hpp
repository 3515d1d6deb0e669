#pragma once

// Classical set-extension (Minkowski) arithmetic on proper intervals. Used as
// a reference oracle; none of the algebra code paths call into it.

#include <algorithm>
#include <initializer_list>

#include "error.hpp"
#include "interval.hpp"

namespace algint::minkowski {

namespace detail {

inline void require_proper(const GeneralizedInterval& x) {
    if (!x.is_proper()) throw DomainError("Minkowski operations need proper intervals, got " + to_string(x, true));
}

inline GeneralizedInterval hull(std::initializer_list<double> v) {
    return {std::min(v), std::max(v)};
}

}  // namespace detail

inline GeneralizedInterval add(const GeneralizedInterval& x, const GeneralizedInterval& y) {
    detail::require_proper(x);
    detail::require_proper(y);
    return {x.lo + y.lo, x.hi + y.hi};
}

inline GeneralizedInterval sub(const GeneralizedInterval& x, const GeneralizedInterval& y) {
    detail::require_proper(x);
    detail::require_proper(y);
    return {x.lo - y.hi, x.hi - y.lo};
}

inline GeneralizedInterval mul(const GeneralizedInterval& x, const GeneralizedInterval& y) {
    detail::require_proper(x);
    detail::require_proper(y);
    return detail::hull({x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi});
}

inline GeneralizedInterval div(const GeneralizedInterval& x, const GeneralizedInterval& y) {
    detail::require_proper(x);
    detail::require_proper(y);
    if (y.lo <= 0.0 && 0.0 <= y.hi) throw DomainError("Minkowski division by an interval containing 0");
    return detail::hull({x.lo / y.lo, x.lo / y.hi, x.hi / y.lo, x.hi / y.hi});
}

}  // namespace algint::minkowski
