#pragma once

#include "thyp/birkeland.hpp"

namespace thyp::testing {

// x / dx and y / dy agree through the common order.
inline bool same_series(const CSeries& x, const MPoly& dx, const CSeries& y, const MPoly& dy)
{
    Sides s;
    s.lhs = x;
    s.rhs = y;
    s.lhs_den = dx;
    s.rhs_den = dy;
    return first_mismatch(s) == -1;
}

inline bool same_lhs(const Sides& a, const Sides& b) { return same_series(a.lhs, a.lhs_den, b.lhs, b.lhs_den); }
inline bool same_rhs(const Sides& a, const Sides& b) { return same_series(a.rhs, a.rhs_den, b.rhs, b.rhs_den); }

// Rational coefficients of a side without roots of unity, denominator divided out.
inline std::vector<ParamRat> scalar_values(const CSeries& s, const MPoly& den)
{
    std::vector<ParamRat> out;
    ParamRat d(den);
    for (int k = 0; k <= s.order(); ++k)
        out.push_back(s[k].scalar_part() / d);
    return out;
}

}  // namespace thyp::testing
