#pragma once

#include "thyp/cyclo.hpp"
#include "thyp/gould.hpp"

#include <vector>

namespace thyp {

using CSeries = TruncSeries<Cyclo>;

// Roots of x^n - g x^p - beta = 0, n = p + q, expanded near beta = 0 with
// g = 1 (part I, q roots in beta) or near g = 0 with beta = 1 (part II,
// n roots in g). y[j-1] is the normalized power y_j = x_j^q (resp. x_j^n),
// the root of y - 1 - z_j y^B = 0 with z_j = w^(j-1) * t for the expansion
// variable t and w = eps_m^n (resp. eps_m^q), m the conductor.
enum class Part { I, II };

struct RootFamily {
    Part part;
    int p, q, n;
    int m;  // q for part I, n for part II
    Rat B;  // -p/q or p/n
    std::vector<CSeries> y;
};

RootFamily roots_near_beta0(int p, int q, int N);
RootFamily roots_near_g0(int p, int q, int N);
RootFamily root_family(Part part, int p, int q, int N);

// x_j = eps_m^{-(j-1)} y_j^{1/m}, j = 1..m.
CSeries root_series(const RootFamily& fam, int j);

// Left side x^n - g x^p - beta of the trinomial at the root x_j.
CSeries trinomial_residual(const RootFamily& fam, int j);

// (-1)^q n^n / (p^p q^q): zeta = Z beta^q / g^n.
Rat zeta_constant(int p, int q);

// f(c t^k) as a series of order N in t, for f known through order N / k.
CSeries substitute_monomial(const PSeries& f, const Rat& c, int k, int N);

Cyclo lift(const ParamRat& x);
CSeries lift(const PSeries& s);

// A common denominator D of the coefficients and D s, whose coefficients
// are polynomials in the parameters.
std::pair<MPoly, PSeries> clear_denominators(const PSeries& s);
PSeries divide_by(const PSeries& s, const MPoly& D);
CSeries divide_by(const CSeries& s, const MPoly& D);
// outer(inner) evaluated on the cleared outer series, divided once at the end.
PSeries compose_cleared(const PSeries& outer, const PSeries& inner);
CSeries compose_cleared(const PSeries& outer, const CSeries& inner);

// y^A K(y) for a rational kernel K, as a series in the expansion variable.
CSeries kernel_side(const CSeries& y, const ParamRat& A, const Kernel& K);
// y^A G(w) with w = (y - 1)/y, for G given as a series in w.
CSeries series_kernel_side(const CSeries& y, const ParamRat& A, const PSeries& G);
// The same as (D, numerator series) with polynomial numerators.
std::pair<MPoly, CSeries> series_kernel_side_cleared(const CSeries& y, const ParamRat& A, const PSeries& G);

}  // namespace thyp
