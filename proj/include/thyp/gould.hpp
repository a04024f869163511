#pragma once

#include "thyp/hypergeom.hpp"

#include <functional>
#include <map>
#include <vector>

namespace thyp {

// A kernel is a rational function of the variable y (slot kY) and parameters.
using Kernel = ParamRat;

// fhat(n) = sum_k (-1)^k C(n,k) C(A+Bk, n) f(k), n = 0..N.
std::vector<ParamRat> vandermonde_transform(const std::function<ParamRat(long)>& f, const ParamRat& A,
                                            const ParamRat& B, int N);

// sum_k (-1)^(n-k) C(n,k) h(A + kB), for h a function of the parameter A.
ParamRat fin_diff_pow(const ParamRat& h, int n, const ParamRat& B);

// f_l(A,B;k) = (A+Bk+1)_{l-1} / (A+1)_{l-1}
ParamRat f_ell(int l, const ParamRat& A, const ParamRat& B, long k);
// Transform of f_l through the finite-difference formula, symbolic in A, B.
ParamRat hatf_ell(int l, int n);

// F_l(A,B;y) = sum_n fhat_l(n) ((1-y)/y)^n as a rational function of y,
// symbolic in A, B. Negative l from the terminating sum, positive l by the
// ladder recurrence starting at F_0 = 1.
const Kernel& F_ell_symbolic(int l);
// One ladder step F_l -> F_{l+1} applied to a kernel symbolic in A, B.
Kernel ladder_step(const Kernel& F, int l);
Kernel F_ell(int l, const ParamRat& A, const ParamRat& B);
Kernel kernel_derivative(const Kernel& K);

// g_l(A,B,C;k) = (A+C+l)/(A+C+Bk+l) f_{l+1}(A,B;k), l = 0, 1.
ParamRat g_ell(int l, const ParamRat& A, const ParamRat& B, const ParamRat& C, long k);
// Closed form (l = 0) or first-order recurrence (l = 1) for the transform of g_l.
std::vector<ParamRat> hatg_ell(int l, const ParamRat& A, const ParamRat& B, const ParamRat& C, int N);
// G_l as a series in w = (y-1)/y.
PSeries G_series(int l, const ParamRat& A, const ParamRat& B, const ParamRat& C, int N);

// Right-hand side 1 + sum_k coeff(k) C(A+Bk, k) z^k of the kernel identities.
PSeries binomial_side(const std::function<ParamRat(long)>& coeff, const ParamRat& A, const ParamRat& B,
                      int N);

// Polynomial in y with coefficients in the remaining variables.
UPoly<ParamRat> as_upoly(const MPoly& p, int v = kY);

// K(y(x)) for a series y in a ring R containing the parameters.
template <class R>
TruncSeries<R> eval_kernel(const Kernel& K, const TruncSeries<R>& y)
{
    auto lift = [](const ParamRat& c) { return R(c); };
    UPoly<R> n = as_upoly(K.num()).map(lift), d = as_upoly(K.den()).map(lift);
    return series_div(eval_poly(n, y), eval_poly(d, y));
}

}  // namespace thyp
