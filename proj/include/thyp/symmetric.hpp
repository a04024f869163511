#pragma once

#include "thyp/param_rat.hpp"
#include "thyp/upoly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace thyp {

// Symmetric expressions are MPoly in generator slots: generator i (1-based)
// lives in slot i - 1, so at most kMaxVars generators.

// p_gamma in e_1..e_n, from the lower Hessenberg determinant
// | e1 1 0 ..; 2e2 e1 1 ..; ..; gamma e_gamma .. e1 |, e_l = 0 for l > n.
MPoly power_sum_in_elementary(int gamma, int n);
// e_l in p_1..p_l from e_l = l^{-1} sum_{g=1}^{l} (-1)^{g-1} p_g e_{l-g}.
MPoly elementary_in_power_sums(int l);

// Substitute generator polynomials: slot i - 1 of f replaced by gens[i - 1].
MPoly substitute_generators(const MPoly& f, const std::vector<MPoly>& gens);

// e_l(x_1..x_k) and p_g(x_1..x_k) in slots 0..k-1.
MPoly elementary_poly(int l, int k);
MPoly power_sum_poly(int g, int k);

// Rewrite a symmetric polynomial in x_1..x_k (slots 0..k-1) in terms of
// e_1..e_k (slots 0..k-1). Throws std::domain_error if f is not symmetric.
MPoly to_elementary(const MPoly& f, int k);

// p_gamma on the curve where every e_l except e_q, e_n vanishes, n = p + q:
// sum over m_q q + m_n n = gamma of c_{m_q,m_n} e_q^{m_q} e_n^{m_n}, with e_q in
// slot 0 and e_n in slot 1.
MPoly power_sum_on_curve(int gamma, int p, int q);
Rat curve_power_coeff(int mq, int mn, int p, int q);

// The complementary elementary symmetric function hat-sigma_m of the n - k
// roots x_{k+1}..x_n, in terms of x_1..x_k (slots 0..k-1). Branch 1 is valid
// for 0 <= m <= min(q-1, n-k); branch 2, which involves sigma_n, for
// max(q-k+1, 0) <= m <= n-k.
ParamRat hat_sigma(int m, int k, int p, int q, int branch, const ParamRat& sigma_n);
std::pair<int, int> hat_sigma_range(int k, int p, int q, int branch);

// sigma_n, sigma_q and zeta on the curve of root pairs [x_1:x_2].
struct PairElimination {
    ParamRat sigma_n, sigma_q, zeta;  // in x_1, x_2 (slots 0, 1)
    QRatFunc sigma_n_t, sigma_q_t, zeta_t;  // at [x_1:x_2] = [t+1:t-1]
    QRatFunc s_t, s_t_alt;  // the two forms of s = (-1)^{n-1} sigma_n / x_1^n
};
PairElimination k2_elimination(int p, int q);

// G_{q,m}(y) = prod_chi (y - [sum_j eps_q^{(j-1)m} x_{chi(j)}^m]^q) over
// permutations chi fixing 1, a transversal of the cyclic subgroup. Coefficient
// i of y^i is a symmetric function of x_1..x_q (slots 0..q-1); for m < 0 it is
// a rational function. Supported for q <= 4.
UPoly<ParamRat> coset_poly(int q, int m);

}  // namespace thyp
