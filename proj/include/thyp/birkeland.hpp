#pragma once

#include "thyp/trinomial.hpp"

#include <string>
#include <vector>

namespace thyp {

// The two sides are lhs / lhs_den and rhs / rhs_den; the numerator series
// may carry a common polynomial denominator that is never normalized away.
struct Sides {
    CSeries lhs;
    CSeries rhs;
    std::vector<std::string> branch_choices;
    MPoly lhs_den{Rat(1)};
    MPoly rhs_den{Rat(1)};
};

// First order at which the sides differ, or -1; compared by cross-multiplication.
int first_mismatch(const Sides& s);
// lhs - rhs at order k as a string, unreduced when a side carries a denominator.
std::string mismatch_value(const Sides& s, int k);

// Parameters of the trinomial-root identities. a and c may be symbolic
// (ParamRat::var(ka), ParamRat::var(kc)) or rational samples.
struct TrinomialCase {
    Part part = Part::I;
    int p = 1, q = 2;
    int l = 0;
    int kappa = 0;
    int j = 1;
    ParamRat a = ParamRat::var(ka);
    ParamRat c = ParamRat::var(kc);
};

// Parameters of the nF_{n-1} in the inverse root-average form for the given kappa.
HypSpec inverse_spec(const TrinomialCase& tc);
// Parameters of the n+1F_n of the C-interpolated form.
HypSpec interp_spec(const TrinomialCase& tc);

// Coefficient multiplying t^kappa Hyp_kappa in the root expansion.
ParamRat expansion_coeff(const TrinomialCase& tc);
// Prefactor of the averaged root side in the C-interpolated form.
ParamRat interp_prefactor(const TrinomialCase& tc);

// y_j^{-a} F_l(-a, B; y_j) against the binomial series in z_j.
Sides forward_sides(const TrinomialCase& tc, int N);
// y_j^{-a} F_l(-a, B; y_j) against the sum over kappa of hypergeometric terms.
Sides expansion_sides(const TrinomialCase& tc, int N);
// t^kappa Hyp_kappa(Z t^m) against the root-of-unity average of root powers.
Sides inverse_sides(const TrinomialCase& tc, int N);
// The C-interpolated version with kernels G_l, l = 0, 1.
Sides interp_sides(const TrinomialCase& tc, int N);

}  // namespace thyp
