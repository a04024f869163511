#pragma once

#include "thyp/birkeland.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thyp {

// Deliberate corruptions used to check that the verifier detects errors.
enum class Mutation { None, KernelSign, MapCoeff, PochOffset };
std::string mutation_name(Mutation m);
Mutation parse_mutation(const std::string& s);

// Shape and parameter values of an identity instance. Free parameters are
// read through sym(slot): a sampled value when present, else the symbol.
struct IdentityParams {
    int p = 1, q = 2;
    int l = 0;
    int kappa = 0;
    int j = 1;
    int ia = -1;  // the integral parameter of the degenerate pair family
    std::map<int, ParamRat> values;
    Mutation mutation = Mutation::None;
    ParamRat sym(int slot) const;
};

// Mutation hooks shared by the builders.
Kernel mutate_kernel(const Kernel& K, Mutation m);
HypSpec mutate_spec(HypSpec s, Mutation m);
QRatFunc mutate_arg(const QRatFunc& f, Mutation m);

// y^A F_l(A,B;y) with y - 1 - z y^B = 0 against sum f_l(k) C(A+Bk,k) z^k.
Sides kernel_ladder_sides(const IdentityParams& ip, int N);
// y^A G_l(A,B,C;w) against sum g_l(k) C(A+Bk,k) z^k, l = 0, 1.
Sides kernel_interp_sides(const IdentityParams& ip, int N);

// Root-pair curve for q = 2, p odd, kappa = 0, l = 0, with the right side
// built from binomial powers instead of the kernel.
Sides pair_sample_sides(const IdentityParams& ip, int N);

// Free-parameter families on genus-0 uniformizing curves. The b variants
// carry the extra parameter c through the kernel G_l.
enum class LineFamily {
    SLine,    // q = 1, s near 0
    SPair,    // p = q = 1, s near 1
    TPair,    // q = 2, p odd, t near 0
    TTriple,  // p = 1, q = 2, t near 0, three roots
    UConic,   // p = 1, q = 3, u near 0
};
Sides family_sides(LineFamily fam, const IdentityParams& ip, bool interp, int N);

// Degenerate q = 1 line at a = -1, closed form and the limit route.
Sides degenerate_line_sides(const IdentityParams& ip, int N);
Sides degenerate_line_limit_sides(const IdentityParams& ip, int N);

// p = 2, q = 3 pair curve at integral a <= -1: the limit series against the
// power-sum closed form in t.
QRatFunc integral_closed_form(int a);
Sides integral_pair_sides(const IdentityParams& ip, int N);
// Nondegenerate forms: 0 is the 5F4 form at a = -1, 1 the 4F3 form at
// a = -1, 2 the 5F4 form at a = -5.
Sides integral_reduction_sides(int which, const IdentityParams& ip, int N);

// Rational values on the v line: 0 the 4F3, 1 the 5F4.
Sides v_line_sides(int which, const IdentityParams& ip, int N);

// Radical forms on the v and x lines and the quadratics satisfied by
// the cube (resp. fourth power) of the 4F3. A quadratic F^2 + b F + c = 0
// is returned as (b, c).
std::pair<QRatFunc, QRatFunc> v_quadratic_stated();
std::pair<QRatFunc, QRatFunc> v_quadratic_from_cosets();
std::pair<QRatFunc, QRatFunc> x_quadratic_stated();
Sides radical_v_sides(const IdentityParams& ip, int N);
Sides radical_v_quadratic_sides(const IdentityParams& ip, int N, bool from_cosets);
Sides radical_x_sides(const IdentityParams& ip, int N);
Sides radical_x_quadratic_sides(const IdentityParams& ip, int N);

// Exact m-th root of a rational, or nullopt.
std::optional<Rat> rat_root(const Rat& x, int m);

}  // namespace thyp
