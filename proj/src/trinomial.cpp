#include "thyp/trinomial.hpp"

#include <numeric>
#include <stdexcept>

namespace thyp {

namespace {

void check_coprime(int p, int q)
{
    if (p < 1 || q < 1)
        throw ConstraintError("trinomial: p and q must be positive");
    if (std::gcd(p, q) != 1)
        throw ConstraintError("trinomial: gcd(p, q) must be 1");
}

}  // namespace

Cyclo lift(const ParamRat& x) { return Cyclo(x); }

CSeries lift(const PSeries& s)
{
    return s.map([](const ParamRat& x) { return Cyclo(x); });
}

RootFamily root_family(Part part, int p, int q, int N)
{
    check_coprime(p, q);
    RootFamily fam{part, p, q, p + q, 0, Rat(0), {}};
    int step;
    if (part == Part::I) {
        fam.m = q;
        fam.B = Rat(-p, q);
        step = fam.n;
    } else {
        fam.m = fam.n;
        fam.B = Rat(p, fam.n);
        step = q;
    }
    QSeries ys = solve_trinomial_std(fam.B, N);
    CSeries base = ys.map([](const Rat& x) { return Cyclo(x); });
    for (int j = 1; j <= fam.m; ++j)
        fam.y.push_back(base.scaled(Cyclo::root(fam.m, static_cast<long>(j - 1) * step), 1));
    return fam;
}

RootFamily roots_near_beta0(int p, int q, int N) { return root_family(Part::I, p, q, N); }
RootFamily roots_near_g0(int p, int q, int N) { return root_family(Part::II, p, q, N); }

CSeries root_series(const RootFamily& fam, int j)
{
    const CSeries& y = fam.y.at(static_cast<std::size_t>(j - 1));
    return nth_root(y, fam.m) * Cyclo::root(fam.m, -(j - 1));
}

CSeries trinomial_residual(const RootFamily& fam, int j)
{
    CSeries x = root_series(fam, j);
    int N = x.order();
    CSeries xp = pow_int(x, fam.p);
    CSeries xn = pow_int(x, fam.n);
    CSeries t = CSeries::monomial(N, 1, Cyclo(1));
    if (fam.part == Part::I)
        return xn - xp - t;
    return xn - t * xp - CSeries::constant(N, Cyclo(1));
}

Rat zeta_constant(int p, int q)
{
    int n = p + q;
    Rat z = Rat(n).pow(n) / (Rat(p).pow(p) * Rat(q).pow(q));
    return q % 2 ? -z : z;
}

CSeries substitute_monomial(const PSeries& f, const Rat& c, int k, int N)
{
    CSeries out(N);
    Rat pw(1);
    for (int i = 0; i * k <= N; ++i) {
        if (i > f.order())
            throw std::invalid_argument("substitute_monomial: series too short");
        out[i * k] = Cyclo(f[i] * ParamRat(pw));
        pw *= c;
    }
    return out;
}

CSeries kernel_side(const CSeries& y, const ParamRat& A, const Kernel& K)
{
    return pow_param(y, Cyclo(A)) * eval_kernel(K, y);
}

std::pair<MPoly, PSeries> clear_denominators(const PSeries& s)
{
    MPoly D(1);
    for (int k = 0; k <= s.order(); ++k) {
        const MPoly& d = s[k].den();
        if (d.is_constant())
            continue;
        MPoly q;
        if (try_div(D, d, q))
            continue;
        if (try_div(d, D, q)) {
            D = d;
            continue;
        }
        D = D * exact_div(d, gcd(D, d));
    }
    ParamRat Dp(D);
    return {D, s.map([&](const ParamRat& x) { return x * Dp; })};
}

PSeries divide_by(const PSeries& s, const MPoly& D)
{
    ParamRat inv(MPoly(1), D);
    return s.map([&](const ParamRat& x) { return x * inv; });
}

CSeries divide_by(const CSeries& s, const MPoly& D)
{
    Cyclo inv{ParamRat(MPoly(1), D)};
    return s.map([&](const Cyclo& x) { return x * inv; });
}

PSeries compose_cleared(const PSeries& outer, const PSeries& inner)
{
    auto [D, P] = clear_denominators(outer);
    return divide_by(compose(P, inner), D);
}

CSeries compose_cleared(const PSeries& outer, const CSeries& inner)
{
    auto [D, P] = clear_denominators(outer);
    return divide_by(compose(lift(P), inner), D);
}

std::pair<MPoly, CSeries> series_kernel_side_cleared(const CSeries& y, const ParamRat& A, const PSeries& G)
{
    CSeries w = CSeries::constant(y.order(), Cyclo(1)) - series_inverse(y);
    auto [D, P] = clear_denominators(G);
    return {D, pow_param(y, Cyclo(A)) * compose(lift(P), w)};
}

CSeries series_kernel_side(const CSeries& y, const ParamRat& A, const PSeries& G)
{
    auto [D, num] = series_kernel_side_cleared(y, A, G);
    return divide_by(num, D);
}

}  // namespace thyp
