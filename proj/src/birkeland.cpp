#include "thyp/birkeland.hpp"

namespace thyp {

namespace {

struct Shape {
    int m;     // number of roots, conductor
    int step;  // z_j = eps_m^{step (j-1)} t
    int d;     // n (part I) or q (part II): shift in (a + d kappa / m)
    Rat zc;    // zeta (part I) or 1/zeta (part II) equals zc * t^m
    ParamRat B;
};

Shape shape_of(const TrinomialCase& tc)
{
    int n = tc.p + tc.q;
    if (tc.part == Part::I)
        return {tc.q, n, n, zeta_constant(tc.p, tc.q), ParamRat(Rat(-tc.p, tc.q))};
    return {n, tc.q, tc.q, zeta_constant(tc.p, tc.q).inverse(), ParamRat(Rat(tc.p, n))};
}

void check_case(const TrinomialCase& tc, const Shape& s)
{
    if (tc.kappa < 0 || tc.kappa >= s.m)
        throw ConstraintError("kappa out of range");
    if (tc.j < 1 || tc.j > s.m)
        throw ConstraintError("root index j out of range");
}

ParamRat frac(const ParamRat& x, int d) { return x / ParamRat(d); }

CSeries monomial_times(const PSeries& h, const Shape& s, int kappa, int N)
{
    CSeries out(N);
    if (kappa > N)
        return out;
    CSeries inner = substitute_monomial(h, s.zc, s.m, N - kappa);
    for (int i = 0; i + kappa <= N; ++i)
        out[i + kappa] = inner[i];
    return out;
}

CSeries root_kernel_side(const TrinomialCase& tc, const RootFamily& fam, int j, int N, bool interp)
{
    const CSeries& y = fam.y.at(static_cast<std::size_t>(j - 1));
    ParamRat A = -tc.a;
    ParamRat B(fam.B);
    if (!interp)
        return kernel_side(y, A, F_ell(tc.l, A, B));
    return series_kernel_side(y, A, G_series(tc.l, A, B, -tc.c, N));
}

CSeries averaged_roots(const TrinomialCase& tc, const Shape& s, int N, bool interp)
{
    RootFamily fam = root_family(tc.part, tc.p, tc.q, N);
    CSeries sum(N);
    for (int j = 1; j <= s.m; ++j) {
        Cyclo w = Cyclo::root(s.m, -static_cast<long>(s.step) * (j - 1) * tc.kappa);
        sum += root_kernel_side(tc, fam, j, N, interp) * w;
    }
    return sum * Cyclo(Rat(1, s.m));
}

}  // namespace

HypSpec inverse_spec(const TrinomialCase& tc)
{
    int p = tc.p, q = tc.q, n = p + q, k = tc.kappa;
    const ParamRat& a = tc.a;
    HypSpec h;
    if (tc.part == Part::I) {
        ParamRat sh(Rat(k, q));
        for (int i = 0; i < n; ++i)
            h.upper.push_back(frac(a + ParamRat(i), n) + sh);
        for (int i = 1; i <= p; ++i)
            h.lower.push_back(frac(a - ParamRat(tc.l) + ParamRat(i), p) + sh);
        for (int i = 1; i <= q; ++i)
            if (i != q - k)
                h.lower.push_back(ParamRat(Rat(i + k, q)));
    } else {
        ParamRat sh(Rat(k, n));
        for (int i = 0; i < p; ++i)
            h.upper.push_back(frac(-a + ParamRat(tc.l + i), p) + sh);
        for (int i = 0; i < q; ++i)
            h.upper.push_back(frac(a + ParamRat(i), q) + sh);
        for (int i = 1; i <= n; ++i)
            if (i != n - k)
                h.lower.push_back(ParamRat(Rat(i + k, n)));
    }
    return h;
}

HypSpec interp_spec(const TrinomialCase& tc)
{
    int p = tc.p, q = tc.q, n = p + q, k = tc.kappa;
    const ParamRat &a = tc.a, &c = tc.c;
    ParamRat L(tc.l);
    HypSpec h;
    if (tc.part == Part::I) {
        ParamRat sh(Rat(k, q));
        for (int i = 0; i < n; ++i)
            h.upper.push_back(frac(a + ParamRat(i), n) + sh);
        h.upper.push_back(frac(a + c - L, p) + sh);
        for (int i = 0; i < p; ++i)
            h.lower.push_back(frac(a - L + ParamRat(i), p) + sh);
        for (int i = 1; i <= q; ++i)
            if (i != q - k)
                h.lower.push_back(ParamRat(Rat(i + k, q)));
        h.lower.push_back(frac(a + c - L + ParamRat(p), p) + sh);
    } else {
        ParamRat sh(Rat(k, n));
        for (int i = 1; i <= p; ++i)
            h.upper.push_back(frac(-a + L + ParamRat(i), p) + sh);
        for (int i = 0; i < q; ++i)
            h.upper.push_back(frac(a + ParamRat(i), q) + sh);
        h.upper.push_back(frac(-a - c + L, p) + sh);
        for (int i = 1; i <= n; ++i)
            if (i != n - k)
                h.lower.push_back(ParamRat(Rat(i + k, n)));
        h.lower.push_back(frac(-a - c + L + ParamRat(p), p) + sh);
    }
    return h;
}

ParamRat expansion_coeff(const TrinomialCase& tc)
{
    Shape s = shape_of(tc);
    int k = tc.kappa;
    ParamRat sgn(k % 2 ? -1 : 1);
    ParamRat x = tc.a + ParamRat(Rat(s.d * k, s.m));
    return sgn * pochhammer(tc.a, 1 - tc.l) / (pochhammer(x, 1 - tc.l - k) * ParamRat(factorial(k)));
}

ParamRat interp_prefactor(const TrinomialCase& tc)
{
    Shape s = shape_of(tc);
    int k = tc.kappa;
    ParamRat sgn(k % 2 ? -1 : 1);
    ParamRat x = tc.a + ParamRat(Rat(s.d * k, s.m));
    ParamRat acl = tc.a + tc.c - ParamRat(tc.l);
    ParamRat shift(tc.part == Part::I ? Rat(tc.p * k, s.m) : Rat(-tc.p * k, s.m));
    return sgn * ParamRat(factorial(k)) * pochhammer(x, -tc.l - k) * (acl + shift) /
           (pochhammer(tc.a, -tc.l) * acl);
}

Sides forward_sides(const TrinomialCase& tc, int N)
{
    Shape s = shape_of(tc);
    check_case(tc, s);
    RootFamily fam = root_family(tc.part, tc.p, tc.q, N);
    Sides out;
    out.lhs = root_kernel_side(tc, fam, tc.j, N, false);
    ParamRat A = -tc.a;
    int l = tc.l;
    PSeries b = binomial_side([&](long k) { return f_ell(l, A, s.B, k); }, A, s.B, N);
    out.rhs = lift(b).scaled(Cyclo::root(s.m, static_cast<long>(s.step) * (tc.j - 1)), 1);
    return out;
}

Sides expansion_sides(const TrinomialCase& tc, int N)
{
    Shape s = shape_of(tc);
    check_case(tc, s);
    RootFamily fam = root_family(tc.part, tc.p, tc.q, N);
    Sides out;
    out.lhs = root_kernel_side(tc, fam, tc.j, N, false);
    out.rhs = CSeries(N);
    for (int k = 0; k < s.m && k <= N; ++k) {
        TrinomialCase t = tc;
        t.kappa = k;
        PSeries h = hyp_series(inverse_spec(t), (N - k) / s.m);
        Cyclo w = Cyclo::root(s.m, static_cast<long>(s.step) * (tc.j - 1) * k);
        out.rhs += monomial_times(h, s, k, N) * (w * Cyclo(expansion_coeff(t)));
    }
    return out;
}

Sides inverse_sides(const TrinomialCase& tc, int N)
{
    Shape s = shape_of(tc);
    check_case(tc, s);
    Sides out;
    PSeries h = hyp_series(inverse_spec(tc), tc.kappa > N ? 0 : (N - tc.kappa) / s.m);
    out.lhs = monomial_times(h, s, tc.kappa, N);
    out.rhs = averaged_roots(tc, s, N, false) * Cyclo(expansion_coeff(tc).inverse());
    return out;
}

Sides interp_sides(const TrinomialCase& tc, int N)
{
    Shape s = shape_of(tc);
    check_case(tc, s);
    if (tc.l != 0 && tc.l != 1)
        throw ConstraintError("interpolated form is defined for l = 0, 1");
    Sides out;
    PSeries h = hyp_series(interp_spec(tc), tc.kappa > N ? 0 : (N - tc.kappa) / s.m);
    out.lhs = monomial_times(h, s, tc.kappa, N);
    // the root sides share the denominator of G
    RootFamily fam = root_family(tc.part, tc.p, tc.q, N);
    PSeries G = G_series(tc.l, -tc.a, ParamRat(fam.B), -tc.c, N);
    CSeries sum(N);
    MPoly D(1);
    for (int j = 1; j <= s.m; ++j) {
        Cyclo w = Cyclo::root(s.m, -static_cast<long>(s.step) * (j - 1) * tc.kappa);
        auto [Dj, num] = series_kernel_side_cleared(fam.y.at(static_cast<std::size_t>(j - 1)), -tc.a, G);
        D = Dj;
        sum += num * w;
    }
    ParamRat pref = interp_prefactor(tc) * ParamRat(Rat(1, s.m));
    out.rhs = sum * Cyclo(ParamRat(pref.num()));
    out.rhs_den = D * pref.den();
    return out;
}

int first_mismatch(const Sides& s)
{
    int N = std::min(s.lhs.order(), s.rhs.order());
    bool plain = s.lhs_den == MPoly(1) && s.rhs_den == MPoly(1);
    Cyclo ld{ParamRat(s.lhs_den)}, rd{ParamRat(s.rhs_den)};
    for (int k = 0; k <= N; ++k) {
        if (plain ? s.lhs[k] != s.rhs[k] : s.lhs[k] * rd != s.rhs[k] * ld)
            return k;
    }
    return -1;
}

std::string mismatch_value(const Sides& s, int k)
{
    if (s.lhs_den.is_constant() && s.rhs_den.is_constant())
        return (s.lhs[k] * Cyclo(ParamRat(s.lhs_den.constant_value().inverse())) -
                s.rhs[k] * Cyclo(ParamRat(s.rhs_den.constant_value().inverse())))
            .str();
    Cyclo diff = s.lhs[k] * Cyclo(ParamRat(s.rhs_den)) - s.rhs[k] * Cyclo(ParamRat(s.lhs_den));
    return "(" + diff.str() + ")/(" + (s.lhs_den * s.rhs_den).str() + ")";
}

}  // namespace thyp
