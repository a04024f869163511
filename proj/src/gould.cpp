#include "thyp/gould.hpp"

#include <map>
#include <mutex>

namespace thyp {

namespace {

const ParamRat PA = ParamRat::var(kA);
const ParamRat PB = ParamRat::var(kB);
const ParamRat one(1);

ParamRat sgn(long n) { return ParamRat(n % 2 ? -1 : 1); }

}  // namespace

std::vector<ParamRat> vandermonde_transform(const std::function<ParamRat(long)>& f, const ParamRat& A,
                                            const ParamRat& B, int N)
{
    std::vector<ParamRat> fk;
    for (long k = 0; k <= N; ++k)
        fk.push_back(f(k));
    std::vector<ParamRat> out;
    for (int n = 0; n <= N; ++n) {
        ParamRat s;
        for (int k = 0; k <= n; ++k)
            s += sgn(k) * ParamRat(binomial(n, k)) * binom_ext(A + B * ParamRat(k), n) * fk[k];
        out.push_back(s);
    }
    return out;
}

ParamRat fin_diff_pow(const ParamRat& h, int n, const ParamRat& B)
{
    ParamRat s;
    for (int k = 0; k <= n; ++k)
        s += sgn(n - k) * ParamRat(binomial(n, k)) * h.subst({{kA, PA + ParamRat(k) * B}});
    return s;
}

ParamRat f_ell(int l, const ParamRat& A, const ParamRat& B, long k)
{
    return pochhammer(A + B * ParamRat(static_cast<int>(k)) + one, l - 1) / pochhammer(A + one, l - 1);
}

ParamRat hatf_ell(int l, int n)
{
    ParamRat h = pochhammer(PA - ParamRat(n) + one, n + l - 1);
    return sgn(n) / (ParamRat(factorial(n)) * pochhammer(PA + one, l - 1)) * fin_diff_pow(h, n, PB);
}

UPoly<ParamRat> as_upoly(const MPoly& p, int v)
{
    std::vector<ParamRat> c;
    for (const auto& x : p.coeffs_in(v))
        c.emplace_back(x);
    return UPoly<ParamRat>(std::move(c));
}

Kernel kernel_derivative(const Kernel& K)
{
    const MPoly& n = K.num();
    const MPoly& d = K.den();
    return ParamRat(n.derivative(kY) * d - n * d.derivative(kY), d * d);
}

Kernel ladder_step(const Kernel& F, int l)
{
    const ParamRat y = ParamRat::var(kY);
    Kernel Ft = F.subst({{kA, PA - PB + one}});
    Kernel inner = (PA - PB + one) * Ft + y * kernel_derivative(Ft);
    ParamRat pre = pochhammer(PA - PB + ParamRat(2), l - 1) / pochhammer(PA + one, l);
    return pre * y * inner / ((one - PB) * y + PB);
}

const Kernel& F_ell_symbolic(int l)
{
    static std::map<int, Kernel> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(l);
    if (it != cache.end())
        return it->second;
    Kernel K;
    if (l <= 0) {
        const ParamRat y = ParamRat::var(kY);
        int m = -l;
        for (int n = 0; n <= m; ++n)
            K += hatf_ell(l, n) * (one - y).pow(n) * y.pow(m - n);
        K /= y.pow(m);
    } else {
        K = ladder_step(F_ell_symbolic(l - 1), l - 1);
    }
    return cache.emplace(l, std::move(K)).first->second;
}

Kernel F_ell(int l, const ParamRat& A, const ParamRat& B)
{
    return F_ell_symbolic(l).subst({{kA, A}, {kB, B}});
}

ParamRat g_ell(int l, const ParamRat& A, const ParamRat& B, const ParamRat& C, long k)
{
    ParamRat s = A + C + ParamRat(l);
    return s / (s + B * ParamRat(static_cast<int>(k))) * f_ell(l + 1, A, B, k);
}

std::vector<ParamRat> hatg_ell(int l, const ParamRat& A, const ParamRat& B, const ParamRat& C, int N)
{
    std::vector<ParamRat> out;
    if (l == 0) {
        ParamRat b = (A + C) / B + one;
        for (int n = 0; n <= N; ++n)
            out.push_back(sgn(n) * pochhammer(C, n) / pochhammer(b, n));
        return out;
    }
    if (l != 1)
        throw ConstraintError("hatg_ell is defined for l = 0, 1");
    ParamRat e = (A + one) / (B - one);
    ParamRat b = (A + C + one) / B + one;
    ParamRat prev;
    for (int n = 0; n <= N; ++n) {
        ParamRat rhs = sgn(n) * pochhammer(C, n) * pochhammer(e + one, n) / (pochhammer(b, n) * pochhammer(e, n));
        prev = rhs - B * prev;
        out.push_back(prev);
    }
    return out;
}

PSeries G_series(int l, const ParamRat& A, const ParamRat& B, const ParamRat& C, int N)
{
    if (l == 0)
        return hyp_series({{C, one}, {(A + C) / B + one}}, N);
    if (l != 1)
        throw ConstraintError("G_l is defined for l = 0, 1");
    ParamRat e = (A + one) / (B - one);
    PSeries h = hyp_series({{C, e + one, one}, {(A + C + one) / B + one, e}}, N);
    PSeries geo(N);
    ParamRat pw(1);
    for (int k = 0; k <= N; ++k) {
        geo[k] = pw;
        pw *= B;
    }
    return h * geo;
}

PSeries binomial_side(const std::function<ParamRat(long)>& coeff, const ParamRat& A, const ParamRat& B,
                      int N)
{
    PSeries s(N);
    s[0] = one;
    for (int k = 1; k <= N; ++k)
        s[k] = coeff(k) * binom_ext(A + B * ParamRat(k), k);
    return s;
}

}  // namespace thyp
