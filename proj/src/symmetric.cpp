#include "thyp/symmetric.hpp"

#include "thyp/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace thyp {

namespace {

void check_slots(int k)
{
    if (k < 1 || k > kMaxVars)
        throw std::invalid_argument("symmetric: number of generators out of range");
}

MPoly gen(int i) { return MPoly::var(i - 1); }

ParamRat xvar(int i) { return ParamRat::var(i - 1); }

void check_coprime(int p, int q)
{
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw ConstraintError("p, q must be coprime positive integers");
}

}  // namespace

MPoly power_sum_in_elementary(int gamma, int n)
{
    check_slots(n);
    auto e = [n](int l) { return l >= 1 && l <= n ? gen(l) : MPoly(); };
    std::vector<MPoly> D{MPoly(1)};
    for (int k = 1; k <= gamma; ++k) {
        MPoly d;
        for (int j = 0; j < k; ++j) {
            // row k-1 of the Hessenberg matrix
            MPoly h = j == 0 ? e(k) * Rat(k) : e(k - j);
            if (h.is_zero())
                continue;
            MPoly t = h * D[static_cast<std::size_t>(j)];
            if ((k - 1 - j) % 2)
                d -= t;
            else
                d += t;
        }
        D.push_back(std::move(d));
    }
    return D.back();
}

MPoly elementary_in_power_sums(int l)
{
    check_slots(std::max(l, 1));
    std::vector<MPoly> E{MPoly(1)};
    for (int k = 1; k <= l; ++k) {
        MPoly s;
        for (int g = 1; g <= k; ++g) {
            MPoly t = gen(g) * E[static_cast<std::size_t>(k - g)];
            if ((g - 1) % 2)
                s -= t;
            else
                s += t;
        }
        E.push_back(s * Rat(1, k));
    }
    return E.back();
}

MPoly substitute_generators(const MPoly& f, const std::vector<MPoly>& gens)
{
    std::vector<std::vector<MPoly>> powers(gens.size());
    auto power = [&](std::size_t i, int e) -> const MPoly& {
        auto& p = powers[i];
        if (p.empty())
            p.push_back(MPoly(1));
        while (static_cast<int>(p.size()) <= e)
            p.push_back(p.back() * gens[i]);
        return p[static_cast<std::size_t>(e)];
    };
    MPoly out;
    for (const auto& [m, c] : f.terms()) {
        MPoly t(c);
        for (int v = 0; v < kMaxVars; ++v) {
            int e = mono_exp(m, v);
            if (e == 0)
                continue;
            if (static_cast<std::size_t>(v) >= gens.size())
                throw std::invalid_argument("substitute_generators: missing generator");
            t *= power(static_cast<std::size_t>(v), e);
        }
        out += t;
    }
    return out;
}

MPoly elementary_poly(int l, int k)
{
    check_slots(k);
    if (l < 0 || l > k)
        return MPoly();
    // coefficient extraction from prod (1 + x_i T)
    std::vector<MPoly> e{MPoly(1)};
    for (int i = 1; i <= k; ++i) {
        e.push_back(MPoly());
        for (int j = i; j >= 1; --j)
            e[static_cast<std::size_t>(j)] += gen(i) * e[static_cast<std::size_t>(j - 1)];
    }
    return e[static_cast<std::size_t>(l)];
}

MPoly power_sum_poly(int g, int k)
{
    check_slots(k);
    MPoly s;
    for (int i = 1; i <= k; ++i)
        s += MPoly::var(i - 1, g);
    return s;
}

MPoly to_elementary(const MPoly& f, int k)
{
    check_slots(k);
    std::vector<MPoly> E;
    for (int l = 1; l <= k; ++l)
        E.push_back(elementary_poly(l, k));
    MPoly rest = f, out;
    while (!rest.is_zero()) {
        auto [m, c] = rest.leading();
        for (int v = k; v < kMaxVars; ++v)
            if (mono_exp(m, v))
                throw std::domain_error("to_elementary: foreign variable");
        Mono target = 0;
        MPoly expand(c);
        for (int i = 0; i < k; ++i) {
            int d = mono_exp(m, i) - (i + 1 < k ? mono_exp(m, i + 1) : 0);
            if (d < 0)
                throw std::domain_error("to_elementary: polynomial is not symmetric");
            target |= mono_of(i, d);
            expand *= E[static_cast<std::size_t>(i)].pow(d);
        }
        out += MPoly::monomial(target, c);
        rest -= expand;
    }
    return out;
}

Rat curve_power_coeff(int mq, int mn, int p, int q)
{
    int n = p + q;
    int s = ((q % 2 == 0) ? mq : 0) + ((n % 2 == 0) ? mn : 0);
    int tot = mq + mn - 1;
    Rat c = Rat(q) * binom_ext(Rat(tot), mn) + Rat(n) * binom_ext(Rat(tot), mq);
    return s % 2 ? -c : c;
}

MPoly power_sum_on_curve(int gamma, int p, int q)
{
    check_coprime(p, q);
    if (gamma < 1)
        throw std::invalid_argument("power_sum_on_curve: gamma must be positive");
    int n = p + q;
    MPoly out;
    for (int mn = 0; mn * n <= gamma; ++mn) {
        int r = gamma - mn * n;
        if (r % q)
            continue;
        int mq = r / q;
        out += MPoly::monomial(mono_of(0, mq) | mono_of(1, mn), curve_power_coeff(mq, mn, p, q));
    }
    return out;
}

std::pair<int, int> hat_sigma_range(int k, int p, int q, int branch)
{
    int n = p + q;
    if (branch == 1)
        return {0, std::min(q - 1, n - k)};
    return {std::max(q - k + 1, 0), n - k};
}

ParamRat hat_sigma(int m, int k, int p, int q, int branch, const ParamRat& sigma_n)
{
    check_coprime(p, q);
    int n = p + q;
    if (k < 1 || k >= n || k > kMaxVars)
        throw std::invalid_argument("hat_sigma: need 0 < k < n");
    auto [lo, hi] = hat_sigma_range(k, p, q, branch);
    if (m < lo || m > hi)
        throw std::invalid_argument("hat_sigma: m outside the branch range");
    ParamRat s;
    for (int j = 1; j <= k; ++j) {
        ParamRat prod(1);
        for (int l = 1; l <= k; ++l)
            if (l != j)
                prod *= branch == 1 ? xvar(j) - xvar(l) : xvar(l) - xvar(j);
        int e = branch == 1 ? m + k - 1 : m - (n - k) - 1;
        s += xvar(j).pow(e) / prod;
    }
    if (branch == 1)
        return m % 2 ? -s : s;
    s *= sigma_n;
    return (m - (n - k)) % 2 ? -s : s;
}

PairElimination k2_elimination(int p, int q)
{
    check_coprime(p, q);
    int n = p + q;
    const ParamRat x1 = xvar(1), x2 = xvar(2);
    auto sgn = [](int e) { return ParamRat(e % 2 ? -1 : 1); };
    PairElimination r;
    r.sigma_n = sgn(n) * (x1 * x2).pow(p) * (x1.pow(q) - x2.pow(q)) / (x1.pow(p) - x2.pow(p));
    r.sigma_q = sgn(q - 1) * (x1.pow(n) - x2.pow(n)) / (x1.pow(p) - x2.pow(p));
    Rat z = Rat(n).pow(n) / (Rat(p).pow(p) * Rat(q).pow(q));
    r.zeta = sgn(n) * ParamRat(z) * r.sigma_n.pow(q) / r.sigma_q.pow(n);

    const int tv = 2;
    const ParamRat t = ParamRat::var(tv);
    std::map<int, ParamRat> at{{0, t + ParamRat(1)}, {1, t - ParamRat(1)}};
    auto in_t = [&](const ParamRat& f) {
        ParamRat g = f.subst(at);
        return QRatFunc(from_mpoly(g.num(), tv), from_mpoly(g.den(), tv));
    };
    r.sigma_n_t = in_t(r.sigma_n);
    r.sigma_q_t = in_t(r.sigma_q);
    r.zeta_t = in_t(r.zeta);
    ParamRat s = -(x2.pow(p) / x1.pow(q)) * (x1.pow(q) - x2.pow(q)) / (x1.pow(p) - x2.pow(p));
    ParamRat s_alt = ParamRat(1) - (x1.pow(n) - x2.pow(n)) / (x1.pow(q) * (x1.pow(p) - x2.pow(p)));
    r.s_t = in_t(s);
    r.s_t_alt = in_t(s_alt);
    return r;
}

UPoly<ParamRat> coset_poly(int q, int m)
{
    if (q < 2 || q > 4)
        throw std::invalid_argument("coset_poly: supported for 2 <= q <= 4");
    if (m == 0)
        throw std::invalid_argument("coset_poly: m must be nonzero");
    std::vector<int> chi(static_cast<std::size_t>(q));
    std::iota(chi.begin(), chi.end(), 1);
    UPoly<Cyclo> G(Cyclo(1));
    do {
        Cyclo L(0);
        for (int j = 1; j <= q; ++j)
            L += Cyclo::root(q, static_cast<long>(j - 1) * m) * Cyclo(xvar(chi[static_cast<std::size_t>(j - 1)]).pow(m));
        Cyclo Lq(1);
        for (int i = 0; i < q; ++i)
            Lq *= L;
        G *= UPoly<Cyclo>(std::vector<Cyclo>{-Lq, Cyclo(1)});
    } while (std::next_permutation(chi.begin() + 1, chi.end()));
    std::vector<ParamRat> c;
    for (const auto& x : G.coeffs()) {
        if (!x.is_scalar())
            throw std::domain_error("coset_poly: coefficient keeps a root of unity");
        c.push_back(x.scalar_part());
    }
    return UPoly<ParamRat>(std::move(c));
}

}  // namespace thyp
