#include "thyp/hypergeom.hpp"

namespace thyp {

namespace {

void screen_lower(const std::vector<ParamRat>& lower)
{
    for (const auto& b : lower) {
        if (!b.is_constant())
            continue;
        Rat v = b.constant_value();
        if (v.is_integer() && v.sign() <= 0)
            throw ConstraintError("lower parameter " + v.str() + " is a non-positive integer");
    }
}

}  // namespace

PSeries hyp_series(const HypSpec& spec, int N)
{
    screen_lower(spec.lower);
    PSeries s(N);
    s[0] = ParamRat(1);
    for (int k = 0; k < N; ++k) {
        ParamRat num(1), den(k + 1);
        for (const auto& a : spec.upper)
            num *= a + ParamRat(k);
        if (num.is_zero()) {
            // terminating series
            return s;
        }
        for (const auto& b : spec.lower)
            den *= b + ParamRat(k);
        if (den.is_zero())
            throw ConstraintError("hypergeometric coefficient has a vanishing denominator");
        s[k + 1] = s[k] * (num / den);
    }
    return s;
}

ParamRat hyp_excess(const HypSpec& spec)
{
    ParamRat s;
    for (const auto& b : spec.lower)
        s += b;
    for (const auto& a : spec.upper)
        s -= a;
    return s;
}

PSeries apply_Dn(const HypSpec& spec, const PSeries& f)
{
    int N = f.order();
    PSeries out(N);
    for (int k = 0; k <= N; ++k) {
        ParamRat t(k);
        for (const auto& b : spec.lower)
            t *= ParamRat(k) + b - ParamRat(1);
        ParamRat v = t * f[k];
        if (k > 0) {
            ParamRat u(1);
            for (const auto& a : spec.upper)
                u *= ParamRat(k - 1) + a;
            v -= u * f[k - 1];
        }
        out[k] = v;
    }
    return out;
}

HypSpec frobenius_spec(const HypSpec& spec, std::size_t j)
{
    const ParamRat& bj = spec.lower.at(j);
    HypSpec g;
    for (const auto& a : spec.upper)
        g.upper.push_back(a - bj + ParamRat(1));
    for (std::size_t i = 0; i < spec.lower.size(); ++i)
        if (i != j)
            g.lower.push_back(spec.lower[i] - bj + ParamRat(1));
    g.lower.push_back(ParamRat(2) - bj);
    return g;
}

QSeries hyp_series_limit(const std::vector<Affine>& upper, const std::vector<Affine>& lower,
                         const Rat& t0, int N)
{
    QSeries s(N);
    // running coefficient = value * (t - t0)^order
    Rat value(1);
    long order = 0;
    s[0] = Rat(1);
    for (int k = 0; k < N; ++k) {
        for (const auto& a : upper) {
            Rat w = a.at(t0) + Rat(k);
            if (!w.is_zero())
                value *= w;
            else if (a.slope.is_zero())
                value = Rat(0);
            else {
                value *= a.slope;
                ++order;
            }
        }
        for (const auto& b : lower) {
            Rat w = b.at(t0) + Rat(k);
            if (!w.is_zero())
                value /= w;
            else if (b.slope.is_zero())
                throw ConstraintError("lower parameter is a non-positive integer along the path");
            else {
                value /= b.slope;
                --order;
            }
        }
        value /= Rat(k + 1);
        if (order < 0 && !value.is_zero())
            throw ConstraintError("coefficient diverges in the limit");
        s[k + 1] = order > 0 ? Rat(0) : value;
    }
    return s;
}

PSeries degenerate_limit(const std::vector<ParamRat>& a, const std::vector<ParamRat>& b, int m,
                         int mprime, const ParamRat& alpha, int N)
{
    if (mprime < 0 || m < mprime)
        throw ConstraintError("degenerate_limit requires 0 <= m' <= m");
    PSeries out(N);
    if (m + 1 > N)
        return out;
    ParamRat pre = alpha * ParamRat(((m - mprime) % 2) ? -1 : 1) * ParamRat(binomial(m, mprime).inverse());
    for (const auto& x : a)
        pre *= pochhammer(x, m + 1);
    for (const auto& x : b)
        pre /= pochhammer(x, m + 1);
    pre /= ParamRat(factorial(m + 1));
    HypSpec spec;
    for (const auto& x : a)
        spec.upper.push_back(x + ParamRat(m + 1));
    spec.upper.push_back(ParamRat(m - mprime + 1));
    for (const auto& x : b)
        spec.lower.push_back(x + ParamRat(m + 1));
    spec.lower.push_back(ParamRat(m + 2));
    PSeries h = hyp_series(spec, N - m - 1);
    for (int k = 0; k + m + 1 <= N; ++k)
        out[k + m + 1] = pre * h[k];
    return out;
}

}  // namespace thyp
