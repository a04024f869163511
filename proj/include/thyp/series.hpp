#pragma once

#include "thyp/upoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace thyp {

// Coefficient kernels for truncated multiplication: out[k] = sum a[i] b[k-i], k <= N.
template <class R>
void series_mul_serial(const std::vector<R>& a, const std::vector<R>& b, std::vector<R>& out, int N)
{
    out.assign(static_cast<std::size_t>(N) + 1, R(0));
    for (int k = 0; k <= N; ++k) {
        R acc(0);
        for (int i = 0; i <= k; ++i) {
            const R& x = a[static_cast<std::size_t>(i)];
            const R& y = b[static_cast<std::size_t>(k - i)];
            if (!is_zero(x) && !is_zero(y))
                acc += x * y;
        }
        out[static_cast<std::size_t>(k)] = std::move(acc);
    }
}

template <class R>
void series_mul_parallel(const std::vector<R>& a, const std::vector<R>& b, std::vector<R>& out, int N)
{
    out.assign(static_cast<std::size_t>(N) + 1, R(0));
#pragma omp parallel for schedule(dynamic)
    for (int k = N; k >= 0; --k) {
        R acc(0);
        for (int i = 0; i <= k; ++i) {
            const R& x = a[static_cast<std::size_t>(i)];
            const R& y = b[static_cast<std::size_t>(k - i)];
            if (!is_zero(x) && !is_zero(y))
                acc += x * y;
        }
        out[static_cast<std::size_t>(k)] = std::move(acc);
    }
}

// Selects the kernel used by TruncSeries multiplication.
void set_parallel_series(bool on);
bool parallel_series();

// Power series truncated after x^N: coefficients c_0..c_N are exact.
template <class R>
class TruncSeries {
public:
    TruncSeries() : c_(1, R(0)) {}
    explicit TruncSeries(int N) : c_(static_cast<std::size_t>(check(N)) + 1, R(0)) {}
    TruncSeries(int N, std::vector<R> c) : c_(std::move(c))
    {
        c_.resize(static_cast<std::size_t>(check(N)) + 1, R(0));
    }
    static TruncSeries constant(int N, const R& c)
    {
        TruncSeries s(N);
        s.c_[0] = c;
        return s;
    }
    static TruncSeries monomial(int N, int k, const R& c)
    {
        TruncSeries s(N);
        if (k <= N)
            s.c_[static_cast<std::size_t>(k)] = c;
        return s;
    }
    static TruncSeries from_poly(int N, const UPoly<R>& p)
    {
        TruncSeries s(N);
        for (int i = 0; i <= std::min(N, p.degree()); ++i)
            s.c_[static_cast<std::size_t>(i)] = p.coeff(i);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    R& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<R>& coeffs() const { return c_; }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const R& x) { return thyp::is_zero(x); });
    }
    // Index of the first nonzero coefficient, or -1.
    int valuation() const
    {
        for (int k = 0; k <= order(); ++k)
            if (!thyp::is_zero(c_[static_cast<std::size_t>(k)]))
                return k;
        return -1;
    }
    TruncSeries truncate(int N) const
    {
        if (N > order())
            throw std::invalid_argument("TruncSeries: cannot raise the order");
        return TruncSeries(N, std::vector<R>(c_.begin(), c_.begin() + N + 1));
    }
    // Divide by x^k; the first k coefficients must vanish. Order drops by k.
    TruncSeries shift_down(int k) const
    {
        for (int i = 0; i < k; ++i)
            if (!thyp::is_zero(c_[static_cast<std::size_t>(i)]))
                throw std::domain_error("TruncSeries: shift_down of a nonzero low coefficient");
        return TruncSeries(order() - k, std::vector<R>(c_.begin() + k, c_.end()));
    }
    // Multiply by x^k, order kept.
    TruncSeries shift_up(int k) const
    {
        TruncSeries s(order());
        for (int i = 0; i + k <= order(); ++i)
            s.c_[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)];
        return s;
    }
    // Coefficients below k set to zero.
    TruncSeries tail_from(int k) const
    {
        TruncSeries s = *this;
        for (int i = 0; i < std::min(k, order() + 1); ++i)
            s.c_[static_cast<std::size_t>(i)] = R(0);
        return s;
    }
    // f(c x^q)
    TruncSeries scaled(const R& c, int q) const
    {
        TruncSeries s(order());
        R pw(1);
        for (int i = 0; i * q <= order(); ++i) {
            s.c_[static_cast<std::size_t>(i * q)] = c_[static_cast<std::size_t>(i)] * pw;
            pw *= c;
        }
        return s;
    }
    // Coefficientwise image under f, possibly into another ring.
    template <class F>
    auto map(F f) const
    {
        using S = std::decay_t<std::invoke_result_t<F, const R&>>;
        std::vector<S> out;
        out.reserve(c_.size());
        for (const auto& c : c_)
            out.push_back(f(c));
        return TruncSeries<S>(order(), std::move(out));
    }

    TruncSeries operator-() const
    {
        return map([](const R& x) { return -x; });
    }
    TruncSeries& operator+=(const TruncSeries& o)
    {
        clip(o.order());
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o)
    {
        clip(o.order());
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    TruncSeries& operator*=(const R& s)
    {
        for (auto& c : c_)
            c *= s;
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { a += b; return a; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { a -= b; return a; }
    friend TruncSeries operator*(TruncSeries a, const R& s) { a *= s; return a; }
    friend TruncSeries operator*(const R& s, TruncSeries a) { a *= s; return a; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        int N = std::min(a.order(), b.order());
        std::vector<R> out;
        if (parallel_series())
            series_mul_parallel(a.c_, b.c_, out, N);
        else
            series_mul_serial(a.c_, b.c_, out, N);
        return TruncSeries(N, std::move(out));
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "z") const
    {
        std::string s;
        for (int k = 0; k <= order(); ++k) {
            if (thyp::is_zero(c_[static_cast<std::size_t>(k)]))
                continue;
            if (!s.empty())
                s += " + ";
            s += "(" + to_string(c_[static_cast<std::size_t>(k)]) + ")*" + var + "^" + std::to_string(k);
        }
        return (s.empty() ? "0" : s) + " + O(" + var + "^" + std::to_string(order() + 1) + ")";
    }

private:
    static int check(int N)
    {
        if (N < 0)
            throw std::invalid_argument("TruncSeries: negative order");
        return N;
    }
    void clip(int N)
    {
        if (N < order())
            c_.resize(static_cast<std::size_t>(N) + 1);
    }
    std::vector<R> c_;
};

template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& f)
{
    if (is_zero(f[0]))
        throw std::domain_error("series_inverse: constant term not invertible");
    int N = f.order();
    TruncSeries<R> g(N);
    R i0 = inverse(f[0]);
    g[0] = i0;
    for (int k = 1; k <= N; ++k) {
        R acc(0);
        for (int j = 1; j <= k; ++j)
            if (!is_zero(f[j]) && !is_zero(g[k - j]))
                acc += f[j] * g[k - j];
        g[k] = -(acc * i0);
    }
    return g;
}

template <class R>
TruncSeries<R> series_div(const TruncSeries<R>& a, const TruncSeries<R>& b)
{
    return a * series_inverse(b);
}

// f^alpha for f_0 = 1, from the recurrence f g' = alpha f' g.
template <class R>
TruncSeries<R> pow_param(const TruncSeries<R>& f, const R& alpha)
{
    if (!(f[0] == R(1)))
        throw std::domain_error("pow_param: constant term must be 1");
    int N = f.order();
    TruncSeries<R> g(N);
    g[0] = R(1);
    R a1 = alpha + R(1);
    for (int k = 1; k <= N; ++k) {
        R acc(0);
        for (int j = 1; j <= k; ++j) {
            if (is_zero(f[j]) || is_zero(g[k - j]))
                continue;
            acc += (a1 * R(j) - R(k)) * f[j] * g[k - j];
        }
        g[k] = acc * R(Rat(1, k));
    }
    return g;
}

template <class R>
TruncSeries<R> pow_int(const TruncSeries<R>& f, long e)
{
    if (e < 0)
        return pow_int(series_inverse(f), -e);
    TruncSeries<R> r = TruncSeries<R>::constant(f.order(), R(1)), b = f;
    while (e > 0) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return r;
}

template <class R>
TruncSeries<R> nth_root(const TruncSeries<R>& f, int n)
{
    return pow_param(f, R(Rat(1, n)));
}

// outer(inner(x)) with inner(0) = 0.
template <class R>
TruncSeries<R> compose(const TruncSeries<R>& outer, const TruncSeries<R>& inner)
{
    if (!is_zero(inner[0]))
        throw std::domain_error("compose: inner series must vanish at 0");
    int N = inner.order();
    int v = inner.valuation();
    if (v < 0)
        return TruncSeries<R>::constant(N, outer[0]);
    int top = std::min(outer.order(), N / v);
    TruncSeries<R> acc = TruncSeries<R>::constant(N, outer[top]);
    for (int k = top - 1; k >= 0; --k) {
        acc = acc * inner;
        acc[0] += outer[k];
    }
    return acc;
}

template <class R>
TruncSeries<R> eval_poly(const UPoly<R>& p, const TruncSeries<R>& x)
{
    int N = x.order();
    TruncSeries<R> acc(N);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x;
        acc[0] += p.coeff(i);
    }
    return acc;
}

template <class R>
TruncSeries<R> eval_ratfunc(const RatFunc<R>& f, const TruncSeries<R>& x)
{
    return series_div(eval_poly(f.num(), x), eval_poly(f.den(), x));
}

template <class R>
TruncSeries<R> from_ratfunc(int N, const RatFunc<R>& f)
{
    return series_div(TruncSeries<R>::from_poly(N, f.num()), TruncSeries<R>::from_poly(N, f.den()));
}

// The root y(z), y(0) = 1, of y - 1 - z y^B = 0, by Newton iteration.
template <class R>
TruncSeries<R> solve_trinomial_std(const R& B, int N)
{
    TruncSeries<R> y = TruncSeries<R>::constant(N, R(1));
    int correct = 0;  // y is exact through this index
    R Bm1 = B - R(1);
    while (correct < N) {
        int prec = std::min(2 * correct + 1, N);
        TruncSeries<R> yp = y.truncate(prec);
        TruncSeries<R> F = yp - pow_param(yp, B).shift_up(1);
        F[0] -= R(1);
        TruncSeries<R> dF = (pow_param(yp, Bm1) * B).shift_up(1);
        dF = -dF;
        dF[0] += R(1);
        TruncSeries<R> step = series_div(F, dF);
        TruncSeries<R> ny(N);
        for (int k = 0; k <= prec; ++k)
            ny[k] = yp[k] - step[k];
        y = ny;
        correct = prec;
    }
    return y;
}

}  // namespace thyp
