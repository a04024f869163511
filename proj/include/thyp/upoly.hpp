#pragma once

#include "thyp/cyclo.hpp"
#include "thyp/mpoly.hpp"
#include "thyp/param_rat.hpp"
#include "thyp/rat.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <type_traits>
#include <vector>

namespace thyp {

// Dense univariate polynomial over a field R, coefficient i of x^i.
template <class R>
class UPoly {
public:
    UPoly() = default;
    UPoly(const R& c)
    {
        if (!thyp::is_zero(c))
            c_.push_back(c);
    }
    explicit UPoly(std::vector<R> c) : c_(std::move(c)) { trim(); }
    static UPoly x(int e = 1)
    {
        std::vector<R> c(static_cast<std::size_t>(e) + 1, R(0));
        c[static_cast<std::size_t>(e)] = R(1);
        return UPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    R coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : R(0); }
    const R& lc() const { return c_.back(); }

    UPoly operator-() const
    {
        UPoly r = *this;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }
    UPoly& operator+=(const UPoly& o)
    {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) { return *this += -o; }
    friend UPoly operator+(UPoly a, const UPoly& b) { a += b; return a; }
    friend UPoly operator-(UPoly a, const UPoly& b) { a -= b; return a; }
    friend UPoly operator*(const UPoly& a, const UPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return UPoly();
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (thyp::is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    friend UPoly operator*(UPoly a, const R& s)
    {
        for (auto& c : a.c_)
            c *= s;
        a.trim();
        return a;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly pow(int e) const
    {
        UPoly r(R(1)), b = *this;
        while (e > 0) {
            if (e & 1)
                r *= b;
            e >>= 1;
            if (e)
                b *= b;
        }
        return r;
    }

    // Quotient and remainder; the divisor's leading coefficient must be invertible.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const
    {
        if (d.is_zero())
            throw std::domain_error("UPoly: division by zero");
        if (degree() < d.degree())
            return {UPoly(), *this};
        std::vector<R> q(static_cast<std::size_t>(degree() - d.degree() + 1), R(0));
        std::vector<R> r = c_;
        R il = inverse(d.lc());
        for (int i = degree(); i >= d.degree(); --i) {
            R f = r[static_cast<std::size_t>(i)] * il;
            if (thyp::is_zero(f))
                continue;
            q[static_cast<std::size_t>(i - d.degree())] = f;
            for (int j = 0; j <= d.degree(); ++j)
                r[static_cast<std::size_t>(i - d.degree() + j)] -= f * d.c_[static_cast<std::size_t>(j)];
        }
        r.resize(static_cast<std::size_t>(d.degree()));
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }
    UPoly exact_quo(const UPoly& d) const
    {
        auto [q, r] = divmod(d);
        if (!r.is_zero())
            throw std::domain_error("UPoly: inexact division");
        return q;
    }
    bool divides(const UPoly& p) const { return p.divmod(*this).second.is_zero(); }

    UPoly monic() const { return is_zero() ? *this : *this * inverse(lc()); }
    UPoly derivative() const
    {
        if (c_.size() <= 1)
            return UPoly();
        std::vector<R> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * R(static_cast<int>(i));
        return UPoly(std::move(r));
    }
    R eval(const R& x) const
    {
        R acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }
    // this(inner(x))
    UPoly compose(const UPoly& inner) const
    {
        UPoly acc;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * inner + UPoly(c_[i]);
        return acc;
    }
    // Apply f to every coefficient, possibly into another ring.
    template <class F>
    auto map(F f) const
    {
        using S = std::decay_t<std::invoke_result_t<F, const R&>>;
        std::vector<S> r;
        r.reserve(c_.size());
        for (const auto& c : c_)
            r.push_back(f(c));
        return UPoly<S>(std::move(r));
    }

    std::string str(const std::string& var = "x") const
    {
        if (c_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (thyp::is_zero(c_[i]))
                continue;
            if (!first)
                os << " + ";
            first = false;
            os << "(" << to_string(c_[i]) << ")";
            if (i == 1)
                os << "*" << var;
            else if (i > 1)
                os << "*" << var << "^" << i;
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && thyp::is_zero(c_.back()))
            c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
UPoly<R> poly_gcd(UPoly<R> a, UPoly<R> b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Over Q the gcd runs through the primitive integer remainder sequence.
template <>
UPoly<Rat> poly_gcd(UPoly<Rat> a, UPoly<Rat> b);

MPoly to_mpoly(const UPoly<Rat>& p, int v);
UPoly<Rat> from_mpoly(const MPoly& p, int v);

template <class R>
UPoly<R> squarefree_part(const UPoly<R>& p)
{
    if (p.degree() <= 0)
        return p.monic();
    return p.exact_quo(poly_gcd(p, p.derivative())).monic();
}

// Yun's algorithm: p = c * prod_i f_i^i with f_i squarefree and coprime.
// Entry i-1 holds f_i.
template <class R>
std::vector<UPoly<R>> squarefree_decomposition(const UPoly<R>& p)
{
    std::vector<UPoly<R>> out;
    if (p.degree() <= 0)
        return out;
    UPoly<R> a = p.monic();
    UPoly<R> b = a.derivative();
    UPoly<R> c = poly_gcd(a, b);
    UPoly<R> w = a.exact_quo(c);
    UPoly<R> y = b.exact_quo(c);
    UPoly<R> z = y - w.derivative();
    while (w.degree() > 0) {
        UPoly<R> g = poly_gcd(w, z);
        out.push_back(g);
        w = w.exact_quo(g);
        y = z.exact_quo(g);
        z = y - w.derivative();
    }
    return out;
}

// Reduced quotient num/den with monic denominator.
template <class R>
class RatFunc {
public:
    RatFunc() : den_(R(1)) {}
    RatFunc(const UPoly<R>& p) : num_(p), den_(R(1)) {}
    RatFunc(const R& c) : num_(c), den_(R(1)) {}
    RatFunc(const UPoly<R>& n, const UPoly<R>& d, bool reduce = true) : num_(n), den_(d)
    {
        if (d.is_zero())
            throw std::domain_error("RatFunc: zero denominator");
        if (reduce)
            normalize();
    }
    static RatFunc x() { return RatFunc(UPoly<R>::x()); }

    const UPoly<R>& num() const { return num_; }
    const UPoly<R>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    // Degree as a map P^1 -> P^1.
    int degree() const { return std::max(num_.degree(), den_.degree()); }

    RatFunc operator-() const { return RatFunc(-num_, den_, false); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
    {
        if (a.den_ == b.den_)
            return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b)
    {
        if (b.is_zero())
            throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    RatFunc pow(int e) const
    {
        if (e < 0)
            return RatFunc(den_.pow(-e), num_.pow(-e));
        return RatFunc(num_.pow(e), den_.pow(e), false);
    }
    RatFunc derivative() const
    {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }
    // this(inner(x)) as a composition of rational maps
    RatFunc compose(const RatFunc& inner) const
    {
        int d = degree();
        UPoly<R> n, m;
        std::vector<UPoly<R>> up(static_cast<std::size_t>(d) + 1), vp(static_cast<std::size_t>(d) + 1);
        up[0] = UPoly<R>(R(1));
        vp[0] = UPoly<R>(R(1));
        for (int i = 1; i <= d; ++i) {
            up[static_cast<std::size_t>(i)] = up[static_cast<std::size_t>(i - 1)] * inner.num();
            vp[static_cast<std::size_t>(i)] = vp[static_cast<std::size_t>(i - 1)] * inner.den();
        }
        for (int i = 0; i <= d; ++i) {
            UPoly<R> t = up[static_cast<std::size_t>(i)] * vp[static_cast<std::size_t>(d - i)];
            n += t * num_.coeff(i);
            m += t * den_.coeff(i);
        }
        return RatFunc(n, m);
    }
    template <class F>
    RatFunc map(F f) const
    {
        return RatFunc(num_.map(f), den_.map(f));
    }
    std::string str(const std::string& var = "x") const
    {
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    void normalize()
    {
        if (num_.is_zero()) {
            den_ = UPoly<R>(R(1));
            return;
        }
        UPoly<R> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_quo(g);
            den_ = den_.exact_quo(g);
        }
        R il = inverse(den_.lc());
        num_ = num_ * il;
        den_ = den_ * il;
    }
    UPoly<R> num_;
    UPoly<R> den_;
};

using QPoly = UPoly<Rat>;
using QRatFunc = RatFunc<Rat>;

}  // namespace thyp
