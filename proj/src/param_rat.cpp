#include "thyp/param_rat.hpp"

#include <stdexcept>

namespace thyp {

ParamRat::ParamRat(const MPoly& num, const MPoly& den) : num_(num), den_(den)
{
    if (den_.is_zero())
        throw std::domain_error("ParamRat: zero denominator");
    normalize();
}

void ParamRat::normalize()
{
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    if (den_.is_constant()) {
        Rat d = den_.constant_value();
        if (!d.is_one()) {
            num_ *= d.inverse();
            den_ = MPoly(1);
        }
        return;
    }
    if (!num_.is_constant()) {
        MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Rat l = den_.leading_coeff();
    if (!l.is_one()) {
        Rat il = l.inverse();
        num_ *= il;
        den_ *= il;
    }
}

Rat ParamRat::constant_value() const
{
    if (!is_constant())
        throw std::domain_error("ParamRat: not a constant");
    return num_.constant_value();
}

ParamRat ParamRat::inverse() const
{
    if (num_.is_zero())
        throw std::domain_error("ParamRat: inverse of zero");
    ParamRat r;
    r.num_ = den_;
    r.den_ = num_;
    Rat l = r.den_.leading_coeff();
    if (!l.is_one()) {
        Rat il = l.inverse();
        r.num_ *= il;
        r.den_ *= il;
    }
    if (r.den_.is_constant())
        r.den_ = MPoly(1);
    return r;
}

ParamRat ParamRat::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    ParamRat r;
    r.num_ = num_.pow(static_cast<int>(e));
    r.den_ = den_.pow(static_cast<int>(e));
    return r;
}

ParamRat ParamRat::operator-() const
{
    ParamRat r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamRat& ParamRat::operator+=(const ParamRat& o)
{
    if (o.num_.is_zero())
        return *this;
    if (num_.is_zero())
        return *this = o;
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) {
            den_ = MPoly(1);
            return *this;
        }
        MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
            Rat l = den_.leading_coeff();
            if (!l.is_one()) {
                num_ *= l.inverse();
                den_ *= l.inverse();
            }
        }
        return *this;
    }
    MPoly g = gcd(den_, o.den_);
    MPoly b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
    MPoly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) {
        num_ = MPoly();
        den_ = MPoly(1);
        return *this;
    }
    MPoly g2 = gcd(n, g);
    if (!g2.is_constant()) {
        n = exact_div(n, g2);
        g = exact_div(g, g2);
    }
    num_ = std::move(n);
    den_ = b1 * d1 * g;
    Rat l = den_.leading_coeff();
    if (!l.is_one()) {
        num_ *= l.inverse();
        den_ *= l.inverse();
    }
    if (den_.is_constant())
        den_ = MPoly(1);
    return *this;
}

ParamRat& ParamRat::operator-=(const ParamRat& o)
{
    return *this += -o;
}

ParamRat& ParamRat::operator*=(const ParamRat& o)
{
    if (num_.is_zero() || o.num_.is_zero()) {
        num_ = MPoly();
        den_ = MPoly(1);
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ *= o.num_;
        return *this;
    }
    MPoly g1 = gcd(num_, o.den_);
    MPoly g2 = gcd(o.num_, den_);
    MPoly n1 = g1.is_constant() ? num_ : exact_div(num_, g1);
    MPoly d2 = g1.is_constant() ? o.den_ : exact_div(o.den_, g1);
    MPoly n2 = g2.is_constant() ? o.num_ : exact_div(o.num_, g2);
    MPoly d1 = g2.is_constant() ? den_ : exact_div(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    Rat l = den_.leading_coeff();
    if (!l.is_one()) {
        num_ *= l.inverse();
        den_ *= l.inverse();
    }
    if (den_.is_constant())
        den_ = MPoly(1);
    return *this;
}

namespace {

ParamRat subst_poly(const MPoly& p, const std::map<int, ParamRat>& values)
{
    std::vector<std::vector<ParamRat>> powers(kMaxVars);
    ParamRat out;
    for (const auto& t : p.terms()) {
        ParamRat term(t.second);
        Mono keep = 0;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = mono_exp(t.first, v);
            if (!e)
                continue;
            auto it = values.find(v);
            if (it == values.end()) {
                keep += mono_of(v, e);
                continue;
            }
            auto& pw = powers[v];
            if (pw.empty())
                pw.push_back(ParamRat(1));
            while (static_cast<int>(pw.size()) <= e)
                pw.push_back(pw.back() * it->second);
            term *= pw[e];
        }
        if (keep)
            term *= ParamRat(MPoly::monomial(keep, Rat(1)));
        out += term;
    }
    return out;
}

}  // namespace

ParamRat ParamRat::subst(const std::map<int, ParamRat>& values) const
{
    return subst_poly(num_, values) / subst_poly(den_, values);
}

Rat ParamRat::eval(const std::vector<Rat>& point) const
{
    Rat d = den_.eval(point);
    if (d.is_zero())
        throw std::domain_error("ParamRat: pole at evaluation point");
    return num_.eval(point) / d;
}

ParamRat ParamRat::limit_infinity(int v) const
{
    int dn = num_.degree(v), dd = den_.degree(v);
    if (num_.is_zero() || dn < dd)
        return ParamRat();
    if (dn > dd)
        throw std::domain_error("ParamRat: limit diverges");
    return ParamRat(num_.coeffs_in(v).back(), den_.coeffs_in(v).back());
}

std::string ParamRat::str() const
{
    if (den_.is_constant())
        return num_.str();
    auto wrap = [](const MPoly& p) {
        std::string s = p.str();
        return p.size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

ParamRat pochhammer(const ParamRat& x, long r)
{
    ParamRat out(1);
    if (r >= 0) {
        for (long i = 0; i < r; ++i)
            out *= x + ParamRat(static_cast<int>(i));
        return out;
    }
    for (long i = 1; i <= -r; ++i)
        out *= x - ParamRat(static_cast<int>(i));
    return out.inverse();
}

ParamRat binom_ext(const ParamRat& x, long r)
{
    if (r < 0)
        return ParamRat();
    return pochhammer(x - ParamRat(static_cast<int>(r)) + ParamRat(1), r) * ParamRat(factorial(r).inverse());
}

}  // namespace thyp
