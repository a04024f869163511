#include "thyp/mpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace thyp {

bool mono_divides(Mono d, Mono m)
{
    for (int v = 0; v < kMaxVars; ++v)
        if (mono_exp(d, v) > mono_exp(m, v))
            return false;
    return true;
}

unsigned mono_mask(Mono m)
{
    unsigned mask = 0;
    for (int v = 0; v < kMaxVars; ++v)
        if (mono_exp(m, v))
            mask |= 1u << v;
    return mask;
}

const std::vector<std::string>& default_var_names()
{
    static const std::vector<std::string> names{"A", "B", "C", "a", "c", "e", "y", "w"};
    return names;
}

MPoly::MPoly(const Rat& c)
{
    if (!c.is_zero())
        t_.emplace_back(0, c);
}

MPoly MPoly::var(int v, int e)
{
    if (v < 0 || v >= kMaxVars || e < 0 || e > kMaxDeg)
        throw std::out_of_range("MPoly::var");
    return monomial(mono_of(v, e), Rat(1));
}

MPoly MPoly::monomial(Mono m, const Rat& c)
{
    MPoly p;
    if (!c.is_zero())
        p.t_.emplace_back(m, c);
    return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.first > y.first; });
    MPoly p;
    p.t_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().first == t.first)
            p.t_.back().second += t.second;
        else {
            if (!p.t_.empty() && p.t_.back().second.is_zero())
                p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && p.t_.back().second.is_zero())
        p.t_.pop_back();
    return p;
}

Rat MPoly::constant_value() const
{
    if (!is_constant())
        throw std::domain_error("MPoly: not a constant");
    return t_.empty() ? Rat(0) : t_[0].second;
}

Rat MPoly::constant_term() const
{
    if (!t_.empty() && t_.back().first == 0)
        return t_.back().second;
    return Rat(0);
}

unsigned MPoly::var_mask() const
{
    unsigned mask = 0;
    for (const auto& t : t_)
        mask |= mono_mask(t.first);
    return mask;
}

int MPoly::degree(int v) const
{
    if (t_.empty())
        return -1;
    int d = 0;
    for (const auto& t : t_)
        d = std::max(d, mono_exp(t.first, v));
    return d;
}

int MPoly::total_degree() const
{
    if (t_.empty())
        return -1;
    int d = 0;
    for (const auto& t : t_) {
        int s = 0;
        for (int v = 0; v < kMaxVars; ++v)
            s += mono_exp(t.first, v);
        d = std::max(d, s);
    }
    return d;
}

MPoly MPoly::operator-() const
{
    MPoly r = *this;
    for (auto& t : r.t_)
        t.second = -t.second;
    return r;
}

namespace {

template <bool Sub>
std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b)
{
    std::vector<MPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first > b[j].first)
            out.push_back(a[i++]);
        else if (a[i].first < b[j].first) {
            out.emplace_back(b[j].first, Sub ? -b[j].second : b[j].second);
            ++j;
        } else {
            Rat c = Sub ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!c.is_zero())
                out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.emplace_back(b[j].first, Sub ? -b[j].second : b[j].second);
    return out;
}

void check_degrees(const MPoly& a, const MPoly& b)
{
    for (int v = 0; v < kMaxVars; ++v)
        if (a.degree(v) + b.degree(v) > kMaxDeg)
            throw std::overflow_error("MPoly: exponent overflow");
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o)
{
    if (o.t_.empty())
        return *this;
    if (t_.empty())
        return *this = o;
    t_ = merge<false>(t_, o.t_);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    if (o.t_.empty())
        return *this;
    t_ = merge<true>(t_, o.t_);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return MPoly();
    if (a.is_constant())
        return b * a.t_[0].second;
    if (b.is_constant())
        return a * b.t_[0].second;
    check_degrees(a, b);
    if (a.t_.size() == 1 || b.t_.size() == 1) {
        const MPoly& m = a.t_.size() == 1 ? a : b;
        const MPoly& p = a.t_.size() == 1 ? b : a;
        MPoly r;
        r.t_.reserve(p.t_.size());
        for (const auto& t : p.t_)
            r.t_.emplace_back(t.first + m.t_[0].first, t.second * m.t_[0].second);
        return r;
    }
    std::vector<MPoly::Term> prod;
    prod.reserve(a.t_.size() * b.t_.size());
    for (const auto& x : a.t_)
        for (const auto& y : b.t_)
            prod.emplace_back(x.first + y.first, x.second * y.second);
    return MPoly::from_terms(std::move(prod));
}

MPoly& MPoly::operator*=(const MPoly& o)
{
    *this = *this * o;
    return *this;
}

MPoly& MPoly::operator*=(const Rat& c)
{
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    if (c.is_one())
        return *this;
    for (auto& t : t_)
        t.second *= c;
    return *this;
}

MPoly MPoly::pow(int e) const
{
    if (e < 0)
        throw std::domain_error("MPoly::pow: negative exponent");
    MPoly r(1), b = *this;
    while (e) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return r;
}

MPoly MPoly::mul_mono(Mono m) const
{
    MPoly r = *this;
    for (auto& t : r.t_) {
        for (int v = 0; v < kMaxVars; ++v)
            if (mono_exp(t.first, v) + mono_exp(m, v) > kMaxDeg)
                throw std::overflow_error("MPoly: exponent overflow");
        t.first += m;
    }
    return r;
}

MPoly MPoly::monic() const
{
    if (t_.empty() || t_[0].second.is_one())
        return *this;
    return *this * t_[0].second.inverse();
}

MPoly MPoly::primitive_integer() const
{
    if (t_.empty())
        return *this;
    mpz_class l = 1, g = 0;
    for (const auto& t : t_)
        l = lcm(l, t.second.den());
    for (const auto& t : t_)
        g = gcd(g, mpz_class(t.second.num() * (l / t.second.den())));
    Rat s(l, g);
    if (t_[0].second.sign() < 0)
        s = -s;
    return *this * s;
}

Rat MPoly::eval(const std::vector<Rat>& point) const
{
    Rat r(0);
    for (const auto& t : t_) {
        Rat m = t.second;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = mono_exp(t.first, v);
            if (e)
                m *= point.at(v).pow(e);
        }
        r += m;
    }
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(int v) const
{
    std::vector<MPoly> c(static_cast<std::size_t>(std::max(degree(v), 0) + 1));
    std::vector<std::vector<Term>> parts(c.size());
    Mono mask = mono_of(v, 0xFF);
    for (const auto& t : t_)
        parts[mono_exp(t.first, v)].emplace_back(t.first & ~mask, t.second);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = from_terms(std::move(parts[i]));
    return c;
}

MPoly MPoly::from_coeffs(const std::vector<MPoly>& c, int v)
{
    std::vector<Term> all;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (const auto& t : c[i].t_)
            all.emplace_back(t.first + mono_of(v, static_cast<int>(i)), t.second);
    return from_terms(std::move(all));
}

MPoly MPoly::subst(int v, const MPoly& value) const
{
    auto c = coeffs_in(v);
    MPoly r;
    for (std::size_t i = c.size(); i-- > 0;) {
        r *= value;
        r += c[i];
    }
    return r;
}

MPoly MPoly::derivative(int v) const
{
    std::vector<Term> out;
    for (const auto& t : t_) {
        int e = mono_exp(t.first, v);
        if (e)
            out.emplace_back(t.first - mono_of(v, 1), t.second * Rat(e));
    }
    return from_terms(std::move(out));
}

std::string MPoly::str(const std::vector<std::string>& names) const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        Rat c = t.second;
        bool neg = c.sign() < 0;
        if (neg)
            c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool unit = c.is_one() && t.first != 0;
        if (!unit)
            os << c;
        bool star = !unit;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = mono_exp(t.first, v);
            if (!e)
                continue;
            os << (star ? "*" : "") << names.at(v);
            if (e > 1)
                os << "^" << e;
            star = true;
        }
    }
    return os.str();
}

std::string MPoly::str() const { return str(default_var_names()); }

bool try_div(const MPoly& a, const MPoly& b, MPoly& quotient)
{
    if (b.is_zero())
        throw std::domain_error("MPoly: division by zero");
    if (a.is_zero()) {
        quotient = MPoly();
        return true;
    }
    if (b.is_constant()) {
        quotient = a * b.constant_value().inverse();
        return true;
    }
    for (int v = 0; v < kMaxVars; ++v)
        if (b.degree(v) > a.degree(v))
            return false;
    const Mono lb = b.leading().first;
    const Rat ilb = b.leading_coeff().inverse();
    std::vector<MPoly::Term> q;
    MPoly r = a;
    while (!r.is_zero()) {
        const auto& lt = r.leading();
        if (!mono_divides(lb, lt.first))
            return false;
        Mono qm = lt.first - lb;
        Rat qc = lt.second * ilb;
        MPoly step = b.mul_mono(qm) * qc;
        q.emplace_back(qm, qc);
        r -= step;
    }
    quotient = MPoly::from_terms(std::move(q));
    return true;
}

MPoly exact_div(const MPoly& a, const MPoly& b)
{
    MPoly q;
    if (!try_div(a, b, q))
        throw std::domain_error("MPoly: inexact division");
    return q;
}

namespace {

using ZPoly = std::vector<mpz_class>;

void z_trim(ZPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

mpz_class z_content(const ZPoly& p)
{
    mpz_class g = 0;
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g == 1)
            break;
    }
    return g;
}

void z_primitive(ZPoly& p)
{
    mpz_class g = z_content(p);
    if (g == 0)
        return;
    if (p.back() < 0)
        g = -g;
    if (g != 1)
        for (auto& c : p)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly z_prem(ZPoly r, const ZPoly& b)
{
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (!r.empty() && r.size() - 1 >= db) {
        std::size_t d = r.size() - 1 - db;
        mpz_class lr = r.back();
        for (auto& c : r)
            c *= lb;
        for (std::size_t j = 0; j <= db; ++j)
            r[j + d] -= lr * b[j];
        z_trim(r);
    }
    return r;
}

// Univariate gcd over Z[x] by primitive remainder sequences.
ZPoly z_gcd(ZPoly a, ZPoly b)
{
    z_trim(a);
    z_trim(b);
    z_primitive(a);
    z_primitive(b);
    if (a.size() < b.size())
        std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1)
            return ZPoly{1};
        ZPoly r = z_prem(a, b);
        a = std::move(b);
        z_primitive(r);
        b = std::move(r);
    }
    return a;
}

ZPoly to_z(const MPoly& p, int v)
{
    MPoly pi = p.primitive_integer();
    ZPoly z(static_cast<std::size_t>(pi.degree(v) + 1));
    for (const auto& t : pi.terms())
        z[mono_exp(t.first, v)] = t.second.num();
    return z;
}

MPoly from_z(const ZPoly& z, int v)
{
    std::vector<MPoly::Term> t;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] != 0)
            t.emplace_back(mono_of(v, static_cast<int>(i)), Rat(z[i]));
    return MPoly::from_terms(std::move(t));
}

using RPoly = std::vector<MPoly>;  // coefficients in the main variable

void r_trim(RPoly& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

MPoly r_content(const RPoly& p)
{
    MPoly g;
    for (const auto& c : p) {
        if (c.is_zero())
            continue;
        g = gcd(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

void r_primitive(RPoly& p)
{
    MPoly g = r_content(p);
    if (g.is_zero())
        return;
    if (!g.is_constant())
        for (auto& c : p)
            c = exact_div(c, g);
    // numeric normalization of the whole polynomial
    mpz_class l = 1, n = 0;
    for (const auto& c : p)
        for (const auto& t : c.terms())
            l = lcm(l, t.second.den());
    for (const auto& c : p)
        for (const auto& t : c.terms())
            n = gcd(n, mpz_class(t.second.num() * (l / t.second.den())));
    Rat s(l, n);
    if (!s.is_one())
        for (auto& c : p)
            c *= s;
}

RPoly r_prem(RPoly r, const RPoly& b)
{
    const std::size_t db = b.size() - 1;
    const MPoly& lb = b.back();
    while (!r.empty() && r.size() - 1 >= db) {
        std::size_t d = r.size() - 1 - db;
        MPoly lr = r.back();
        MPoly g = gcd(lr, lb);
        MPoly fb = exact_div(lb, g), fr = exact_div(lr, g);
        for (auto& c : r)
            c *= fb;
        for (std::size_t j = 0; j <= db; ++j)
            r[j + d] -= fr * b[j];
        r_trim(r);
    }
    return r;
}

}  // namespace

MPoly content_in(const MPoly& p, int v)
{
    return r_content(p.coeffs_in(v));
}

namespace {

// a with every variable except v specialized to point[w], as a polynomial in v
// with integer coefficients.
ZPoly specialize(const MPoly& a, int v, const std::vector<long>& point)
{
    std::vector<mpq_class> c(static_cast<std::size_t>(a.degree(v) + 1), 0);
    for (const auto& [m, r] : a.terms()) {
        mpq_class t = r.get();
        for (int w = 0; w < kMaxVars; ++w) {
            int e = mono_exp(m, w);
            if (w == v || e == 0)
                continue;
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), mpz_class(point[static_cast<std::size_t>(w)]).get_mpz_t(),
                       static_cast<unsigned long>(e));
            t *= pw;
        }
        c[static_cast<std::size_t>(mono_exp(m, v))] += t;
    }
    mpz_class l = 1;
    for (const auto& x : c)
        l = lcm(l, mpz_class(x.get_den()));
    ZPoly z(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        z[i] = mpz_class(c[i] * l);
    return z;
}

// True only when gcd(a, b) is provably constant: for every variable the
// images under a specialization that keeps both degrees are coprime.
bool certainly_coprime(const MPoly& a, const MPoly& b)
{
    unsigned common = a.var_mask() & b.var_mask();
    if (!common)
        return false;
    unsigned all = a.var_mask() | b.var_mask();
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        return static_cast<long>(seed % 61) - 30;
    };
    for (int v = 0; v < kMaxVars; ++v) {
        if (!(all & (1u << v)))
            continue;
        if (!(common & (1u << v)))
            continue;
        bool done = false;
        for (int attempt = 0; attempt < 3 && !done; ++attempt) {
            std::vector<long> point(kMaxVars);
            for (auto& x : point)
                x = next();
            ZPoly za = specialize(a, v, point), zb = specialize(b, v, point);
            z_trim(za);
            z_trim(zb);
            if (static_cast<int>(za.size()) != a.degree(v) + 1 || static_cast<int>(zb.size()) != b.degree(v) + 1)
                continue;
            if (z_gcd(za, zb).size() > 1)
                return false;
            done = true;
        }
        if (!done)
            return false;
    }
    // every common variable has degree 0 in the gcd; the remaining
    // variables occur in only one operand
    return true;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return MPoly(1);
    if (a.size() == 1 && b.size() == 1) {
        Mono m = 0;
        for (int v = 0; v < kMaxVars; ++v)
            m += mono_of(v, std::min(mono_exp(a.leading().first, v), mono_exp(b.leading().first, v)));
        return MPoly::monomial(m, Rat(1));
    }
    unsigned ma = a.var_mask(), mb = b.var_mask();
    unsigned all = ma | mb;
    int v = 0;
    while (!(all & (1u << v)))
        ++v;
    if (!(ma & (1u << v)))
        return gcd(a, content_in(b, v));
    if (!(mb & (1u << v)))
        return gcd(content_in(a, v), b);
    if (ma == (1u << v) && mb == (1u << v))
        return from_z(z_gcd(to_z(a, v), to_z(b, v)), v).monic();
    if (certainly_coprime(a, b))
        return MPoly(1);

    // big is reduced by the primitive part of small, so only the content of
    // small is computed in full
    const MPoly& small = a.size() <= b.size() ? a : b;
    const MPoly& big = a.size() <= b.size() ? b : a;
    int best = -1;
    for (int w = 0; w < kMaxVars; ++w) {
        if (!((ma & mb) & (1u << w)))
            continue;
        if (big.degree(w) < small.degree(w))
            continue;
        if (best < 0 || small.degree(w) < small.degree(best))
            best = w;
    }
    if (best >= 0) {
        v = best;
        RPoly pb = small.coeffs_in(v), pa = big.coeffs_in(v);
        MPoly cb = r_content(pb);
        MPoly g = cb;
        for (const auto& c : pa) {
            if (g.is_constant())
                break;
            if (!c.is_zero())
                g = gcd(g, c);
        }
        for (auto& c : pb)
            c = exact_div(c, cb);
        if (pb.size() == 1)
            return g.monic();
        RPoly r = r_prem(std::move(pa), pb);
        r_primitive(r);
        pa = std::move(pb);
        pb = std::move(r);
        while (!pb.empty()) {
            if (pb.size() == 1)
                return g.monic();
            RPoly r2 = r_prem(pa, pb);
            pa = std::move(pb);
            r_primitive(r2);
            pb = std::move(r2);
        }
        r_primitive(pa);
        return (g * MPoly::from_coeffs(pa, v)).monic();
    }

    // recursive primitive remainder sequence in the main variable v
    RPoly pa = a.coeffs_in(v), pb = b.coeffs_in(v);
    MPoly ca = r_content(pa), cb = r_content(pb);
    MPoly g = gcd(ca, cb);
    for (auto& c : pa)
        c = exact_div(c, ca);
    for (auto& c : pb)
        c = exact_div(c, cb);
    if (pa.size() < pb.size())
        std::swap(pa, pb);
    while (!pb.empty()) {
        if (pb.size() == 1)
            return g.monic();
        RPoly r = r_prem(pa, pb);
        pa = std::move(pb);
        r_primitive(r);
        pb = std::move(r);
    }
    r_primitive(pa);
    return (g * MPoly::from_coeffs(pa, v)).monic();
}

}  // namespace thyp
