#include "thyp/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thyp {

namespace {

std::mutex cache_mutex;

std::vector<long> poly_divexact(std::vector<long> a, const std::vector<long>& b)
{
    // b monic
    std::size_t db = b.size() - 1;
    std::vector<long> q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        long c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    return q;
}

// table[k] = coordinates of w^k, 0 <= k < m
const std::vector<std::vector<long>>& power_table(int m)
{
    static std::map<int, std::vector<std::vector<long>>> cache;
    const auto& phi = cyclotomic_poly(m);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    std::size_t d = phi.size() - 1;
    std::vector<std::vector<long>> t(static_cast<std::size_t>(m), std::vector<long>(d, 0));
    std::vector<long> cur(d, 0);
    cur[0] = 1;
    for (int k = 0; k < m; ++k) {
        t[k] = cur;
        std::vector<long> next(d + 1, 0);
        for (std::size_t i = 0; i < d; ++i)
            next[i + 1] = cur[i];
        long top = next[d];
        for (std::size_t i = 0; i < d; ++i)
            next[i] -= top * phi[i];
        next.pop_back();
        cur = next;
    }
    return cache.emplace(m, std::move(t)).first->second;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(int m)
{
    if (m < 1)
        throw std::invalid_argument("cyclotomic_poly: m must be positive");
    static std::map<int, std::vector<long>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(m);
        if (it != cache.end())
            return it->second;
    }
    std::vector<long> p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0)
            p = poly_divexact(p, cyclotomic_poly(d));
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(m, std::move(p)).first->second;
}

int euler_phi(int m)
{
    return static_cast<int>(cyclotomic_poly(m).size()) - 1;
}

Cyclo::Cyclo(const ParamRat& v, int m) : m_(m), c_(static_cast<std::size_t>(euler_phi(m)))
{
    c_[0] = v;
}

Cyclo Cyclo::root(int m, long k)
{
    Cyclo r(ParamRat(0), m);
    long e = ((k % m) + m) % m;
    const auto& row = power_table(m)[static_cast<std::size_t>(e)];
    for (std::size_t i = 0; i < row.size(); ++i)
        r.c_[i] = ParamRat(static_cast<int>(row[i]));
    return r;
}

bool Cyclo::is_zero() const
{
    for (const auto& c : c_)
        if (!c.is_zero())
            return false;
    return true;
}

bool Cyclo::is_scalar() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return false;
    return true;
}

Cyclo Cyclo::embed(int L) const
{
    if (L == m_)
        return *this;
    if (L % m_ != 0)
        throw std::invalid_argument("Cyclo::embed: conductor does not divide target");
    Cyclo r(ParamRat(0), L);
    const auto& tab = power_table(L);
    int step = L / m_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        const auto& row = tab[(i * static_cast<std::size_t>(step)) % static_cast<std::size_t>(L)];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j])
                r.c_[j] += c_[i] * ParamRat(static_cast<int>(row[j]));
    }
    return r;
}

void Cyclo::unify(Cyclo& o)
{
    if (m_ == o.m_)
        return;
    int L = std::lcm(m_, o.m_);
    if (m_ != L)
        *this = embed(L);
    if (o.m_ != L)
        o = o.embed(L);
}

Cyclo Cyclo::operator-() const
{
    Cyclo r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o)
{
    if (o.m_ == m_ || o.is_scalar()) {
        c_[0] += o.c_[0];
        for (std::size_t i = 1; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    Cyclo b = o;
    unify(b);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += b.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o)
{
    return *this += -o;
}

Cyclo& Cyclo::operator*=(const Cyclo& o)
{
    if (o.is_scalar()) {
        for (auto& c : c_)
            c *= o.c_[0];
        return *this;
    }
    if (is_scalar() && m_ <= o.m_ && o.m_ % m_ == 0) {
        ParamRat s = c_[0];
        *this = o;
        for (auto& c : c_)
            c *= s;
        return *this;
    }
    Cyclo b = o;
    unify(b);
    std::size_t d = c_.size();
    std::vector<ParamRat> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < d; ++j)
            if (!b.c_[j].is_zero())
                prod[i + j] += c_[i] * b.c_[j];
    }
    const auto& tab = power_table(m_);
    for (std::size_t i = 0; i < d; ++i)
        c_[i] = prod[i];
    for (std::size_t k = d; k < prod.size(); ++k) {
        if (prod[k].is_zero())
            continue;
        const auto& row = tab[k % static_cast<std::size_t>(m_)];
        for (std::size_t j = 0; j < d; ++j)
            if (row[j])
                c_[j] += prod[k] * ParamRat(static_cast<int>(row[j]));
    }
    return *this;
}

Cyclo Cyclo::inverse() const
{
    if (is_scalar())
        return Cyclo(c_[0].inverse(), m_);
    // extended Euclid on (element, Phi_m) over the coefficient field
    using Poly = std::vector<ParamRat>;
    auto trim = [](Poly& p) {
        while (!p.empty() && p.back().is_zero())
            p.pop_back();
    };
    auto mul = [](const Poly& a, const Poly& b) {
        if (a.empty() || b.empty())
            return Poly{};
        Poly r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] += a[i] * b[j];
        return r;
    };
    auto sub = [&](Poly a, const Poly& b) {
        if (a.size() < b.size())
            a.resize(b.size());
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i] -= b[i];
        trim(a);
        return a;
    };
    const auto& phi = cyclotomic_poly(m_);
    Poly r0, r1 = c_, s0{ParamRat(0)}, s1{ParamRat(1)};
    for (long c : phi)
        r0.push_back(ParamRat(static_cast<int>(c)));
    trim(r1);
    if (r1.empty())
        throw std::domain_error("Cyclo: inverse of zero");
    s0.clear();
    while (r1.size() > 1) {
        Poly q(r0.size() - r1.size() + 1), r = r0;
        ParamRat il = r1.back().inverse();
        while (r.size() >= r1.size()) {
            std::size_t sh = r.size() - r1.size();
            ParamRat f = r.back() * il;
            q[sh] = f;
            for (std::size_t j = 0; j < r1.size(); ++j)
                r[j + sh] -= f * r1[j];
            r.pop_back();
            trim(r);
        }
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        if (r1.empty())
            throw std::domain_error("Cyclo: element not invertible");
    }
    ParamRat il = r1[0].inverse();
    Cyclo out(ParamRat(0), m_);
    // reduce s1 modulo Phi_m through the power table
    const auto& tab = power_table(m_);
    for (std::size_t k = 0; k < s1.size(); ++k) {
        if (s1[k].is_zero())
            continue;
        const auto& row = tab[k % static_cast<std::size_t>(m_)];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j])
                out.c_[j] += s1[k] * il * ParamRat(static_cast<int>(row[j]));
    }
    return out;
}

bool operator==(const Cyclo& a, const Cyclo& b)
{
    if (a.m_ == b.m_)
        return a.c_ == b.c_;
    return (a - b).is_zero();
}

Cyclo Cyclo::subst(const std::map<int, ParamRat>& values) const
{
    Cyclo r = *this;
    for (auto& c : r.c_)
        c = c.subst(values);
    return r;
}

std::string Cyclo::str() const
{
    if (is_scalar())
        return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c_[i].str() << ")";
        if (i == 1)
            os << "*w" << m_;
        else if (i > 1)
            os << "*w" << m_ << "^" << i;
    }
    return os.str();
}

}  // namespace thyp
