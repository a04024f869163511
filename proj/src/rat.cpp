#include "thyp/rat.hpp"

#include <stdexcept>

namespace thyp {

Rat::Rat(long num, long den)
{
    if (den == 0)
        throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(const std::string& s)
{
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    if (q.get_den() == 0)
        throw std::domain_error("Rat: zero denominator");
    q.canonicalize();
    return Rat(q);
}

long Rat::to_long() const
{
    if (!is_integer() || !q_.get_num().fits_slong_p())
        throw std::range_error("Rat: not a machine integer");
    return q_.get_num().get_si();
}

Rat Rat::inverse() const
{
    if (is_zero())
        throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1 / q_));
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero())
        throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

Rat pochhammer(const Rat& x, long r)
{
    Rat out(1);
    if (r >= 0) {
        for (long i = 0; i < r; ++i)
            out *= x + Rat(i);
        return out;
    }
    for (long i = 1; i <= -r; ++i)
        out *= x - Rat(i);
    return out.inverse();
}

Rat factorial(long n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

Rat binomial(long n, long k)
{
    return binom_ext(Rat(n), k);
}

Rat binom_ext(const Rat& x, long r)
{
    if (r < 0)
        return Rat(0);
    return pochhammer(x - Rat(r) + Rat(1), r) / factorial(r);
}

}  // namespace thyp

size_t std::hash<thyp::Rat>::operator()(const thyp::Rat& r) const
{
    return std::hash<std::string>()(r.str());
}
