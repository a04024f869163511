#include "thyp/upoly.hpp"

namespace thyp {

MPoly to_mpoly(const UPoly<Rat>& p, int v)
{
    std::vector<MPoly::Term> t;
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero())
            t.emplace_back(mono_of(v, i), p.coeff(i));
    return MPoly::from_terms(std::move(t));
}

UPoly<Rat> from_mpoly(const MPoly& p, int v)
{
    std::vector<Rat> c(static_cast<std::size_t>(std::max(p.degree(v), 0) + 1), Rat(0));
    for (const auto& t : p.terms())
        c[static_cast<std::size_t>(mono_exp(t.first, v))] = t.second;
    return UPoly<Rat>(std::move(c));
}

template <>
UPoly<Rat> poly_gcd(UPoly<Rat> a, UPoly<Rat> b)
{
    if (a.degree() > kMaxDeg || b.degree() > kMaxDeg) {
        while (!b.is_zero()) {
            auto r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }
    return from_mpoly(gcd(to_mpoly(a, 0), to_mpoly(b, 0)), 0).monic();
}

}  // namespace thyp
