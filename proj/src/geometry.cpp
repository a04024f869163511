#include "thyp/geometry.hpp"

#include "thyp/errors.hpp"
#include "thyp/symmetric.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thyp {

namespace {

void check_coprime(int p, int q)
{
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw ConstraintError("p, q must be coprime positive integers");
}

long poch(long x, long r) { return pochhammer(Rat(x), r).to_long(); }

long exact_quotient(long a, long b)
{
    if (b == 0 || a % b)
        throw std::logic_error("fibre count is not integral");
    return a / b;
}

QPoly lin(const Rat& c0, const Rat& c1) { return QPoly(std::vector<Rat>{c0, c1}); }

const QPoly X = QPoly::x();
const QPoly one_poly(Rat(1));

// (1+x)^e +/- (1-x)^e
QPoly plus_minus(int e, int sign)
{
    QPoly a = lin(1, 1).pow(e), b = lin(1, -1).pow(e);
    return sign > 0 ? a + b : a - b;
}

QRatFunc ratio(const QPoly& n, const QPoly& d) { return QRatFunc(n, d); }

Rat zeta_const(int p, int q)
{
    int n = p + q;
    return Rat(n).pow(n) / (Rat(p).pow(p) * Rat(q).pow(q));
}

std::map<long, long> fibre(const QPoly& g, int degree)
{
    std::map<long, long> out;
    auto parts = squarefree_decomposition(g);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].degree() > 0)
            out[static_cast<long>(i + 1)] += parts[i].degree();
    int deficit = degree - g.degree();
    if (deficit > 0)
        out[deficit] += 1;
    return out;
}

QPoly reversed(const QPoly& p, int d)
{
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
    for (int i = 0; i <= p.degree(); ++i)
        c[static_cast<std::size_t>(d - i)] = p.coeff(i);
    return QPoly(std::move(c));
}

using CPoly = UPoly<Cyclo>;
using CRatFunc = RatFunc<Cyclo>;

CPoly lift_poly(const QPoly& p)
{
    return p.map([](const Rat& c) { return Cyclo(c); });
}

CRatFunc lift_map(const QRatFunc& f) { return CRatFunc(lift_poly(f.num()), lift_poly(f.den())); }

CPoly eval_mpoly(const MPoly& f, const std::vector<CPoly>& x)
{
    CPoly out;
    for (const auto& [m, c] : f.terms()) {
        CPoly t{Cyclo(c)};
        for (std::size_t v = 0; v < x.size(); ++v) {
            int e = mono_exp(m, static_cast<int>(v));
            if (e)
                t *= x[v].pow(e);
        }
        out += t;
    }
    return out;
}

CRatFunc eval_param(const ParamRat& f, const std::vector<CPoly>& x)
{
    return CRatFunc(eval_mpoly(f.num(), x), eval_mpoly(f.den(), x));
}

Cyclo w(long k) { return Cyclo::root(3, k); }

CPoly clin(const Cyclo& c0, const Cyclo& c1) { return CPoly(std::vector<Cyclo>{c0, c1}); }

ParamRat cyc_sum(const std::function<ParamRat(const ParamRat&, const ParamRat&, const ParamRat&)>& f)
{
    ParamRat x1 = ParamRat::var(0), x2 = ParamRat::var(1), x3 = ParamRat::var(2);
    return f(x1, x2, x3) + f(x2, x3, x1) + f(x3, x1, x2);
}

ParamRat sgn(int e) { return ParamRat(e % 2 ? -1 : 1); }

Check check(const std::string& name, bool pass, const std::string& detail = "")
{
    return Check{name, pass, detail};
}

// Parametrization of the conic of root triples for (p,q) = (1,3) by u.
std::vector<CPoly> conic_param()
{
    auto factor = [](const Cyclo& r) {
        // (1 - r u)(1 + 2 r u)
        return clin(Cyclo(1), -r) * clin(Cyclo(1), r * Cyclo(2));
    };
    return {factor(Cyclo(1)), CPoly(w(2)) * factor(w(1)), CPoly(w(1)) * factor(w(2))};
}

CRatFunc zeta_from_sigmas(int p, int q, const std::vector<CPoly>& x, bool p_branch)
{
    CRatFunc sn = eval_param(sigma_n_k3(p, q, p_branch), x);
    CRatFunc sq = eval_param(sigma_q_k3(p, q, p_branch), x);
    int n = p + q;
    Cyclo c(zeta_const(p, q) * Rat(n % 2 ? -1 : 1));
    return CRatFunc(CPoly(c)) * sn.pow(q) / sq.pow(n);
}

}  // namespace

std::pair<int, int> nu_range(int p, int q, int k) { return {std::max(0, k - p), std::min(q, k)}; }

BranchDatum branch_counts(int p, int q, int k, int nu)
{
    check_coprime(p, q);
    auto [lo, hi] = nu_range(p, q, k);
    if (k < 1 || nu < lo || nu > hi)
        throw ConstraintError("nu outside [max(0,k-p), min(q,k)]");
    if (nu == 0)
        return {nu, poch(p - k + 1, k - 1), 1, p};
    if (nu == k)
        return {nu, poch(q - k + 1, k - 1), 1, q};
    return {nu, binomial(k, nu).to_long() * poch(q - nu + 1, nu - 1), poch(p - k + nu + 1, k - nu - 1),
            static_cast<long>(p) * q};
}

long cover_degree(int p, int q, int k) { return poch(p + q - k + 1, k); }

long fibre_total(const std::map<long, long>& f)
{
    long s = 0;
    for (auto [e, c] : f)
        s += e * c;
    return s;
}

std::string profile_str(const RamProfile& r)
{
    auto one = [](const std::map<long, long>& f) {
        std::ostringstream os;
        os << "[";
        bool first = true;
        for (auto it = f.rbegin(); it != f.rend(); ++it) {
            if (!first)
                os << ", ";
            first = false;
            os << it->first << "^" << it->second;
        }
        os << "]";
        return os.str();
    };
    return "0: " + one(r.over0) + "  1: " + one(r.over1) + "  oo: " + one(r.overinf);
}

RamProfile ram_profile(int p, int q, int k)
{
    check_coprime(p, q);
    int n = p + q;
    if (k < 1 || k > n)
        throw ConstraintError("k must satisfy 1 <= k <= n");
    long D = cover_degree(p, q, k);
    RamProfile r;
    long cp = poch(p - k + 1, k - 1), cq = poch(q - k + 1, k - 1);
    if (cp)
        r.over0[p] += cp;
    if (cq)
        r.over0[q] += cq;
    long rest = exact_quotient(D - p * cp - q * cq, static_cast<long>(p) * q);
    if (rest)
        r.over0[static_cast<long>(p) * q] += rest;
    long simple = poch(n - k - 1, k);
    if (simple)
        r.over1[1] = simple;
    long dbl = exact_quotient(D - simple, 2);
    if (dbl)
        r.over1[2] = dbl;
    r.overinf[n] = poch(n - k + 1, k - 1);
    return r;
}

Rat genus_formula(int p, int q, int k)
{
    check_coprime(p, q);
    int n = p + q;
    Rat bracket = Rat((k - 1) * (2 * n - k - 2), 4 * (n - 1)) - Rat(n, 2 * p * q);
    return Rat(1) + bracket * pochhammer(Rat(n - k + 1), k - 1) -
           Rat(q - 1, 2 * q) * pochhammer(Rat(p - k + 1), k - 1) -
           Rat(p - 1, 2 * p) * pochhammer(Rat(q - k + 1), k - 1);
}

Rat hurwitz_genus(const RamProfile& r, long degree)
{
    long ram = 0;
    for (const auto* f : {&r.over0, &r.over1, &r.overinf})
        for (auto [e, c] : *f)
            ram += (e - 1) * c;
    return Rat(1) - Rat(degree) + Rat(ram, 2);
}

GenusReport genus(int p, int q, int k)
{
    RamProfile prof = ram_profile(p, q, k);
    Rat g = genus_formula(p, q, k);
    Rat h = hurwitz_genus(prof, cover_degree(p, q, k));
    if (!g.is_integer() || g != h || g.sign() < 0)
        throw std::logic_error("genus formula " + g.str() + " disagrees with Hurwitz count " + h.str());
    return {p, q, k, g.to_long(), h.to_long(), prof};
}

Classification classify_low_genus(int bound)
{
    if (bound < 2)
        throw ConstraintError("bound must be at least 2");
    Classification c;
    for (int n = 2; n <= bound; ++n)
        for (int p = 1; p < n; ++p) {
            int q = n - p;
            if (std::gcd(p, q) != 1)
                continue;
            for (int k = 3; k <= n; ++k) {
                long g = genus(p, q, k).genus;
                if (g == 0)
                    c.genus0.push_back({p, q, k});
                else if (g == 1)
                    c.genus1.push_back({p, q, k});
            }
        }
    return c;
}

QPoly T_poly(int p, int q)
{
    check_coprime(p, q);
    std::vector<Rat> t(static_cast<std::size_t>(p + q - 1));
    for (int j = 0; j <= p + q - 2; ++j)
        t[static_cast<std::size_t>(j)] = j <= p - 1 ? Rat((j + 1) * q) : Rat((p + q - 1 - j) * p);
    QPoly T(std::move(t));
    QPoly lhs = QPoly::x(p + q) * Rat(p) - QPoly::x(p) * Rat(p + q) + QPoly(Rat(q));
    if (lhs != lin(-1, 1).pow(2) * T)
        throw std::logic_error("T_poly: factorization identity fails");
    if (poly_gcd(T, T.derivative()).degree() > 0)
        throw std::logic_error("T_poly: repeated root");
    return T;
}

QRatFunc phi1(int p, int q)
{
    check_coprime(p, q);
    int n = p + q;
    Rat c = zeta_const(p, q) * Rat(q % 2 ? -1 : 1);
    return ratio(QPoly::x(q) * c, lin(1, -1).pow(n));
}

QRatFunc phi2(int p, int q)
{
    check_coprime(p, q);
    QPoly tp = lin(1, 1), tm = lin(-1, 1);
    return ratio(-(tm.pow(p) * (tp.pow(q) - tm.pow(q))), tp.pow(q) * (tp.pow(p) - tm.pow(p)));
}

QRatFunc pi2(int p, int q)
{
    check_coprime(p, q);
    int n = p + q;
    QPoly tp = lin(1, 1), tm = lin(-1, 1);
    QPoly num = (QPoly::x(2) - one_poly).pow(p * q) * (tp.pow(p) - tm.pow(p)).pow(p) *
                (tp.pow(q) - tm.pow(q)).pow(q) * zeta_const(p, q);
    return ratio(num, (tp.pow(n) - tm.pow(n)).pow(n));
}

const std::vector<CatalogEntry>& belyi_ids()
{
    static const std::vector<CatalogEntry> ids = {
        {"phi1", "s -> zeta on the line of single roots", true, true},
        {"phi2", "t -> s from root pairs to single roots", true, true},
        {"pi2", "t -> zeta on the curve of root pairs", true, true},
        {"zeta_p1", "degree-n map for q = 1 in s", true, false},
        {"zeta_11", "-4s/(1-s)^2", false, false},
        {"zeta_p2", "degree-n(n-1) map for q = 2, p odd, in t", true, false},
        {"zeta_12", "(1+t^3)^2/(4t^3), degree 6", false, false},
        {"zeta_13", "degree-24 map in u", false, false},
        {"zeta_23", "degree-10 map in v", false, false},
        {"zeta_14", "degree-15 map in x", false, false},
    };
    return ids;
}

QRatFunc belyi_catalog(const std::string& id, int p, int q)
{
    if (id == "phi1")
        return phi1(p, q);
    if (id == "phi2")
        return phi2(p, q);
    if (id == "pi2")
        return pi2(p, q);
    if (id == "zeta_p1") {
        check_coprime(p, 1);
        int n = p + 1;
        return ratio(X * (-Rat(n).pow(n) / Rat(p).pow(p)), lin(1, -1).pow(n));
    }
    if (id == "zeta_11")
        return ratio(X * Rat(-4), lin(1, -1).pow(2));
    if (id == "zeta_p2") {
        if (p < 1 || p % 2 == 0)
            throw ConstraintError("zeta_p2 requires odd p");
        int n = p + 2;
        Rat c = Rat(4) * Rat(n).pow(n) / Rat(p).pow(p);
        QPoly num = QPoly::x(2) * (one_poly - QPoly::x(2)).pow(2 * p) * plus_minus(p, 1).pow(p) * c;
        return ratio(num, plus_minus(n, 1).pow(n));
    }
    if (id == "zeta_12")
        return ratio((QPoly::x(3) + one_poly).pow(2), QPoly::x(3) * Rat(4));
    if (id == "zeta_13") {
        QPoly u3 = QPoly::x(3);
        QPoly num = u3 * (one_poly - u3).pow(3) * (one_poly + u3 * Rat(8)).pow(3) * Rat(-256);
        QPoly den = (one_poly - u3 * Rat(20) - QPoly::x(6) * Rat(8)).pow(4);
        return ratio(num, den);
    }
    if (id == "zeta_23") {
        QPoly num = X * lin(1, -1).pow(6) * lin(1, 3).pow(3) * (Rat(3125) / Rat(27));
        QPoly den = QPoly(std::vector<Rat>{1, 10, 5}).pow(5);
        return ratio(num, den);
    }
    if (id == "zeta_14") {
        QPoly num = X * lin(1, -5).pow(4) * QPoly(std::vector<Rat>{5, 6, 5}).pow(4) * Rat(1, 4);
        QPoly den = lin(1, -1).pow(5) * QPoly(std::vector<Rat>{1, 10, 5}).pow(5);
        return ratio(num, den);
    }
    throw std::invalid_argument("unknown catalog map: " + id);
}

int belyi_stated_degree(const std::string& id, int p, int q)
{
    int n = p + q;
    if (id == "phi1")
        return n;
    if (id == "phi2")
        return n - 1;
    if (id == "pi2")
        return n * (n - 1);
    if (id == "zeta_p1")
        return p + 1;
    if (id == "zeta_11")
        return 2;
    if (id == "zeta_p2")
        return (p + 2) * (p + 1);
    if (id == "zeta_12")
        return 6;
    if (id == "zeta_13")
        return 24;
    if (id == "zeta_23")
        return 10;
    if (id == "zeta_14")
        return 15;
    throw std::invalid_argument("unknown catalog map: " + id);
}

BelyiReport verify_belyi(const QRatFunc& f, const std::optional<RamProfile>& expected)
{
    BelyiReport r;
    const QPoly& P = f.num();
    const QPoly& Q = f.den();
    int d = f.degree();
    r.degree = d;
    QPoly W = P.derivative() * Q - P * Q.derivative();
    if (W.is_zero() || d < 1)
        return r;
    QPoly PmQ = P - Q;
    QPoly R = P * Q * PmQ;
    r.critical_values_ok = squarefree_part(W).divides(squarefree_part(R));
    if (P.degree() == d && Q.degree() == d && PmQ.degree() == d) {
        QPoly Pr = reversed(P, d), Qr = reversed(Q, d);
        QPoly Wr = Pr.derivative() * Qr - Pr * Qr.derivative();
        r.infinity_ok = !Wr.coeff(0).is_zero();
    } else {
        r.infinity_ok = true;
    }
    r.profile.over0 = fibre(P, d);
    r.profile.overinf = fibre(Q, d);
    r.profile.over1 = fibre(PmQ, d);
    r.totals_ok = fibre_total(r.profile.over0) == d && fibre_total(r.profile.over1) == d &&
                  fibre_total(r.profile.overinf) == d;
    Rat g = hurwitz_genus(r.profile, d);
    if (g.is_integer() && g.sign() >= 0)
        r.genus = g.to_long();
    if (expected)
        r.matches_expected = *expected == r.profile;
    return r;
}

MPoly defining_poly_k3(int p, int q)
{
    check_coprime(p, q);
    if (std::max(p, q) < 2)
        throw ConstraintError("the plane curve of root triples needs max(p,q) > 1");
    int n = p + q;
    MPoly x[3] = {MPoly::var(0), MPoly::var(1), MPoly::var(2)};
    MPoly num;
    for (int i = 0; i < 3; ++i) {
        const MPoly& a = x[i];
        const MPoly& b = x[(i + 1) % 3];
        const MPoly& c = x[(i + 2) % 3];
        num += a.pow(p) * (b.pow(n) - c.pow(n));
    }
    MPoly vdm = (x[0] - x[1]) * (x[1] - x[2]) * (x[2] - x[0]);
    MPoly out;
    if (!try_div(num, vdm, out))
        throw std::logic_error("defining_poly_k3: inexact division");
    return out;
}

ParamRat sigma_n_k3(int p, int q, bool p_branch)
{
    check_coprime(p, q);
    int n = p + q;
    ParamRat x1 = ParamRat::var(0), x2 = ParamRat::var(1), x3 = ParamRat::var(2);
    ParamRat pre = sgn(n - 1) * (x1 * x2 * x3).pow(p);
    if (p_branch) {
        if (p < 2)
            throw ConstraintError("this form of sigma_n needs p > 1");
        ParamRat num = cyc_sum([q](auto a, auto b, auto c) { return a * (b.pow(q + 1) - c.pow(q + 1)); });
        ParamRat den = cyc_sum([p](auto a, auto b, auto c) {
            return a * (b.pow(p) * c.pow(p + 1) - b.pow(p + 1) * c.pow(p));
        });
        return pre * num / den;
    }
    if (q < 2)
        throw ConstraintError("this form of sigma_n needs q > 1");
    ParamRat num = cyc_sum([q](auto a, auto b, auto c) { return a * (b.pow(q) - c.pow(q)); });
    ParamRat den = cyc_sum([p](auto a, auto b, auto c) { return a.pow(p) * (b.pow(p + 1) - c.pow(p + 1)); });
    return pre * num / den;
}

ParamRat sigma_q_k3(int p, int q, bool p_branch)
{
    check_coprime(p, q);
    int n = p + q;
    if (p_branch) {
        if (p < 2)
            throw ConstraintError("this form of sigma_q needs p > 1");
        ParamRat num = cyc_sum([p, n](auto a, auto b, auto c) {
            return a * (b.pow(p) * c.pow(n + 1) - b.pow(n + 1) * c.pow(p));
        });
        ParamRat den = cyc_sum([p](auto a, auto b, auto c) {
            return a * (b.pow(p) * c.pow(p + 1) - b.pow(p + 1) * c.pow(p));
        });
        return sgn(q - 1) * num / den;
    }
    if (q < 2)
        throw ConstraintError("this form of sigma_q needs q > 1");
    ParamRat num = cyc_sum([p, n](auto a, auto b, auto c) { return a.pow(p + 1) * (b.pow(n) - c.pow(n)); });
    ParamRat den = cyc_sum([p](auto a, auto b, auto c) { return a.pow(p + 1) * (b.pow(p) - c.pow(p)); });
    return sgn(q - 1) * num / den;
}

std::vector<Check> membership_checks()
{
    std::vector<Check> out;
    const CRatFunc z12 = lift_map(belyi_catalog("zeta_12"));
    const CRatFunc z13 = lift_map(belyi_catalog("zeta_13"));

    // line and conic of root triples for {p,q} = {1,2}, in the parameter t
    std::vector<CPoly> line = {clin(Cyclo(1), Cyclo(1)), clin(w(2), w(1)), clin(w(1), w(2))};
    out.push_back(check("(1,2) triple parametrization lies on its curve",
                        eval_mpoly(defining_poly_k3(1, 2), line).is_zero()));
    out.push_back(check("(1,2) triple parametrization maps to zeta_12", zeta_from_sigmas(1, 2, line, false) == z12));
    // [1/(1+t) : 1/(w+w^2 t) : 1/(w^2+w t)] cleared of denominators
    std::vector<CPoly> lin_inv = {clin(Cyclo(1), Cyclo(1)), clin(w(1), w(2)), clin(w(2), w(1))};
    std::vector<CPoly> conic21 = {lin_inv[1] * lin_inv[2], lin_inv[0] * lin_inv[2], lin_inv[0] * lin_inv[1]};
    out.push_back(check("(2,1) triple parametrization lies on its curve",
                        eval_mpoly(defining_poly_k3(2, 1), conic21).is_zero()));
    out.push_back(check("(2,1) triple parametrization maps to zeta_12", zeta_from_sigmas(2, 1, conic21, true) == z12));

    std::vector<CPoly> x = conic_param();
    out.push_back(check("(1,3) conic parametrization lies on the conic", eval_mpoly(defining_poly_k3(1, 3), x).is_zero()));
    std::vector<CPoly> x4 = x;
    x4.push_back(clin(Cyclo(0), Cyclo(-3)));
    out.push_back(check("(1,3) quadruple parametrization has sigma_1 = 0", eval_mpoly(elementary_poly(1, 4), x4).is_zero()));
    out.push_back(check("(1,3) quadruple parametrization has sigma_2 = 0", eval_mpoly(elementary_poly(2, 4), x4).is_zero()));
    out.push_back(check("(1,3) conic parametrization maps to zeta_13", zeta_from_sigmas(1, 3, x, false) == z13));
    // quadratic transformation x_i -> x_j x_k carries it to the (3,1) quartic
    std::vector<CPoly> y = {x[1] * x[2], x[0] * x[2], x[0] * x[1]};
    out.push_back(check("(3,1) quartic parametrization lies on the quartic", eval_mpoly(defining_poly_k3(3, 1), y).is_zero()));
    out.push_back(check("(3,1) quartic parametrization maps to zeta_13", zeta_from_sigmas(3, 1, y, true) == z13));
    return out;
}

std::vector<Check> composition_checks(int max_n)
{
    std::vector<Check> out;
    for (int n = 2; n <= max_n; ++n)
        for (int p = 1; p < n; ++p) {
            int q = n - p;
            if (std::gcd(p, q) != 1)
                continue;
            std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            out.push_back(check("pi2 = phi1 o phi2 for " + tag, pi2(p, q) == phi1(p, q).compose(phi2(p, q))));
        }
    auto R = [](std::vector<Rat> n, std::vector<Rat> d) { return QRatFunc(QPoly(std::move(n)), QPoly(std::move(d))); };
    QRatFunc z12 = belyi_catalog("zeta_12");
    out.push_back(check("zeta_12 = 1 + (1-t^3)^2/(4t^3)",
                        z12 == QRatFunc(one_poly) + R({1, 0, 0, -1}, {1}).pow(2) / R({0, 0, 0, 4}, {1})));
    out.push_back(check("zeta_12 = phi1(1,2) o (1-t+t^2)/(1+t)^2",
                        z12 == phi1(1, 2).compose(R({1, -1, 1}, {1, 2, 1}))));
    out.push_back(check("zeta_12 = phi1(2,1) o (1+t)^2/(1-t+t^2)",
                        z12 == phi1(2, 1).compose(R({1, 2, 1}, {1, -1, 1}))));
    QRatFunc z13 = belyi_catalog("zeta_13");
    QRatFunc inner = R({1, -1, 3, -3}, {1, 3, 3, 1});
    QRatFunc quad = R({1, -2, -2}, {1, 4, -2});
    out.push_back(check("zeta_13 = phi1(1,3) o (1-t)(1+3t^2)/(1+t)^3 o (1-2u-2u^2)/(1+4u-2u^2)",
                        z13 == phi1(1, 3).compose(inner).compose(quad)));
    QPoly d13 = QPoly(std::vector<Rat>{1, 0, 0, -20, 0, 0, -8});
    QPoly a13 = QPoly(std::vector<Rat>{1, 0, 0, 0, 0, 0, 8}).pow(2) * QPoly(std::vector<Rat>{1, 0, 0, 88, 0, 0, -8}).pow(2);
    out.push_back(check("zeta_13 = 1 - (1+8u^6)^2(1+88u^3-8u^6)^2/(1-20u^3-8u^6)^4",
                        z13 == QRatFunc(one_poly) - QRatFunc(a13, d13.pow(4))));
    QRatFunc z23 = belyi_catalog("zeta_23");
    QPoly q5 = QPoly(std::vector<Rat>{1, 10, 5}).pow(5);
    QPoly a23 = QPoly(std::vector<Rat>{1, -35, -125, -225}).pow(2) * QPoly(std::vector<Rat>{27, 115, 25, 25});
    out.push_back(check("zeta_23 = 1 - (1-35v-125v^2-225v^3)^2(27+115v+25v^2+25v^3)/(27(1+10v+5v^2)^5)",
                        z23 == QRatFunc(one_poly) - QRatFunc(a23, q5 * Rat(27))));
    out.push_back(check("zeta_23 o t^2 = pi2(2,3)", z23.compose(QRatFunc(QPoly::x(2))) == pi2(2, 3)));
    QRatFunc z14 = belyi_catalog("zeta_14");
    QRatFunc sx = R({-5, 19, 25, 25}, {0, 64});
    out.push_back(check("zeta_14 = phi1(1,4) o -(1-5x)(5+6x+5x^2)/(64x)", z14 == phi1(1, 4).compose(sx)));
    QPoly a14 = QPoly(std::vector<Rat>{4, -5, -10, -5}) * QPoly(std::vector<Rat>{1, -55, -5, -5}).pow(2) *
                QPoly(std::vector<Rat>{1, 0, 5, 10}).pow(2);
    QPoly d14 = lin(1, -1).pow(5) * QPoly(std::vector<Rat>{1, 10, 5}).pow(5) * Rat(4);
    out.push_back(check("zeta_14 = 1 - (4-5x-10x^2-5x^3)(1-55x-5x^2-5x^3)^2(1+5x^2+10x^3)^2/(4(1-x)^5(1+10x+5x^2)^5)",
                        z14 == QRatFunc(one_poly) - QRatFunc(a14, d14)));
    for (int p = 1; p <= 7; p += 2)
        out.push_back(check("zeta_p2 = pi2(p,2) for p = " + std::to_string(p), belyi_catalog("zeta_p2", p) == pi2(p, 2)));
    for (int p = 1; p <= 6; ++p)
        out.push_back(check("zeta_p1 = phi1(p,1) for p = " + std::to_string(p), belyi_catalog("zeta_p1", p) == phi1(p, 1)));
    out.push_back(check("zeta_11 = phi1(1,1)", belyi_catalog("zeta_11") == phi1(1, 1)));
    return out;
}

Rat elliptic_j(const QPoly& f)
{
    int d = f.degree();
    if (d != 3 && d != 4)
        throw ConstraintError("elliptic_j needs a cubic or quartic");
    if (poly_gcd(f, f.derivative()).degree() > 0)
        throw ConstraintError("elliptic_j needs a squarefree polynomial");
    Rat a = f.coeff(4), b = f.coeff(3), c = f.coeff(2), dd = f.coeff(1), e = f.coeff(0);
    Rat I = (Rat(12) * a * e - Rat(3) * b * dd + c * c) / Rat(3);
    Rat J = (Rat(72) * a * c * e + Rat(9) * b * c * dd - Rat(27) * a * dd * dd - Rat(27) * e * b * b -
             Rat(2) * c * c * c) / Rat(54);
    Rat disc = I.pow(3) - Rat(27) * J * J;
    if (disc.is_zero())
        throw ConstraintError("elliptic_j: degenerate invariants");
    return Rat(1728) * I.pow(3) / disc;
}

}  // namespace thyp
