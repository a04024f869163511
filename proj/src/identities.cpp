#include "thyp/identities.hpp"

#include "thyp/errors.hpp"
#include "thyp/geometry.hpp"
#include "thyp/symmetric.hpp"

#include <gmpxx.h>

namespace thyp {

namespace {

using CPoly = UPoly<Cyclo>;

const ParamRat one(1);

ParamRat R(const Rat& x) { return ParamRat(x); }
ParamRat R(long n, long d = 1) { return ParamRat(Rat(n, d)); }

Cyclo C(const ParamRat& x) { return Cyclo(x); }

PSeries plift(const QSeries& s)
{
    return s.map([](const Rat& x) { return ParamRat(x); });
}

CSeries clift(const QSeries& s)
{
    return s.map([](const Rat& x) { return Cyclo(ParamRat(x)); });
}

QPoly lin(const Rat& c0, const Rat& c1) { return QPoly(std::vector<Rat>{c0, c1}); }

int low_order(const QPoly& p)
{
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero())
            return i;
    throw std::domain_error("low_order: zero polynomial");
}

QPoly drop_low(const QPoly& p, int k)
{
    std::vector<Rat> c;
    for (int i = k; i <= p.degree(); ++i)
        c.push_back(p.coeff(i));
    return QPoly(std::move(c));
}

// hyp(spec) at the argument series, which must vanish at 0, as a common
// denominator and a series with polynomial coefficients.
std::pair<MPoly, PSeries> hyp_at(const HypSpec& spec, const QRatFunc& arg, int N)
{
    QSeries X = from_ratfunc(N, arg);
    int v = X.valuation();
    if (v < 1)
        throw std::domain_error("hyp_at: argument must vanish at 0");
    auto [D, P] = clear_denominators(hyp_series(spec, N / v));
    return {D, compose(P, plift(X))};
}

void set_lhs(Sides& s, const std::pair<MPoly, PSeries>& h)
{
    s.lhs = lift(h.second);
    s.lhs_den = h.first;
}

QSeries qhyp_at(const HypSpec& spec, const QRatFunc& arg, int N)
{
    auto [D, P] = hyp_at(spec, arg, N);
    Rat inv = D.constant_value().inverse();
    return P.map([&](const ParamRat& x) { return x.constant_value() * inv; });
}

// Branches of base^e, base = c t^v U with U(0) = 1: c^e t^{ve} U^e times the
// den(e)-th roots of unity.
std::vector<CSeries> frac_power_branches(const QRatFunc& base, const Rat& e, int N)
{
    int on = low_order(base.num()), od = low_order(base.den());
    int v = on - od;
    Rat ve = Rat(v) * e;
    if (!ve.is_integer() || ve.sign() < 0)
        throw std::domain_error("frac_power: base^e is not a power series");
    QPoly un = drop_low(base.num(), on), ud = drop_low(base.den(), od);
    Rat c = un.coeff(0) / ud.coeff(0);
    int m = static_cast<int>(e.den().get_si());
    std::optional<Rat> root = rat_root(c.pow(e.num().get_si()), m);
    if (!root)
        throw std::domain_error("frac_power: constant has no rational root");
    QSeries U = from_ratfunc(N, QRatFunc(un * c.inverse(), ud));
    QSeries P = pow_param(U, e).shift_up(static_cast<int>(ve.to_long())) * QSeries::constant(N, *root);
    CSeries base_series = clift(P);
    std::vector<CSeries> out;
    for (int k = 0; k < m; ++k)
        out.push_back(base_series * CSeries::constant(N, Cyclo::root(m, k)));
    return out;
}

// Multiplies lhs by the branch of base^e whose leading term matches rhs.
void apply_prefactor(Sides& s, const QRatFunc& base, const Rat& e, int N)
{
    if (e.is_zero())
        return;
    std::vector<CSeries> br = frac_power_branches(base, e, N);
    int v = s.rhs.valuation();
    int m = static_cast<int>(br.size());
    for (int k = 0; k < m; ++k) {
        CSeries cand = s.lhs * br[static_cast<std::size_t>(k)];
        if (v >= 0 && v <= N && cand[v] * Cyclo(ParamRat(s.rhs_den)) == s.rhs[v] * Cyclo(ParamRat(s.lhs_den))) {
            s.lhs = cand;
            s.branch_choices.push_back("prefactor root of unity exp(2 pi i " + std::to_string(k) + "/" +
                                       std::to_string(m) + ")");
            return;
        }
    }
    s.lhs = s.lhs * br[0];
    s.branch_choices.push_back("prefactor: no branch matched, principal taken");
}

struct RootBranch {
    CSeries y;
    Cyclo weight;
};

struct FamilyData {
    HypSpec spec;
    QRatFunc arg;
    QRatFunc frac_base;
    Rat frac_exp{0};
    ParamRat coeff{1};
    Rat avg{1};
    std::vector<RootBranch> roots;
    ParamRat B;
};

Sides assemble(const FamilyData& d, const IdentityParams& ip, bool interp, int N)
{
    ParamRat a = ip.sym(ka), c = ip.sym(kc);
    ParamRat A = -a;
    Sides s;
    set_lhs(s, hyp_at(mutate_spec(d.spec, ip.mutation), mutate_arg(d.arg, ip.mutation), N));
    CSeries acc(N);
    ParamRat scale = d.coeff * R(d.avg);
    if (interp) {
        PSeries G = G_series(ip.l, A, d.B, -c, N);
        if (ip.mutation == Mutation::KernelSign && N >= 1)
            G[1] = -G[1];
        MPoly D(1);
        for (const auto& r : d.roots) {
            auto [Dr, num] = series_kernel_side_cleared(r.y, A, G);
            D = Dr;
            acc += num * CSeries::constant(N, r.weight);
        }
        s.rhs = acc * CSeries::constant(N, C(ParamRat(scale.num())));
        s.rhs_den = D * scale.den();
    } else {
        Kernel K = mutate_kernel(F_ell(ip.l, A, d.B), ip.mutation);
        for (const auto& r : d.roots)
            acc += kernel_side(r.y, A, K) * CSeries::constant(N, r.weight);
        s.rhs = acc * CSeries::constant(N, C(scale));
    }
    if (d.roots.size() > 1)
        s.branch_choices.push_back("root average over " + std::to_string(d.roots.size()) +
                                   " branches, each equal to 1 at the origin");
    apply_prefactor(s, d.frac_base, d.frac_exp, N);
    return s;
}

ParamRat sign(int k) { return ParamRat(k % 2 ? -1 : 1); }

CSeries cseries(const CPoly& num, const CPoly& den, int N)
{
    return series_div(CSeries::from_poly(N, num), CSeries::from_poly(N, den));
}

CPoly clin(const Cyclo& c0, const Cyclo& c1) { return CPoly(std::vector<Cyclo>{c0, c1}); }

CPoly cpoly(const QPoly& p)
{
    return p.map([](const Rat& x) { return Cyclo(ParamRat(x)); });
}

void check_l(int l)
{
    if (l != 0 && l != 1)
        throw ConstraintError("the c-interpolated identities need l = 0 or 1");
}

void check_kappa(int kappa, int m)
{
    if (kappa < 0 || kappa >= m)
        throw ConstraintError("kappa must lie in 0.." + std::to_string(m - 1));
}

std::pair<Rat, Rat> b_pair(int kappa)
{
    static const Rat table[3][2] = {{Rat(1, 3), Rat(2, 3)}, {Rat(2, 3), Rat(4, 3)}, {Rat(4, 3), Rat(5, 3)}};
    return {table[kappa][0], table[kappa][1]};
}

FamilyData s_line(const IdentityParams& ip, bool interp, int N)
{
    int p = ip.p, n = p + 1;
    if (p < 1)
        throw ConstraintError("p must be positive");
    if (ip.kappa != 0)
        throw ConstraintError("kappa must be 0 on the q = 1 line");
    ParamRat a = ip.sym(ka), c = ip.sym(kc), l(ip.l);
    FamilyData d;
    for (int i = 0; i < n; ++i)
        d.spec.upper.push_back((a + R(i)) / R(n));
    if (!interp) {
        for (int i = 1; i <= p; ++i)
            d.spec.lower.push_back((a - l + R(i)) / R(p));
    } else {
        d.spec.upper.push_back((a + c - l) / R(p));
        for (int i = 0; i < p; ++i)
            d.spec.lower.push_back((a - l + R(i)) / R(p));
        d.spec.lower.push_back((a + c - l + R(p)) / R(p));
    }
    d.arg = belyi_catalog("zeta_p1", p);
    d.roots.push_back({cseries(CPoly(Cyclo(1)), cpoly(lin(1, -1)), N), Cyclo(1)});
    d.B = R(-p);
    return d;
}

FamilyData s_pair(const IdentityParams& ip, bool interp, int N)
{
    int k = ip.kappa;
    check_kappa(k, 2);
    ParamRat a = ip.sym(ka), c = ip.sym(kc), l(ip.l), h2 = R(k, 2);
    FamilyData d;
    if (!interp) {
        d.spec.upper = {-a + l + h2, a + h2};
        d.spec.lower = {R(1, 2) + R(k)};
        d.coeff = sign(k) * pochhammer(a + h2, 1 - ip.l - k) / pochhammer(a, 1 - ip.l);
    } else {
        d.spec.upper = {-a + l + one + h2, a + h2, -a - c + l + h2};
        d.spec.lower = {R(1, 2) + R(k), -a - c + l + one + h2};
        d.coeff = sign(k) * pochhammer(a + h2, -ip.l - k) * (a + c - l - h2) /
                  (pochhammer(a, -ip.l) * (a + c - l));
    }
    // local variable h = s - 1
    QPoly h = QPoly::x(), one_h = lin(1, 1);
    d.arg = QRatFunc(-(h * h), one_h * QPoly(Rat(4)));
    d.frac_base = QRatFunc(one_h, h * h);
    d.frac_exp = Rat(-k, 2);
    d.roots.push_back({cseries(CPoly(Cyclo(1)), cpoly(one_h), N), Cyclo(1)});
    d.roots.push_back({cseries(cpoly(one_h), CPoly(Cyclo(1)), N), C(sign(k))});
    d.avg = Rat(1, 2);
    d.B = R(1, 2);
    return d;
}

FamilyData t_pair(const IdentityParams& ip, bool interp, int N)
{
    int p = ip.p, n = p + 2, k = ip.kappa;
    if (p < 1 || p % 2 == 0)
        throw ConstraintError("the q = 2 line needs odd p");
    check_kappa(k, 2);
    ParamRat a = ip.sym(ka), c = ip.sym(kc), l(ip.l), h2 = R(k, 2);
    FamilyData d;
    for (int i = 0; i < n; ++i)
        d.spec.upper.push_back((a + R(i)) / R(n) + h2);
    if (!interp) {
        for (int i = 1; i <= p; ++i)
            d.spec.lower.push_back((a - l + R(i)) / R(p) + h2);
        d.spec.lower.push_back(R(1, 2) + R(k));
        d.coeff = sign(k) * pochhammer(a + R(n) * h2, 1 - ip.l - k) / pochhammer(a, 1 - ip.l);
    } else {
        d.spec.upper.push_back((a + c - l) / R(p) + h2);
        for (int i = 0; i < p; ++i)
            d.spec.lower.push_back((a - l + R(i)) / R(p) + h2);
        d.spec.lower.push_back(R(1, 2) + R(k));
        d.spec.lower.push_back((a + c - l + R(p)) / R(p) + h2);
        d.coeff = sign(k) * pochhammer(a + R(n) * h2, -ip.l - k) * (a + c - l + R(p) * h2) /
                  (pochhammer(a, -ip.l) * (a + c - l));
    }
    d.arg = belyi_catalog("zeta_p2", p);
    d.frac_base = d.arg * QRatFunc(Rat(4) * Rat(p).pow(p) / Rat(n).pow(n));
    d.frac_exp = Rat(k, 2);
    QPoly tp = lin(1, 1), tm = lin(1, -1);
    QPoly Rn = tp.pow(p) + tm.pow(p), Rd = tp.pow(n) + tm.pow(n);
    d.roots.push_back({cseries(cpoly(tp * tp * Rn), cpoly(Rd), N), Cyclo(1)});
    d.roots.push_back({cseries(cpoly(tm * tm * Rn), cpoly(Rd), N), C(sign(k))});
    d.avg = Rat(1, 2);
    d.B = R(-p, 2);
    return d;
}

Cyclo w3(long k) { return Cyclo::root(3, k); }

FamilyData t_triple(const IdentityParams& ip, bool interp, int N)
{
    int k = ip.kappa;
    check_kappa(k, 3);
    ParamRat a = ip.sym(ka), c = ip.sym(kc), l(ip.l), k3 = R(k, 3);
    auto [b1, b2] = b_pair(k);
    FamilyData d;
    ParamRat fact = pochhammer(one, k);
    if (!interp) {
        d.spec.upper = {-a + l + k3, a / R(2) + k3, (a + one) / R(2) + k3};
        d.spec.lower = {R(b1), R(b2)};
        d.coeff = sign(k) * fact * pochhammer(a + R(2) * k3, 1 - ip.l - k) / pochhammer(a, 1 - ip.l);
    } else {
        d.spec.upper = {-a + l + one + k3, a / R(2) + k3, (a + one) / R(2) + k3, -a - c + l + k3};
        d.spec.lower = {R(b1), R(b2), -a - c + l + one + k3};
        d.coeff = sign(k) * fact * pochhammer(a + R(2) * k3, -ip.l - k) * (a + c - l - k3) /
                  (pochhammer(a, -ip.l) * (a + c - l));
    }
    QPoly t3 = QPoly::x(3), s = QPoly(Rat(1)) + t3;
    d.arg = QRatFunc(t3 * QPoly(Rat(4)), s * s);
    d.frac_base = QRatFunc(s * s, t3 * QPoly(Rat(27)));
    d.frac_exp = Rat(-k, 3);
    CPoly den = cpoly(s);
    d.roots.push_back({cseries(clin(Cyclo(1), Cyclo(1)).pow(3), den, N), Cyclo(1)});
    d.roots.push_back({cseries(clin(w3(2), w3(1)).pow(3), den, N), w3(k)});
    d.roots.push_back({cseries(clin(w3(1), w3(2)).pow(3), den, N), w3(2 * k)});
    d.avg = Rat(1, 3);
    d.B = R(1, 3);
    return d;
}

FamilyData u_conic(const IdentityParams& ip, bool interp, int N)
{
    int k = ip.kappa;
    check_kappa(k, 3);
    ParamRat a = ip.sym(ka), c = ip.sym(kc), l(ip.l), k3 = R(k, 3);
    auto [b1, b2] = b_pair(k);
    FamilyData d;
    ParamRat fact = pochhammer(one, k);
    for (int i = 0; i < 4; ++i)
        d.spec.upper.push_back((a + R(i)) / R(4) + k3);
    if (!interp) {
        d.spec.lower = {a - l + one + k3, R(b1), R(b2)};
        d.coeff = sign(k) * fact * pochhammer(a + R(4) * k3, 1 - ip.l - k) / pochhammer(a, 1 - ip.l);
    } else {
        d.spec.upper.push_back(a + c - l + k3);
        d.spec.lower = {a - l + k3, R(b1), R(b2), a + c - l + one + k3};
        d.coeff = sign(k) * fact * pochhammer(a + R(4) * k3, -ip.l - k) * (a + c - l + k3) /
                  (pochhammer(a, -ip.l) * (a + c - l));
    }
    d.arg = belyi_catalog("zeta_13");
    d.frac_base = d.arg * QRatFunc(Rat(-27, 256));
    d.frac_exp = Rat(k, 3);
    CPoly g = cpoly(QPoly(std::vector<Rat>{1, 0, 0, -20, 0, 0, -8}));
    for (int j = 0; j < 3; ++j) {
        Cyclo wj = w3(j);
        CPoly num = (clin(Cyclo(1), -wj) * clin(Cyclo(1), wj * Cyclo(2))).pow(3);
        d.roots.push_back({cseries(num, g, N), w3(2 * j * k)});
    }
    d.avg = Rat(1, 3);
    d.B = R(-1, 3);
    return d;
}

QRatFunc qconst(const Rat& c) { return QRatFunc(c); }

QPoly P(std::vector<Rat> c) { return QPoly(std::move(c)); }

// F with F^2 + b F + c = 0 in the sides lhs = F^2, rhs = -b F - c.
Sides quadratic_sides(const QSeries& F, const std::pair<QRatFunc, QRatFunc>& bc, int N)
{
    Sides s;
    s.lhs = clift(F * F);
    s.rhs = clift(-(from_ratfunc(N, bc.first) * F) - from_ratfunc(N, bc.second));
    return s;
}

// An even rational function of t as a function of v = t^2.
QRatFunc even_to_v(const QRatFunc& f)
{
    QPoly n = f.num(), d = f.den();
    if (low_order(n) % 2 == 1 && low_order(d) % 2 == 1) {
        n = drop_low(n, 1);
        d = drop_low(d, 1);
    }
    auto half = [](const QPoly& p) {
        std::vector<Rat> c;
        for (int i = 0; i <= p.degree(); ++i) {
            if (i % 2 == 1 && !p.coeff(i).is_zero())
                throw std::logic_error("even_to_v: odd term");
            if (i % 2 == 0)
                c.push_back(p.coeff(i));
        }
        return QPoly(std::move(c));
    };
    return QRatFunc(half(n), half(d));
}

// The cube of the 4F3 on the v line, order N.
QSeries v_line_cube(Mutation m, int N)
{
    HypSpec s{{R(-1, 15), R(2, 15), R(8, 15), R(11, 15)}, {R(1, 3), R(2, 3), R(5, 6)}};
    QSeries F = qhyp_at(mutate_spec(s, m), mutate_arg(belyi_catalog("zeta_23"), m), N);
    return F * F * F;
}

QSeries x_line_fourth(Mutation m, int N)
{
    HypSpec s{{R(-1, 20), R(3, 20), R(7, 20), R(11, 20)}, {R(1, 4), R(1, 2), R(3, 4)}};
    QSeries F = qhyp_at(mutate_spec(s, m), mutate_arg(belyi_catalog("zeta_14"), m), N);
    QSeries F2 = F * F;
    return F2 * F2;
}

QSeries qpow(const QSeries& f, const Rat& e) { return pow_param(f, e); }

QSeries qpoly_series(int N, std::vector<Rat> c) { return QSeries::from_poly(N, QPoly(std::move(c))); }

}  // namespace

std::string mutation_name(Mutation m)
{
    switch (m) {
    case Mutation::None: return "none";
    case Mutation::KernelSign: return "kernel-sign";
    case Mutation::MapCoeff: return "map-coeff";
    case Mutation::PochOffset: return "poch-offset";
    }
    return "none";
}

Mutation parse_mutation(const std::string& s)
{
    for (Mutation m : {Mutation::None, Mutation::KernelSign, Mutation::MapCoeff, Mutation::PochOffset})
        if (mutation_name(m) == s)
            return m;
    throw std::invalid_argument("unknown mutation: " + s);
}

ParamRat IdentityParams::sym(int slot) const
{
    auto it = values.find(slot);
    return it == values.end() ? ParamRat::var(slot) : it->second;
}

std::optional<Rat> rat_root(const Rat& x, int m)
{
    if (m < 1)
        throw std::invalid_argument("rat_root: m must be positive");
    if (x.sign() < 0) {
        if (m % 2 == 0)
            return std::nullopt;
        auto r = rat_root(-x, m);
        if (!r)
            return std::nullopt;
        return -*r;
    }
    mpz_class n = x.num(), d = x.den(), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(m)))
        return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(m)))
        return std::nullopt;
    return Rat(rn, rd);
}

Kernel mutate_kernel(const Kernel& K, Mutation m)
{
    if (m != Mutation::KernelSign)
        return K;
    // flips the sign of the part of the denominator vanishing at y = 1
    ParamRat den(K.den()), num(K.num());
    ParamRat d1 = den.subst({{kY, ParamRat(1)}});
    if (den == d1)
        return -num / den;
    return num / (ParamRat(2) * d1 - den);
}

HypSpec mutate_spec(HypSpec s, Mutation m)
{
    if (m == Mutation::PochOffset && !s.upper.empty())
        s.upper[0] += ParamRat(1);
    return s;
}

QRatFunc mutate_arg(const QRatFunc& f, Mutation m)
{
    if (m == Mutation::MapCoeff)
        return f * QRatFunc(Rat(2));
    return f;
}

Sides kernel_ladder_sides(const IdentityParams& ip, int N)
{
    ParamRat A = ip.sym(kA), B = ip.sym(kB);
    int l = ip.l;
    PSeries y = solve_trinomial_std(B, N);
    Kernel K = mutate_kernel(F_ell(l, A, B), ip.mutation);
    Sides s;
    s.lhs = lift(pow_param(y, A) * eval_kernel(K, y));
    s.rhs = lift(binomial_side([&](long k) { return f_ell(l, A, B, k); }, A, B, N));
    return s;
}

Sides kernel_interp_sides(const IdentityParams& ip, int N)
{
    check_l(ip.l);
    ParamRat A = ip.sym(kA), B = ip.sym(kB), Cc = ip.sym(kC);
    int l = ip.l;
    PSeries y = solve_trinomial_std(B, N);
    PSeries G = G_series(l, A, B, Cc, N);
    if (ip.mutation == Mutation::KernelSign && N >= 1)
        G[1] = -G[1];
    Sides s;
    auto [D, num] = series_kernel_side_cleared(lift(y), A, G);
    s.lhs = num;
    s.lhs_den = D;
    s.rhs = lift(binomial_side([&](long k) { return g_ell(l, A, B, Cc, k); }, A, B, N));
    return s;
}

Sides pair_sample_sides(const IdentityParams& ip, int N)
{
    int p = ip.p, n = p + 2;
    if (p < 1 || p % 2 == 0)
        throw ConstraintError("the q = 2 line needs odd p");
    ParamRat a = ip.sym(ka);
    HypSpec spec;
    for (int i = 0; i < n; ++i)
        spec.upper.push_back((a + R(i)) / R(n));
    for (int i = 1; i <= p; ++i)
        spec.lower.push_back((a + R(i)) / R(p));
    spec.lower.push_back(R(1, 2));
    Sides s;
    set_lhs(s, hyp_at(mutate_spec(spec, ip.mutation), mutate_arg(belyi_catalog("zeta_p2", p), ip.mutation), N));
    QPoly tp = lin(1, 1), tm = lin(1, -1);
    PSeries sp = plift(QSeries::from_poly(N, tp)), sm = plift(QSeries::from_poly(N, tm));
    PSeries ratio = plift(from_ratfunc(N, QRatFunc(tp.pow(n) + tm.pow(n), tp.pow(p) + tm.pow(p))));
    PSeries half = PSeries::constant(N, R(1, 2));
    ParamRat e = R(-2) * a;
    s.rhs = lift(half * (pow_param(sp, e) + pow_param(sm, e)) * pow_param(ratio, a));
    return s;
}

Sides family_sides(LineFamily fam, const IdentityParams& ip, bool interp, int N)
{
    if (interp)
        check_l(ip.l);
    FamilyData d;
    switch (fam) {
    case LineFamily::SLine: d = s_line(ip, interp, N); break;
    case LineFamily::SPair: d = s_pair(ip, interp, N); break;
    case LineFamily::TPair: d = t_pair(ip, interp, N); break;
    case LineFamily::TTriple: d = t_triple(ip, interp, N); break;
    case LineFamily::UConic: d = u_conic(ip, interp, N); break;
    }
    return assemble(d, ip, interp, N);
}

Sides degenerate_line_sides(const IdentityParams& ip, int N)
{
    int p = ip.p, n = p + 1;
    if (p < 1)
        throw ConstraintError("p must be positive");
    HypSpec spec;
    spec.upper.push_back(R(-1, n));
    for (int i = 1; i <= n - 2; ++i)
        spec.upper.push_back(R(i, n));
    for (int i = 1; i <= n - 2; ++i)
        spec.lower.push_back(R(i, n - 1));
    Sides s;
    set_lhs(s, hyp_at(mutate_spec(spec, ip.mutation), mutate_arg(belyi_catalog("zeta_p1", p), ip.mutation), N));
    s.rhs = clift(from_ratfunc(N, QRatFunc(lin(n - 1, 1), lin(n - 1, -(n - 1)))));
    return s;
}

Sides degenerate_line_limit_sides(const IdentityParams& ip, int N)
{
    int p = ip.p, n = p + 1;
    if (p < 1)
        throw ConstraintError("p must be positive");
    std::vector<Affine> up, lo;
    for (int i = 0; i < n; ++i)
        up.emplace_back(Rat(1, n), Rat(i, n));
    for (int i = 1; i <= p; ++i)
        lo.emplace_back(Rat(1, p), Rat(i, p));
    if (ip.mutation == Mutation::PochOffset)
        up[0].offset += Rat(1);
    QRatFunc arg = mutate_arg(belyi_catalog("zeta_p1", p), ip.mutation);
    QSeries X = from_ratfunc(N, arg);
    QSeries lim = hyp_series_limit(up, lo, Rat(-1), N / X.valuation());
    Sides s;
    s.lhs = clift(compose(lim, X));
    s.rhs = clift(from_ratfunc(N, QRatFunc(QPoly(Rat(1)), lin(1, -1))));
    return s;
}

QRatFunc integral_closed_form(int a)
{
    if (a > -1)
        throw ConstraintError("the integral family needs a <= -1");
    PairElimination el = k2_elimination(2, 3);
    const QRatFunc& s3 = el.sigma_q_t;
    const QRatFunc& s5 = el.sigma_n_t;
    int gamma = -3 * a;
    QRatFunc Pa;
    MPoly power_sum = power_sum_on_curve(gamma, 2, 3);
    for (const auto& [mono, coef] : power_sum.terms())
        Pa = Pa + s3.pow(mono_exp(mono, 0)) * s5.pow(mono_exp(mono, 1)) * qconst(coef);
    QRatFunc tp(lin(1, 1)), tm(lin(-1, 1));
    QRatFunc inner = Pa - tp.pow(gamma) - tm.pow(gamma);
    return s3.pow(a) * inner * qconst(Rat(1, 3));
}

Sides integral_pair_sides(const IdentityParams& ip, int N)
{
    int a = ip.ia;
    if (a > -1)
        throw ConstraintError("the integral family needs a <= -1");
    std::vector<Affine> up, lo;
    for (int i = 0; i < 5; ++i)
        up.emplace_back(Rat(1, 5), Rat(i, 5));
    lo.emplace_back(Rat(1, 2), Rat(1, 2));
    lo.emplace_back(Rat(1, 2), Rat(1));
    lo.emplace_back(Rat(1, 3));
    lo.emplace_back(Rat(2, 3));
    if (ip.mutation == Mutation::PochOffset)
        up[0].offset += Rat(1);
    QRatFunc zeta = mutate_arg(k2_elimination(2, 3).zeta_t, ip.mutation);
    QSeries X = from_ratfunc(N, zeta);
    QSeries lim = hyp_series_limit(up, lo, Rat(a), N / X.valuation());
    Sides s;
    s.lhs = clift(compose(lim, X));
    s.rhs = clift(from_ratfunc(N, integral_closed_form(a)));
    return s;
}

Sides integral_reduction_sides(int which, const IdentityParams& ip, int N)
{
    QRatFunc zeta = mutate_arg(k2_elimination(2, 3).zeta_t, ip.mutation);
    QSeries X = from_ratfunc(N, zeta);
    int M = N / X.valuation();
    QSeries z = QSeries::monomial(M, 1, Rat(1));
    QSeries f;
    int a;
    auto H = [&](HypSpec s) {
        return hyp_series(mutate_spec(std::move(s), ip.mutation), M).map(
            [](const ParamRat& x) { return x.constant_value(); });
    };
    if (which == 0) {
        a = -1;
        QSeries h = H({{R(4, 5), R(6, 5), R(7, 5), R(8, 5), R(1)}, {R(3, 2), R(4, 3), R(5, 3), R(2)}});
        f = QSeries::constant(M, Rat(1)) - z * h * QSeries::constant(M, Rat(4 * 27, 3125));
    } else if (which == 1) {
        a = -1;
        QSeries h = H({{R(-1, 5), R(1, 5), R(2, 5), R(3, 5)}, {R(1, 2), R(1, 3), R(2, 3)}});
        f = QSeries::constant(M, Rat(3, 5)) + h * QSeries::constant(M, Rat(2, 5));
    } else if (which == 2) {
        a = -5;
        QSeries h = H({{R(11, 5), R(12, 5), R(13, 5), R(14, 5), R(2)}, {R(3, 2), R(10, 3), R(11, 3), R(4)}});
        Rat c1(36, 625), c3 = Rat(64 * 19683) / Rat(5).pow(14);
        f = QSeries::constant(M, Rat(1)) - z * QSeries::constant(M, c1) -
            z * z * z * h * QSeries::constant(M, c3);
    } else {
        throw std::invalid_argument("integral_reduction_sides: which must be 0, 1 or 2");
    }
    Sides s;
    s.lhs = clift(compose(f, X));
    s.rhs = clift(from_ratfunc(N, integral_closed_form(a)));
    return s;
}

Sides v_line_sides(int which, const IdentityParams& ip, int N)
{
    QRatFunc arg = mutate_arg(belyi_catalog("zeta_23"), ip.mutation);
    Sides s;
    if (which == 0) {
        HypSpec spec{{R(-1, 5), R(1, 5), R(2, 5), R(3, 5)}, {R(1, 2), R(1, 3), R(2, 3)}};
        set_lhs(s, hyp_at(mutate_spec(spec, ip.mutation), arg, N));
        s.rhs = clift(from_ratfunc(N, QRatFunc(P({3, 0, 5}), P({3, 30, 15}))));
    } else if (which == 1) {
        HypSpec spec{{R(11, 5), R(12, 5), R(13, 5), R(14, 5), R(2)}, {R(3, 2), R(10, 3), R(11, 3), R(4)}};
        set_lhs(s, hyp_at(mutate_spec(spec, ip.mutation), arg, N));
        QPoly num = P({3, 1}) * P({5, 10, 1}) * P({1, 28, 134, 92, 1}) * P({1, 10, 5}).pow(10);
        QPoly den = P({1, -1}).pow(18) * P({1, 3}).pow(9) * QPoly(Rat(15));
        s.rhs = clift(from_ratfunc(N, QRatFunc(num, den)));
    } else {
        throw std::invalid_argument("v_line_sides: which must be 0 or 1");
    }
    return s;
}

std::pair<QRatFunc, QRatFunc> v_quadratic_stated()
{
    QPoly q = P({1, 10, 5});
    QRatFunc b(-P({27, 90, -5}), QPoly(Rat(27)) * q);
    QRatFunc c(-(P({0, 4}) * P({3, 5}).pow(3)), QPoly(Rat(729)) * q * q);
    return {b, c};
}

std::pair<QRatFunc, QRatFunc> v_quadratic_from_cosets()
{
    // elementary functions of the three remaining roots in terms of the pair
    PairElimination el = k2_elimination(2, 3);
    std::vector<ParamRat> hs;
    for (int m = 1; m <= 3; ++m)
        hs.push_back(hat_sigma(m, 2, 2, 3, m <= 2 ? 1 : 2, el.sigma_n));
    auto eval_gens = [&](const MPoly& f) {
        ParamRat out;
        for (const auto& [mono, coef] : f.terms()) {
            ParamRat t(coef);
            for (int v = 0; v < 3; ++v)
                if (int d = mono_exp(mono, v))
                    t *= hs[static_cast<std::size_t>(v)].pow(d);
            out += t;
        }
        return out;
    };
    auto at_t = [](const MPoly& p) {
        QPoly out;
        for (const auto& [mono, coef] : p.terms())
            out += lin(1, 1).pow(mono_exp(mono, 0)) * lin(-1, 1).pow(mono_exp(mono, 1)) * QPoly(coef);
        return out;
    };
    UPoly<ParamRat> G = coset_poly(3, 1);
    if (G.degree() != 2)
        throw std::logic_error("v_quadratic_from_cosets: expected a quadratic");
    std::vector<QRatFunc> co;
    for (int i = 0; i <= 2; ++i) {
        const ParamRat& ci = G.coeff(i);
        ParamRat v = eval_gens(to_elementary(ci.num(), 3)) / eval_gens(to_elementary(ci.den(), 3));
        co.push_back(QRatFunc(at_t(v.num()), at_t(v.den())));
    }
    // roots y = 27 sigma_3 F
    QRatFunc s27 = el.sigma_q_t * qconst(Rat(27));
    QRatFunc b = co[1] / (co[2] * s27), c = co[0] / (co[2] * s27 * s27);
    return {even_to_v(b), even_to_v(c)};
}

std::pair<QRatFunc, QRatFunc> x_quadratic_stated()
{
    QPoly d = P({1, -1}) * P({1, 10, 5});
    QRatFunc b(-P({8, -5, -10, -5}), QPoly(Rat(8)) * d);
    QRatFunc c(QPoly(Rat(25)) * QPoly::x(2) * P({1, 1}).pow(4), QPoly(Rat(256)) * d * d);
    return {b, c};
}

Sides radical_v_sides(const IdentityParams& ip, int N)
{
    HypSpec spec{{R(-1, 15), R(2, 15), R(8, 15), R(11, 15)}, {R(1, 3), R(2, 3), R(5, 6)}};
    QSeries F = qhyp_at(mutate_spec(spec, ip.mutation), mutate_arg(belyi_catalog("zeta_23"), ip.mutation), N);
    Sides s;
    s.lhs = clift(qpow(qpoly_series(N, {1, 10, 5}), Rat(1, 3)) * F);
    QSeries rad = qpow(qpoly_series(N, {1, 3}) * qpoly_series(N, {1, Rat(115, 27), Rat(25, 27), Rat(25, 27)}),
                       Rat(1, 2));
    QSeries brace = qpoly_series(N, {Rat(1, 2), Rat(5, 3), Rat(-5, 54)}) + rad * QSeries::constant(N, Rat(1, 2));
    s.rhs = clift(qpow(brace, Rat(1, 3)));
    return s;
}

Sides radical_v_quadratic_sides(const IdentityParams& ip, int N, bool from_cosets)
{
    return quadratic_sides(v_line_cube(ip.mutation, N), from_cosets ? v_quadratic_from_cosets() : v_quadratic_stated(),
                           N);
}

Sides radical_x_sides(const IdentityParams& ip, int N)
{
    HypSpec spec{{R(-1, 20), R(3, 20), R(7, 20), R(11, 20)}, {R(1, 4), R(1, 2), R(3, 4)}};
    QSeries F = qhyp_at(mutate_spec(spec, ip.mutation), mutate_arg(belyi_catalog("zeta_14"), ip.mutation), N);
    Sides s;
    s.lhs = clift(qpow(qpoly_series(N, {1, -1}) * qpoly_series(N, {1, 10, 5}), Rat(1, 4)) * F);
    QSeries rad = qpow(qpoly_series(N, {1, Rat(-5, 4), Rat(-5, 2), Rat(-5, 4)}), Rat(1, 2));
    QSeries brace =
        qpoly_series(N, {Rat(1, 2), Rat(-5, 16), Rat(-5, 8), Rat(-5, 16)}) + rad * QSeries::constant(N, Rat(1, 2));
    s.rhs = clift(qpow(brace, Rat(1, 4)));
    return s;
}

Sides radical_x_quadratic_sides(const IdentityParams& ip, int N)
{
    return quadratic_sides(x_line_fourth(ip.mutation, N), x_quadratic_stated(), N);
}

}  // namespace thyp
