#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thyp/errors.hpp"
#include "thyp/geometry.hpp"
#include "thyp/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

using namespace thyp;

namespace {

MPoly e(int i) { return MPoly::var(i - 1); }

// value of a polynomial in generator slots at ParamRat generators
ParamRat eval_gens(const MPoly& f, const std::vector<ParamRat>& g)
{
    ParamRat out;
    for (const auto& [m, c] : f.terms()) {
        ParamRat t(c);
        for (std::size_t v = 0; v < g.size(); ++v)
            if (int d = mono_exp(m, static_cast<int>(v)))
                t *= g[v].pow(d);
        out += t;
    }
    return out;
}

// p_gamma with only e_q, e_n nonzero, relabelled to slots 0, 1
MPoly girard_on_curve(int gamma, int p, int q)
{
    int n = p + q;
    std::vector<MPoly> gens(static_cast<std::size_t>(n));
    gens[static_cast<std::size_t>(q - 1)] = MPoly::var(0);
    gens[static_cast<std::size_t>(n - 1)] = MPoly::var(1);
    return substitute_generators(power_sum_in_elementary(gamma, n), gens);
}

bool coprime(int p, int q) { return std::gcd(p, q) == 1; }

}  // namespace

TEST_CASE("Newton-Girard low cases")
{
    CHECK(power_sum_in_elementary(1, 3) == e(1));
    CHECK(power_sum_in_elementary(2, 3) == e(1) * e(1) - e(2) * Rat(2));
    CHECK(power_sum_in_elementary(3, 3) == e(1).pow(3) - e(1) * e(2) * Rat(3) + e(3) * Rat(3));
    CHECK(elementary_in_power_sums(2) == (e(1) * e(1) - e(2)) * Rat(1, 2));
}

TEST_CASE("power sums to elementary and back")
{
    for (int n = 1; n <= 6; ++n) {
        std::vector<MPoly> E, P;
        for (int l = 1; l <= n; ++l)
            E.push_back(elementary_in_power_sums(l));
        for (int g = 1; g <= 12; ++g) {
            MPoly pg = power_sum_in_elementary(g, n);
            // e_l written in power sums p_1..p_n, then p_g in those: p_g in p's
            MPoly back = substitute_generators(pg, E);
            if (g <= n)
                CHECK(back == MPoly::var(g - 1));
            P.push_back(pg);
        }
        for (int l = 1; l <= n; ++l)
            CHECK(substitute_generators(E[static_cast<std::size_t>(l - 1)],
                                        std::vector<MPoly>(P.begin(), P.begin() + n)) == e(l));
    }
}

TEST_CASE("power sums in elementary functions agree with the variables")
{
    for (int k = 1; k <= 5; ++k) {
        std::vector<MPoly> E;
        for (int l = 1; l <= k; ++l)
            E.push_back(elementary_poly(l, k));
        for (int g = 1; g <= 9; ++g)
            CHECK(substitute_generators(power_sum_in_elementary(g, k), E) == power_sum_poly(g, k));
    }
}

TEST_CASE("integer roots oracle for power sums")
{
    std::vector<long> roots = {2, -3, 5, 7};
    std::vector<Rat> epts;
    for (int l = 1; l <= 4; ++l) {
        // e_l of the roots by brute force over subsets
        long s = 0;
        for (unsigned mask = 0; mask < 16; ++mask) {
            if (__builtin_popcount(mask) != l)
                continue;
            long prod = 1;
            for (int i = 0; i < 4; ++i)
                if (mask >> i & 1)
                    prod *= roots[static_cast<std::size_t>(i)];
            s += prod;
        }
        epts.push_back(Rat(s));
    }
    for (int g = 1; g <= 10; ++g) {
        Rat direct(0);
        for (long r : roots)
            direct += Rat(r).pow(g);
        CHECK(power_sum_in_elementary(g, 4).eval(epts) == direct);
    }
}

TEST_CASE("to_elementary inverts elementary_poly")
{
    MPoly f = power_sum_poly(4, 3) + elementary_poly(1, 3) * elementary_poly(2, 3);
    MPoly g = to_elementary(f, 3);
    std::vector<MPoly> E = {elementary_poly(1, 3), elementary_poly(2, 3), elementary_poly(3, 3)};
    CHECK(substitute_generators(g, E) == f);
    CHECK_THROWS_AS(to_elementary(MPoly::var(0), 2), std::domain_error);
}

TEST_CASE("power sums on the trinomial curve match Newton-Girard")
{
    const std::pair<int, int> pairs[] = {{2, 3}, {1, 4}, {1, 2}, {3, 4}};
    for (auto [p, q] : pairs)
        for (int g = 1; g <= 20; ++g) {
            MPoly c = power_sum_on_curve(g, p, q);
            CHECK(c == girard_on_curve(g, p, q));
            for (const auto& [m, coef] : c.terms())
                CHECK(mono_exp(m, 0) * q + mono_exp(m, 1) * (p + q) == g);
        }
}

TEST_CASE("power sums on the curve: spot values")
{
    CHECK(power_sum_on_curve(3, 2, 3) == MPoly::var(0) * Rat(3));
    CHECK(power_sum_on_curve(15, 2, 3) == MPoly::var(0).pow(5) * Rat(3) + MPoly::var(1).pow(3) * Rat(5));
    CHECK(power_sum_on_curve(1, 2, 3).is_zero());
    CHECK(power_sum_on_curve(7, 2, 3).is_zero());
}

TEST_CASE("complementary elementary functions: simple cases")
{
    ParamRat dummy(0);
    CHECK(hat_sigma(0, 2, 2, 3, 1, dummy) == ParamRat(1));
    CHECK(hat_sigma(1, 1, 1, 2, 1, dummy) == -ParamRat::var(0));
    CHECK_THROWS(hat_sigma(4, 2, 2, 3, 1, dummy));
}

TEST_CASE("complementary elementary functions: branch overlap for pairs")
{
    for (int n = 3; n <= 8; ++n)
        for (int p = 1; p < n; ++p) {
            int q = n - p;
            if (!coprime(p, q))
                continue;
            ParamRat sn = k2_elimination(p, q).sigma_n;
            auto [lo1, hi1] = hat_sigma_range(2, p, q, 1);
            auto [lo2, hi2] = hat_sigma_range(2, p, q, 2);
            int overlaps = 0;
            for (int m = std::max(lo1, lo2); m <= std::min(hi1, hi2); ++m) {
                ++overlaps;
                CHECK(hat_sigma(m, 2, p, q, 1, sn) == hat_sigma(m, 2, p, q, 2, sn));
            }
            CHECK(overlaps == 1);
        }
}

TEST_CASE("complementary elementary functions rebuild the trinomial for pairs")
{
    for (int n = 3; n <= 8; ++n)
        for (int p = 1; p < n; ++p) {
            int q = n - p;
            if (!coprime(p, q))
                continue;
            PairElimination el = k2_elimination(p, q);
            std::vector<ParamRat> hs;
            for (int m = 0; m <= n - 2; ++m)
                hs.push_back(hat_sigma(m, 2, p, q, m <= std::min(q - 1, n - 2) ? 1 : 2, el.sigma_n));
            ParamRat x1 = ParamRat::var(0), x2 = ParamRat::var(1);
            std::vector<ParamRat> ek = {ParamRat(1), x1 + x2, x1 * x2};
            for (int l = 1; l <= n; ++l) {
                ParamRat s;
                for (int i = 0; i <= 2; ++i)
                    if (l - i >= 0 && l - i <= n - 2)
                        s += ek[static_cast<std::size_t>(i)] * hs[static_cast<std::size_t>(l - i)];
                if (l == n)
                    CHECK(s == el.sigma_n);
                else if (l == q)
                    CHECK(s == el.sigma_q);
                else
                    CHECK(s.is_zero());
            }
        }
}

TEST_CASE("complementary elementary functions: overlaps for triples lie on the curve")
{
    const std::pair<int, int> pairs[] = {{1, 3}, {3, 1}, {2, 3}, {3, 2}, {1, 4}, {4, 1}};
    for (auto [p, q] : pairs) {
        int n = p + q;
        MPoly F = defining_poly_k3(p, q);
        ParamRat sn = sigma_n_k3(p, q, q < 2);
        auto [lo1, hi1] = hat_sigma_range(3, p, q, 1);
        auto [lo2, hi2] = hat_sigma_range(3, p, q, 2);
        for (int m = std::max(lo1, lo2); m <= std::min(hi1, hi2); ++m) {
            ParamRat d = hat_sigma(m, 3, p, q, 1, sn) - hat_sigma(m, 3, p, q, 2, sn);
            MPoly quo;
            INFO("p=" << p << " q=" << q << " m=" << m << " n=" << n);
            CHECK(try_div(d.num(), F, quo));
        }
    }
}

TEST_CASE("pair elimination reproduces the covering maps")
{
    for (int n = 2; n <= 7; ++n)
        for (int p = 1; p < n; ++p) {
            int q = n - p;
            if (!coprime(p, q))
                continue;
            PairElimination el = k2_elimination(p, q);
            CHECK(el.s_t == el.s_t_alt);
            CHECK(el.s_t == phi2(p, q));
            CHECK(el.zeta_t == pi2(p, q));
            CHECK(el.zeta_t == phi1(p, q).compose(el.s_t));
        }
    PairElimination one = k2_elimination(1, 1);
    CHECK(one.zeta_t == phi1(1, 1).compose(one.s_t));
    CHECK(phi1(1, 1) == belyi_catalog("zeta_11"));
}

TEST_CASE("coset polynomial for q = 2 and q = 3")
{
    UPoly<ParamRat> g2 = coset_poly(2, 1);
    CHECK(g2.degree() == 1);
    ParamRat x1 = ParamRat::var(0), x2 = ParamRat::var(1);
    CHECK(g2.coeff(0) == -(x1 - x2).pow(2));

    UPoly<ParamRat> g3 = coset_poly(3, 1);
    REQUIRE(g3.degree() == 2);
    auto s = [](int l) { return ParamRat(elementary_poly(l, 3)); };
    CHECK(g3.coeff(2) == ParamRat(1));
    CHECK(g3.coeff(1) == ParamRat(-2) * s(1).pow(3) + ParamRat(9) * s(1) * s(2) - ParamRat(27) * s(3));
    CHECK(g3.coeff(0) == (s(1).pow(2) - ParamRat(3) * s(2)).pow(3));
}

TEST_CASE("coset polynomial coefficients are invariant under all permutations")
{
    for (int q = 2; q <= 4; ++q)
        for (int m : {1, 2, -1}) {
            if (q == 4 && m != 1)
                continue;
            UPoly<ParamRat> g = coset_poly(q, m);
            CHECK(g.degree() == static_cast<int>(factorial(q - 1).to_long()));
            std::vector<int> perm(static_cast<std::size_t>(q));
            std::iota(perm.begin(), perm.end(), 0);
            while (std::next_permutation(perm.begin(), perm.end())) {
                std::map<int, ParamRat> at;
                for (int i = 0; i < q; ++i)
                    at[i] = ParamRat::var(perm[static_cast<std::size_t>(i)]);
                for (const auto& c : g.coeffs())
                    CHECK(c.subst(at) == c);
            }
        }
}

TEST_CASE("coset quadratic restricted to the (2,3) root pair curve")
{
    // complementary functions of x3, x4, x5 in terms of the pair x4, x5 (slots 0, 1)
    ParamRat sn = k2_elimination(2, 3).sigma_n;
    std::vector<ParamRat> hs;
    for (int m = 1; m <= 3; ++m)
        hs.push_back(hat_sigma(m, 2, 2, 3, m <= 2 ? 1 : 2, sn));
    UPoly<ParamRat> g = coset_poly(3, 1);
    ParamRat b1 = ParamRat::var(0) + ParamRat::var(1), b2 = ParamRat::var(0) * ParamRat::var(1);
    ParamRat c1 = eval_gens(to_elementary(g.coeff(1).num(), 3), hs);
    ParamRat c0 = eval_gens(to_elementary(g.coeff(0).num(), 3), hs);
    CHECK(c1 == (ParamRat(-7) * b1.pow(4) + ParamRat(36) * b1.pow(2) * b2 - ParamRat(27) * b2.pow(2)) / b1);
    CHECK(c0 == (ParamRat(-2) * b1.pow(2) + ParamRat(3) * b2).pow(3));
}

TEST_CASE("coset polynomial limits")
{
    CHECK_THROWS(coset_poly(5, 1));
    CHECK_THROWS(coset_poly(3, 0));
}
