#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thyp/errors.hpp"
#include "thyp/geometry.hpp"
#include "thyp/symmetric.hpp"

#include <numeric>

using namespace thyp;

namespace {

template <class F>
void for_coprime(int max_n, F f)
{
    for (int n = 2; n <= max_n; ++n)
        for (int p = 1; p < n; ++p)
            if (std::gcd(p, n - p) == 1)
                f(p, n - p);
}

QPoly P(std::vector<Rat> c) { return QPoly(std::move(c)); }

}  // namespace

TEST_CASE("branching data rows")
{
    BranchDatum d = branch_counts(2, 3, 5, 3);
    CHECK(d.NP == 20);
    CHECK(d.NT == 1);
    CHECK(d.M == 6);
    BranchDatum e = branch_counts(1, 1, 2, 1);
    CHECK(e.NP == 2);
    CHECK(e.NT == 1);
    CHECK(e.M == 1);
    CHECK_THROWS_AS(branch_counts(2, 3, 5, 1), ConstraintError);
    CHECK_THROWS_AS(branch_counts(2, 4, 3, 1), ConstraintError);
}

TEST_CASE("branching data sums to the cover degree")
{
    for_coprime(9, [](int p, int q) {
        for (int k = 2; k <= p + q; ++k) {
            auto [lo, hi] = nu_range(p, q, k);
            long s = 0;
            for (int nu = lo; nu <= hi; ++nu) {
                BranchDatum d = branch_counts(p, q, k, nu);
                CHECK((d.M == p || d.M == q || d.M == static_cast<long>(p) * q));
                s += d.NP * d.NT * d.M;
            }
            CHECK(s == cover_degree(p, q, k));
        }
    });
}

TEST_CASE("ramification profiles")
{
    RamProfile r = ram_profile(1, 1, 2);
    CHECK(r.over0 == std::map<long, long>{{1, 2}});
    CHECK(r.over1 == std::map<long, long>{{2, 1}});
    CHECK(r.overinf == std::map<long, long>{{2, 1}});
    for_coprime(8, [](int p, int q) {
        int n = p + q;
        CHECK(ram_profile(p, q, n).over1.count(1) == 0);
        for (int k = 1; k <= n; ++k) {
            RamProfile f = ram_profile(p, q, k);
            long D = cover_degree(p, q, k);
            CHECK(fibre_total(f.over0) == D);
            CHECK(fibre_total(f.over1) == D);
            CHECK(fibre_total(f.overinf) == D);
        }
    });
}

TEST_CASE("genus formula agrees with the Hurwitz count")
{
    for_coprime(9, [](int p, int q) {
        for (int k = 1; k <= p + q; ++k) {
            GenusReport g = genus(p, q, k);
            CHECK(g.genus == g.hurwitz_genus);
            CHECK(g.genus >= 0);
            CHECK(genus_formula(p, q, k) == genus_formula(q, p, k));
        }
    });
}

TEST_CASE("genus spot values")
{
    CHECK(genus(2, 3, 3).genus == 3);
    CHECK(genus(1, 4, 3).genus == 1);
    CHECK(genus(1, 4, 5).genus == 4);
    for (int p = 1; p <= 8; ++p)
        for (int q = 1; q <= 8; ++q)
            if (std::gcd(p, q) == 1) {
                CHECK(genus(p, q, 2).genus == 0);
                CHECK(genus(p, q, 1).genus == 0);
                Rat closed(p * p + 4 * p * q + q * q - 9 * (p + q) + 14, 2);
                if (p + q >= 3)
                    CHECK(genus_formula(p, q, 3) == closed);
            }
    CHECK_THROWS_AS(genus(2, 4, 3), ConstraintError);
}

TEST_CASE("genus grows with k")
{
    for_coprime(8, [](int p, int q) {
        int n = p + q;
        for (int k = 3; k < n - 1; ++k)
            CHECK(genus(p, q, k + 1).genus > genus(p, q, k).genus);
        if (n >= 2)
            CHECK(genus(p, q, n).genus == genus(p, q, n - 1).genus);
    });
}

TEST_CASE("low genus classification")
{
    using T = std::array<int, 3>;
    std::vector<T> g0 = {{1, 2, 3}, {2, 1, 3}, {1, 3, 3}, {3, 1, 3}, {1, 3, 4}, {3, 1, 4}};
    std::vector<T> g1 = {{1, 4, 3}, {4, 1, 3}};
    std::sort(g0.begin(), g0.end());
    std::sort(g1.begin(), g1.end());
    for (int bound : {8, 10, 12}) {
        Classification c = classify_low_genus(bound);
        std::sort(c.genus0.begin(), c.genus0.end());
        std::sort(c.genus1.begin(), c.genus1.end());
        CHECK(c.genus0 == g0);
        CHECK(c.genus1 == g1);
    }
}

TEST_CASE("T polynomial")
{
    CHECK(T_poly(1, 1) == QPoly(Rat(1)));
    CHECK(T_poly(2, 3) == P({3, 6, 4, 2}));
    for_coprime(9, [](int p, int q) {
        QPoly T = T_poly(p, q);
        CHECK(T.degree() == p + q - 2);
        CHECK(poly_gcd(T, T.derivative()).degree() == 0);
    });
}

TEST_CASE("catalog degrees")
{
    for (const auto& c : belyi_ids()) {
        std::vector<std::pair<int, int>> args = {{1, 2}};
        if (c.uses_p && c.uses_q)
            args = {{1, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}};
        else if (c.uses_p)
            args = {{1, 2}, {3, 2}, {5, 2}};
        for (auto [p, q] : args) {
            QRatFunc f = belyi_catalog(c.id, p, q);
            CHECK(f.degree() == belyi_stated_degree(c.id, p, q));
        }
    }
    CHECK_THROWS(belyi_catalog("nope"));
    CHECK_THROWS_AS(belyi_catalog("zeta_p2", 2), ConstraintError);
}

TEST_CASE("every catalog map to the zeta line is a Belyi map of genus 0")
{
    for (const auto& c : belyi_ids()) {
        if (c.id == "phi2")
            continue;
        std::vector<std::pair<int, int>> args = {{1, 2}};
        if (c.uses_p && c.uses_q)
            args = {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 4}, {3, 4}};
        else if (c.uses_p)
            args = {{1, 2}, {3, 2}, {5, 2}};
        for (auto [p, q] : args) {
            INFO(c.id << " p=" << p << " q=" << q);
            BelyiReport r = verify_belyi(belyi_catalog(c.id, p, q));
            CHECK(r.ok());
            CHECK(r.genus == 0);
        }
    }
}

TEST_CASE("pi2 profile agrees with the pair curve profile")
{
    for_coprime(7, [](int p, int q) {
        INFO("p=" << p << " q=" << q);
        BelyiReport r = verify_belyi(pi2(p, q), ram_profile(p, q, 2));
        CHECK(r.ok());
    });
    for_coprime(7, [](int p, int q) {
        BelyiReport r = verify_belyi(phi1(p, q), ram_profile(p, q, 1));
        CHECK(r.ok());
    });
}

TEST_CASE("explicit profiles")
{
    BelyiReport z11 = verify_belyi(belyi_catalog("zeta_11"));
    CHECK(z11.profile.over0 == std::map<long, long>{{1, 2}});
    CHECK(z11.profile.over1 == std::map<long, long>{{2, 1}});
    CHECK(z11.profile.overinf == std::map<long, long>{{2, 1}});
    BelyiReport z23 = verify_belyi(belyi_catalog("zeta_23"));
    CHECK(z23.profile.over0 == std::map<long, long>{{1, 1}, {3, 1}, {6, 1}});
    CHECK(z23.profile.over1 == std::map<long, long>{{1, 4}, {2, 3}});
    CHECK(z23.profile.overinf == std::map<long, long>{{5, 2}});
    BelyiReport bad = verify_belyi(QRatFunc(P({0, -3, 0, 1})));
    CHECK_FALSE(bad.ok());
    // t -> s has critical values off {0, 1, oo}
    CHECK_FALSE(verify_belyi(phi2(1, 2)).critical_values_ok);
}

TEST_CASE("compositions and alternative forms")
{
    for (const Check& c : composition_checks(7)) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("parametrizations lie on their curves")
{
    for (const Check& c : membership_checks()) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("defining polynomials of the triple curves")
{
    MPoly x1 = MPoly::var(0), x2 = MPoly::var(1), x3 = MPoly::var(2);
    CHECK(defining_poly_k3(1, 2).monic() == (x1 + x2 + x3).monic());
    MPoly conic = x1 * x1 + x2 * x2 + x3 * x3 + x1 * x2 + x2 * x3 + x3 * x1;
    CHECK(defining_poly_k3(1, 3).monic() == conic.monic());
    CHECK_THROWS_AS(defining_poly_k3(1, 1), ConstraintError);
    for_coprime(8, [&](int p, int q) {
        if (std::max(p, q) < 2)
            return;
        MPoly F = defining_poly_k3(p, q);
        int n = p + q;
        for (const auto& [m, c] : F.terms())
            CHECK(mono_exp(m, 0) + mono_exp(m, 1) + mono_exp(m, 2) == n + p - 3);
        CHECK(F.degree(0) == n - 2);
        CHECK(F.degree(1) == n - 2);
        CHECK(F.degree(2) == n - 2);
    });
}

TEST_CASE("j-invariants")
{
    CHECK(elliptic_j(P({1, Rat(-5, 4), Rat(-5, 2), Rat(-5, 4)})) == Rat(-25, 2));
    QPoly f = P({1, 3}) * P({1, Rat(115, 27), Rat(25, 27), Rat(25, 27)});
    CHECK(elliptic_j(f) == Rat(-4096 * 25, 3));
    CHECK(elliptic_j(P({1, 0, 0, 1})) == Rat(0));
    CHECK(elliptic_j(P({0, -1, 0, 1})) == Rat(1728));
    CHECK_THROWS_AS(elliptic_j(P({0, 0, 1, 1})), ConstraintError);
}
