// One pass/fail line per acceptance criterion. With an argument k only
// criterion k runs; the exit code is 0 iff every criterion run passed.

#include "support.hpp"
#include "thyp/errors.hpp"
#include "thyp/geometry.hpp"
#include "thyp/gould.hpp"
#include "thyp/registry.hpp"
#include "thyp/symmetric.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace thyp;
using namespace thyp::testing;

namespace {

// Pinned limits.
constexpr double kSampleSeconds = 60.0;
constexpr int kMutationMaxOrder = 3;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass)
                detail << "failed: ";
            else
                detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

VerifyJob job(const std::string& id, int order, IdentityParams ip = {})
{
    VerifyJob j;
    j.id = id;
    j.order = order;
    j.params = ip;
    return j;
}

IdentityParams shape(int p, int q, int l, int kappa)
{
    IdentityParams ip;
    ip.p = p;
    ip.q = q;
    ip.l = l;
    ip.kappa = kappa;
    return ip;
}

// Runs the jobs and requires every one to pass.
void require_all(Outcome& out, const std::vector<VerifyJob>& jobs)
{
    std::vector<VerifyReport> reports;
    try {
        reports = verify_batch(jobs);
    } catch (const std::exception& e) {
        out.require(false, std::string("error: ") + e.what());
        return;
    }
    int passed = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (reports[i].pass)
            ++passed;
        else
            out.require(false, reports[i].id + " mismatch at order " + std::to_string(reports[i].mismatch_order));
    }
    out.detail << passed << "/" << jobs.size() << " verifications pass";
}

ParamRat dy(const ParamRat& f)
{
    MPoly n = f.num(), d = f.den();
    return ParamRat(n.derivative(kY) * d - n * d.derivative(kY), d * d);
}

// Rising factorial (n-k+1)_k computed directly.
long rising(int n, int k)
{
    long r = 1;
    for (int i = 0; i < k; ++i)
        r *= n - k + 1 + i;
    return r;
}

long multiplicity_excess(const std::map<long, long>& fibre)
{
    long s = 0;
    for (const auto& [e, count] : fibre)
        s += (e - 1) * count;
    return s;
}

template <class F>
void for_coprime(int max_n, F f)
{
    for (int n = 2; n <= max_n; ++n)
        for (int p = 1; p < n; ++p)
            if (std::gcd(p, n - p) == 1)
                f(p, n - p);
}

Outcome sample_identity()
{
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport a = verify(job("t-pair-sample", 12, shape(1, 2, 0, 0)));
    VerifyReport b = verify(job("t-pair-a", 12, shape(1, 2, 0, 0)));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(a.pass && a.mode == VerifyMode::Parametric && a.ring == "Q(a)", "t-pair-sample at N=12 in Q(a)");
    out.require(b.pass, "t-pair-a at p=1, N=12");
    out.require(secs < kSampleSeconds, "runtime above the pinned limit");
    out.detail << "p=1, N=12, ring " << a.ring << ", " << secs << " s (limit " << kSampleSeconds << " s)";
    return out;
}

Outcome kernel_ladder()
{
    Outcome out;
    std::vector<VerifyJob> jobs;
    for (int l = -2; l <= 3; ++l)
        jobs.push_back(job("kernel-ladder", 10, shape(1, 2, l, 0)));
    require_all(out, jobs);
    const ParamRat A = ParamRat::var(kA), B = ParamRat::var(kB), y = ParamRat::var(kY), one(1);
    ParamRat d = (one - B) * y + B;
    ParamRat f_minus1 = (A * B - (A - one) * (B - one) * y) / ((A + B - one) * y);
    ParamRat f1 = y / d;
    ParamRat f2 = y * y * ((B - one) * (B - A - one) * y - B * (B - A - ParamRat(2))) / ((A + one) * d.pow(3));
    ParamRat f2_inner = (ParamRat(2) * (B - one) * (B - A - one) * y - B * (ParamRat(2) * B - ParamRat(2) * A - ParamRat(3))) /
                        (ParamRat(2) * (A + one) * (B - one) * d.pow(2));
    out.require(F_ell_symbolic(-1) == f_minus1, "F_-1 display");
    out.require(F_ell_symbolic(0) == one, "F_0 display");
    out.require(F_ell_symbolic(1) == f1, "F_1 display");
    out.require(F_ell_symbolic(2) == f2, "F_2 display");
    out.require(y * y * dy(f2_inner) == f2, "F_2 as y^2 D_y of its displayed primitive");
    out.detail << "; F_-1, F_0, F_1, F_2 equal the displayed rational functions";
    return out;
}

Outcome interpolation()
{
    Outcome out;
    const int N = 8;
    require_all(out, {job("kernel-interp-0", N), job("kernel-interp-1", N)});
    for (int l = 0; l <= 1; ++l) {
        std::string id = "kernel-interp-" + std::to_string(l);
        IdentityParams zero;
        zero.values[kC] = ParamRat(0);
        Sides z = build_sides(id, zero, N);
        Sides lad = build_sides("kernel-ladder", shape(1, 2, l, 0), N);
        out.require(same_lhs(z, lad) && same_rhs(z, lad), id + " at C=0 vs ladder l=" + std::to_string(l));
        Sides s = build_sides(id, {}, N);
        Sides up = build_sides("kernel-ladder", shape(1, 2, l + 1, 0), N);
        auto lhs = scalar_values(s.lhs, s.lhs_den), rhs = scalar_values(s.rhs, s.rhs_den);
        auto ulhs = scalar_values(up.lhs, up.lhs_den), urhs = scalar_values(up.rhs, up.rhs_den);
        bool lead = true;
        for (std::size_t k = 0; k <= static_cast<std::size_t>(N); ++k)
            lead = lead && lhs[k].limit_infinity(kC) == ulhs[k] && rhs[k].limit_infinity(kC) == urhs[k];
        out.require(lead, id + " as C -> oo vs ladder l=" + std::to_string(l + 1));
    }
    out.detail << "; C=0 gives l=0,1 and C -> oo gives l=1,2 coefficientwise through N=" << N;
    return out;
}

Outcome root_averages()
{
    Outcome out;
    std::vector<VerifyJob> jobs;
    const std::pair<int, int> pairs[] = {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}};
    for (auto [p, q] : pairs)
        for (int l = 0; l <= 1; ++l) {
            for (int kappa = 0; kappa < q; ++kappa)
                jobs.push_back(job("roots-inverse-i", 8, shape(p, q, l, kappa)));
            for (int kappa = 0; kappa < p + q; ++kappa)
                jobs.push_back(job("roots-inverse-ii", 6, shape(p, q, l, kappa)));
        }
    require_all(out, jobs);
    out.detail << " (part i at N=8, part ii at N=6, all kappa, l=0,1)";
    return out;
}

Outcome families()
{
    Outcome out;
    struct F {
        const char* stem;
        int p;
        int kappas;
    };
    std::vector<VerifyJob> jobs;
    for (F f : {F{"s-line", 1, 1}, F{"s-line", 2, 1}, F{"s-pair", 1, 2}, F{"t-pair", 1, 2}, F{"t-pair", 3, 2},
                F{"t-triple", 1, 3}, F{"u-conic", 1, 3}})
        for (int kappa = 0; kappa < f.kappas; ++kappa) {
            for (int l = -1; l <= 1; ++l)
                jobs.push_back(job(std::string(f.stem) + "-a", 8, shape(f.p, 2, l, kappa)));
            for (int l = 0; l <= 1; ++l)
                jobs.push_back(job(std::string(f.stem) + "-b", 8, shape(f.p, 2, l, kappa)));
        }
    require_all(out, jobs);
    out.detail << " (a and b variants, every kappa, N=8, parametric)";
    return out;
}

Outcome genus_table()
{
    Outcome out;
    int rows = 0;
    for_coprime(9, [&](int p, int q) {
        int n = p + q;
        for (int k = 1; k <= n; ++k) {
            ++rows;
            RamProfile r = ram_profile(p, q, k);
            long D = rising(n, k);
            long twice = 2 - 2 * D + multiplicity_excess(r.over0) + multiplicity_excess(r.over1) +
                         multiplicity_excess(r.overinf);
            GenusReport g = genus(p, q, k);
            out.require(twice % 2 == 0 && g.genus == twice / 2,
                        "Hurwitz count at (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(k) + ")");
        }
    });
    out.require(genus(2, 3, 3).genus == 3, "genus(2,3,3) = 3");
    out.require(genus(1, 4, 3).genus == 1, "genus(1,4,3) = 1");
    out.require(genus(1, 4, 5).genus == 4, "genus(1,4,5) = 4");
    for_coprime(9, [&](int p, int q) { out.require(genus(p, q, 2).genus == 0, "genus(p,q,2) = 0"); });
    using T = std::array<int, 3>;
    std::vector<T> g0 = {{1, 2, 3}, {1, 3, 3}, {1, 3, 4}, {2, 1, 3}, {3, 1, 3}, {3, 1, 4}};
    std::vector<T> g1 = {{1, 4, 3}, {4, 1, 3}};
    Classification c = classify_low_genus(8);
    std::sort(c.genus0.begin(), c.genus0.end());
    std::sort(c.genus1.begin(), c.genus1.end());
    out.require(c.genus0 == g0, "genus-0 list");
    out.require(c.genus1 == g1, "genus-1 list");
    out.detail << rows << " (p,q,k) rows match Riemann-Hurwitz, spot values and the low-genus lists hold";
    return out;
}

Outcome fibre_identity()
{
    Outcome out;
    int rows = 0;
    for_coprime(9, [&](int p, int q) {
        int n = p + q;
        for (int k = 1; k <= n; ++k) {
            auto [lo, hi] = nu_range(p, q, k);
            long s = 0;
            for (int nu = lo; nu <= hi; ++nu) {
                BranchDatum d = branch_counts(p, q, k, nu);
                s += d.NP * d.NT * d.M;
            }
            ++rows;
            out.require(s == rising(n, k), "fibre sum at (" + std::to_string(p) + "," + std::to_string(q) + "," +
                                               std::to_string(k) + ")");
        }
    });
    BranchDatum d = branch_counts(2, 3, 5, 3);
    out.require(d.NP == 20 && d.NT == 1 && d.M == 6, "row (2,3,5,nu=3) = 20,1,6");
    out.detail << rows << " (p,q,k) fibre sums equal (n-k+1)_k";
    return out;
}

Outcome belyi()
{
    Outcome out;
    int maps = 0;
    for (const auto& c : belyi_ids()) {
        // phi2 maps to the s line, not the zeta line
        if (c.id == "phi2")
            continue;
        std::vector<std::pair<int, int>> args = {{1, 2}};
        if (c.uses_p && c.uses_q)
            args = {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 4}, {3, 4}, {2, 5}};
        else if (c.uses_p)
            args = {{1, 2}, {2, 2}, {3, 2}, {5, 2}};
        for (auto [p, q] : args) {
            if (c.id == "zeta_p2" && p % 2 == 0)
                continue;
            ++maps;
            QRatFunc f = belyi_catalog(c.id, p, q);
            BelyiReport r = verify_belyi(f);
            std::string tag = c.id + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            out.require(r.ok() && r.genus == 0, tag + " ramified only over {0,1,oo}");
            out.require(f.degree() == belyi_stated_degree(c.id, p, q), tag + " degree");
        }
    }
    const std::pair<std::string, int> fixed[] = {{"zeta_11", 2}, {"zeta_12", 6}, {"zeta_13", 24}, {"zeta_23", 10},
                                                 {"zeta_14", 15}};
    for (const auto& [id, deg] : fixed)
        out.require(belyi_catalog(id).degree() == deg, id + " has degree " + std::to_string(deg));
    for (int n = 2; n <= 7; ++n)
        out.require(belyi_catalog("phi1", 1, n - 1).degree() == n && belyi_catalog("pi2", 1, n - 1).degree() == n * (n - 1),
                    "degrees n and n(n-1)");
    int profiles = 0;
    for_coprime(7, [&](int p, int q) {
        ++profiles;
        out.require(verify_belyi(pi2(p, q), ram_profile(p, q, 2)).ok(), "pi2 profile at k=2");
    });
    int comps = 0;
    for (const Check& c : composition_checks(7)) {
        ++comps;
        out.require(c.pass, c.name);
    }
    for (const Check& c : membership_checks()) {
        ++comps;
        out.require(c.pass, c.name);
    }
    out.detail << maps << " maps to the zeta line are Belyi of the stated degree, " << profiles
               << " pi2 profiles match k=2, " << comps << " compositions and curve memberships hold";
    return out;
}

Outcome capstones()
{
    Outcome out;
    std::vector<VerifyJob> jobs;
    for (int p = 1; p <= 5; ++p) {
        jobs.push_back(job("degenerate-s-line", 16, shape(p, 1, 0, 0)));
        jobs.push_back(job("degenerate-s-line-limit", 16, shape(p, 1, 0, 0)));
    }
    for (const char* id : {"integral-red-5f4", "integral-red-4f3", "integral-red-5f4-a5", "v-line-4f3", "v-line-5f4"})
        jobs.push_back(job(id, 24));
    for (int a = -1; a >= -8; --a) {
        IdentityParams ip;
        ip.ia = a;
        jobs.push_back(job("integral-pair", 24, ip));
    }
    for (const char* id : {"radical-v", "radical-v-quadratic", "radical-v-quadratic-derived"})
        jobs.push_back(job(id, 40));
    for (const char* id : {"radical-x", "radical-x-quadratic"})
        jobs.push_back(job(id, 30));
    require_all(out, jobs);
    out.require(v_quadratic_from_cosets() == v_quadratic_stated(), "coset-derived quadratic equals the stated one");
    Rat j1 = elliptic_j(QPoly({Rat(1), Rat(-5, 4), Rat(-5, 2), Rat(-5, 4)}));
    Rat j2 = elliptic_j(QPoly({Rat(1), Rat(3)}) * QPoly({Rat(1), Rat(115, 27), Rat(25, 27), Rat(25, 27)}));
    out.require(j1 == Rat(-25, 2), "j = -25/2");
    out.require(j2 == Rat(-4096 * 25, 3), "j = -2^12 5^2/3");
    out.detail << "; j-invariants " << j1.str() << " and " << j2.str();
    return out;
}

Outcome symmetric_functions()
{
    Outcome out;
    const std::pair<int, int> pairs[] = {{2, 3}, {1, 4}, {1, 2}, {3, 4}};
    int checked = 0;
    for (auto [p, q] : pairs) {
        int n = p + q;
        std::vector<MPoly> gens(static_cast<std::size_t>(n));
        gens[static_cast<std::size_t>(q - 1)] = MPoly::var(0);
        gens[static_cast<std::size_t>(n - 1)] = MPoly::var(1);
        for (int g = 1; g <= 20; ++g) {
            ++checked;
            out.require(power_sum_on_curve(g, p, q) == substitute_generators(power_sum_in_elementary(g, n), gens),
                        "power sum " + std::to_string(g) + " on (" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    }
    UPoly<ParamRat> g3 = coset_poly(3, 1);
    auto s = [](int l) { return ParamRat(elementary_poly(l, 3)); };
    out.require(g3.degree() == 2 && g3.coeff(2) == ParamRat(1), "coset polynomial is a monic quadratic");
    out.require(g3.coeff(1) == ParamRat(-2) * s(1).pow(3) + ParamRat(9) * s(1) * s(2) - ParamRat(27) * s(3),
                "linear coefficient of the coset quadratic");
    out.require(g3.coeff(0) == (s(1).pow(2) - ParamRat(3) * s(2)).pow(3), "constant coefficient of the coset quadratic");
    ParamRat sn = k2_elimination(2, 3).sigma_n;
    std::vector<ParamRat> hs;
    for (int m = 1; m <= 3; ++m)
        hs.push_back(hat_sigma(m, 2, 2, 3, m <= 2 ? 1 : 2, sn));
    auto eval = [&](const MPoly& f) {
        ParamRat acc;
        for (const auto& [mono, c] : f.terms()) {
            ParamRat t(c);
            for (int v = 0; v < 3; ++v)
                if (int d = mono_exp(mono, v))
                    t *= hs[static_cast<std::size_t>(v)].pow(d);
            acc += t;
        }
        return acc;
    };
    ParamRat b1 = ParamRat::var(0) + ParamRat::var(1), b2 = ParamRat::var(0) * ParamRat::var(1);
    ParamRat c1 = eval(to_elementary(g3.coeff(1).num(), 3)), c0 = eval(to_elementary(g3.coeff(0).num(), 3));
    out.require(c1 == (ParamRat(-7) * b1.pow(4) + ParamRat(36) * b1.pow(2) * b2 - ParamRat(27) * b2.pow(2)) / b1,
                "restricted linear coefficient");
    out.require(c0 == (ParamRat(-2) * b1.pow(2) + ParamRat(3) * b2).pow(3), "restricted constant coefficient");
    out.detail << checked << " power sums agree with Newton-Girard; the coset quadratic and its restriction match";
    return out;
}

Outcome mutations()
{
    Outcome out;
    struct M {
        const char* id;
        IdentityParams ip;
        Mutation m;
    };
    std::vector<M> cases = {{"kernel-ladder", shape(1, 2, 1, 0), Mutation::KernelSign},
                            {"t-pair-sample", shape(1, 2, 0, 0), Mutation::MapCoeff},
                            {"t-pair-sample", shape(1, 2, 0, 0), Mutation::PochOffset},
                            {"t-pair-a", shape(1, 2, 0, 0), Mutation::KernelSign},
                            {"s-line-b", shape(1, 1, 0, 0), Mutation::KernelSign},
                            {"radical-v", {}, Mutation::MapCoeff},
                            {"integral-pair", {}, Mutation::PochOffset}};
    for (auto& c : cases) {
        c.ip.mutation = c.m;
        if (std::string(c.id) == "integral-pair")
            c.ip.ia = -1;
        VerifyReport r = verify(job(c.id, 12, c.ip));
        std::string tag = std::string(c.id) + "/" + mutation_name(c.m);
        out.require(!r.pass && r.mismatch_order >= 0 && r.mismatch_order <= kMutationMaxOrder,
                    tag + " first mismatch " + std::to_string(r.mismatch_order));
        out.detail << tag << "@" << r.mismatch_order << " ";
    }
    out.detail << "(limit " << kMutationMaxOrder << ")";
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"sample identity", sample_identity},
        {"kernel ladder", kernel_ladder},
        {"interpolated kernels", interpolation},
        {"root averages", root_averages},
        {"free-parameter families", families},
        {"genus table", genus_table},
        {"fibre identity", fibre_identity},
        {"Belyi maps", belyi},
        {"fixed-parameter identities", capstones},
        {"symmetric functions", symmetric_functions},
        {"mutation sensitivity", mutations},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::cerr << "criterion must be 1.." << criteria.size() << "\n";
        return 3;
    }
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<int>(i) + 1 != only)
            continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("error: ") + e.what());
        }
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
                  << o.detail.str() << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
