#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "thyp/registry.hpp"

#include <set>

using namespace thyp;
using namespace thyp::testing;

namespace {

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

// Smaller orders for identities with several symbolic parameters.
int light_order(const IdentityCase& c) { return c.free_slots.size() >= 2 ? 4 : 8; }

}  // namespace

TEST_CASE("registry contents")
{
    const auto& reg = list_identities();
    CHECK(reg.size() >= 28);
    std::set<std::string> ids;
    for (const auto& c : reg) {
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.ring.empty());
        CHECK_FALSE(c.description.empty());
        CHECK(c.default_order > 0);
    }
    CHECK(std::is_sorted(reg.begin(), reg.end(),
                         [](const IdentityCase& x, const IdentityCase& y) { return x.id < y.id; }));
    CHECK_THROWS_AS(find_identity("nosuch"), UsageError);
}

TEST_CASE("declared rings match the parameters the sides carry")
{
    for (const auto& c : list_identities()) {
        INFO(c.id);
        std::string ring = ring_of(c.build(c.defaults, 3));
        std::string vars = ring.substr(0, ring.find('['));
        CHECK(vars == c.ring.substr(0, c.ring.find('[')));
    }
}

TEST_CASE("sample plan")
{
    IdentityParams ip;
    CHECK(sample_plan("t-pair-a", ip, 10) == 45);
    CHECK(sample_degree_bound("t-pair-a", ip, 10) == 44);
    // c free doubles the bound
    CHECK(sample_degree_bound("t-pair-b", ip, 10) == 88);
    for (const auto& c : list_identities())
        for (int N = 1; N < 20; ++N)
            CHECK(sample_plan(c.id, c.defaults, N + 1) > sample_plan(c.id, c.defaults, N));
    ip.values[kc] = ParamRat(Rat(1, 3));
    CHECK(sample_degree_bound("t-pair-b", ip, 10) == 44);
}

TEST_CASE("every identity passes at a light order in both modes")
{
    for (const auto& c : list_identities()) {
        INFO(c.id);
        VerifyJob j = job(c.id, light_order(c), c.defaults);
        VerifyReport r = verify(j);
        CHECK(r.pass);
        CHECK(r.mismatch_order == -1);
        CHECK_FALSE(r.samples.has_value());
        j.mode = VerifyMode::Sampled;
        j.order = 3;
        VerifyReport s = verify(j);
        CHECK(s.pass);
        if (!c.free_slots.empty()) {
            REQUIRE(s.samples.has_value());
            CHECK(s.samples->count == sample_plan(c.id, c.defaults, 3));
            CHECK(s.samples->status ==
                  (c.free_slots.size() == 1 ? "deterministic under degree bound" : "probabilistic"));
        }
    }
}

TEST_CASE("sampled reports are reproducible under a seed")
{
    VerifyJob j = job("s-line-a", 6);
    j.mode = VerifyMode::Sampled;
    j.params.mutation = Mutation::MapCoeff;
    j.seed = 7;
    VerifyReport a = verify(j), b = verify(j);
    CHECK_FALSE(a.pass);
    CHECK(a.mismatch_value == b.mismatch_value);
    CHECK(a.mismatch_value.rfind("a=", 0) == 0);
}

TEST_CASE("the free-parameter pair family at its defaults is the sample identity")
{
    IdentityParams ip;
    Sides fam = build_sides("t-pair-a", ip, 10);
    Sides smp = build_sides("t-pair-sample", ip, 10);
    CHECK(same_lhs(fam, smp));
    CHECK(same_rhs(fam, smp));
}

TEST_CASE("screened parameters")
{
    IdentityParams half;
    half.values[ka] = ParamRat(Rat(1, 2));
    CHECK_THROWS_AS(verify(job("s-pair-a", 4, half)), ConstraintError);
    CHECK_THROWS_AS(verify(job("t-pair-a", 4, half)), ConstraintError);
    CHECK(verify(job("s-line-a", 4, half)).pass);
    CHECK(verify(job("u-conic-a", 4, half)).pass);
    IdentityParams two;
    two.values[ka] = ParamRat(2);
    CHECK_THROWS_AS(verify(job("s-line-a", 4, two)), ConstraintError);
    IdentityParams third;
    third.values[ka] = ParamRat(Rat(1, 3));
    CHECK_THROWS_AS(verify(job("u-conic-a", 4, third)), ConstraintError);
    CHECK_THROWS_AS(verify(job("t-triple-a", 4, third)), ConstraintError);
    // shapes outside the hypotheses
    CHECK_THROWS_AS(verify(job("t-pair-a", 4, shape(2, 2, 0, 0))), ConstraintError);
    CHECK_THROWS_AS(verify(job("roots-inverse-i", 4, shape(2, 4, 0, 0))), ConstraintError);
    CHECK_THROWS_AS(verify(job("roots-inverse-i", 4, shape(1, 2, 0, 2))), ConstraintError);
    CHECK_THROWS_AS(verify(job("kernel-ladder", 4, shape(1, 2, 4, 0))), ConstraintError);
    CHECK_THROWS_AS(verify(job("t-triple-b", 4, shape(1, 2, 2, 0))), ConstraintError);
    IdentityParams pos;
    pos.ia = 1;
    CHECK_THROWS_AS(verify(job("integral-pair", 4, pos)), ConstraintError);
}

TEST_CASE("unsupported mutations and orders are usage errors")
{
    IdentityParams ip;
    ip.mutation = Mutation::KernelSign;
    CHECK_THROWS_AS(verify(job("radical-v", 4, ip)), UsageError);
    CHECK_THROWS_AS(verify(job("roots-inverse-i", 4, ip)), UsageError);
    CHECK_THROWS_AS(verify(job("radical-v", -2)), UsageError);
    CHECK_THROWS_AS(verify(job("nosuch", 4)), UsageError);
    CHECK_THROWS_AS(parse_mode("exact"), UsageError);
    CHECK_THROWS_AS(parse_mutation("flip"), std::invalid_argument);
}

TEST_CASE("every supported mutation fails")
{
    for (const auto& c : list_identities())
        for (Mutation m : c.mutations) {
            INFO(c.id << " " << mutation_name(m));
            IdentityParams ip = c.defaults;
            ip.mutation = m;
            VerifyReport r = verify(job(c.id, c.free_slots.size() >= 2 ? 6 : c.default_order, ip));
            CHECK_FALSE(r.pass);
            CHECK(r.mismatch_order >= 0);
            CHECK_FALSE(r.mismatch_value.empty());
        }
    IdentityParams f1 = shape(1, 2, 1, 0);
    f1.mutation = Mutation::KernelSign;
    CHECK(verify(job("kernel-ladder", 6, f1)).mismatch_order == 1);
}

TEST_CASE("passes survive order escalation")
{
    for (const auto& c : list_identities()) {
        INFO(c.id);
        int N = light_order(c);
        CHECK(verify(job(c.id, N, c.defaults)).pass);
        CHECK(verify(job(c.id, N + 8, c.defaults)).pass);
    }
}

TEST_CASE("interpolated kernels reduce to the ladder")
{
    const int N = 6;
    for (int l = 0; l <= 1; ++l) {
        INFO("l=" << l);
        std::string id = "kernel-interp-" + std::to_string(l);
        IdentityParams zero;
        zero.values[kC] = ParamRat(0);
        Sides z = build_sides(id, zero, N);
        Sides lad = build_sides("kernel-ladder", shape(1, 2, l, 0), N);
        CHECK(same_lhs(z, lad));
        CHECK(same_rhs(z, lad));
        // leading behaviour as C -> infinity is the next rung
        Sides s = build_sides(id, {}, N);
        Sides up = build_sides("kernel-ladder", shape(1, 2, l + 1, 0), N);
        auto lhs = scalar_values(s.lhs, s.lhs_den), rhs = scalar_values(s.rhs, s.rhs_den);
        for (int k = 0; k <= N; ++k) {
            CHECK(lhs[k].limit_infinity(kC) == up.lhs[k].scalar_part());
            CHECK(rhs[k].limit_infinity(kC) == up.rhs[k].scalar_part());
        }
    }
}

TEST_CASE("interpolated root averages at c = 0 are the inverse expansions")
{
    const int N = 6;
    for (auto [p, q] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{1, 3}, std::pair{2, 3}})
        for (const char* part : {"i", "ii"})
            for (int l = 0; l <= 1; ++l) {
                int m = std::string(part) == "i" ? q : p + q;
                for (int kappa = 0; kappa < m; ++kappa) {
                    INFO(part << " p=" << p << " q=" << q << " l=" << l << " kappa=" << kappa);
                    IdentityParams ip = shape(p, q, l, kappa);
                    Sides inv = build_sides(std::string("roots-inverse-") + part, ip, N);
                    ip.values[kc] = ParamRat(0);
                    Sides itp = build_sides(std::string("roots-interp-") + part, ip, N);
                    CHECK(same_lhs(itp, inv));
                    CHECK(same_rhs(itp, inv));
                }
            }
}

TEST_CASE("kappa-aggregate of the inverse expansions gives the root expansions")
{
    const int N = 8;
    for (auto [p, q] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{1, 3}})
        for (int l = 0; l <= 1; ++l) {
            int n = p + q;
            for (int j = 1; j <= q; ++j) {
                INFO("p=" << p << " q=" << q << " l=" << l << " j=" << j);
                CSeries lhs(N), rhs(N);
                for (int kappa = 0; kappa < q; ++kappa) {
                    IdentityParams ip = shape(p, q, l, kappa);
                    Sides inv = build_sides("roots-inverse-i", ip, N);
                    TrinomialCase tc;
                    tc.p = p;
                    tc.q = q;
                    tc.l = l;
                    tc.kappa = kappa;
                    Cyclo w = Cyclo::root(q, static_cast<long>(n) * (j - 1) * kappa) * Cyclo(expansion_coeff(tc));
                    lhs += inv.rhs * CSeries::constant(N, w);
                    rhs += inv.lhs * CSeries::constant(N, w);
                }
                IdentityParams ip = shape(p, q, l, 0);
                ip.j = j;
                Sides exp = build_sides("roots-expansion-i", ip, N);
                CHECK(same_series(lhs, MPoly(Rat(1)), exp.lhs, exp.lhs_den));
                CHECK(same_series(rhs, MPoly(Rat(1)), exp.rhs, exp.rhs_den));
            }
        }
}

TEST_CASE("batch verification is deterministic and ordered by id")
{
    std::vector<VerifyJob> jobs;
    for (const char* id : {"v-line-4f3", "degenerate-s-line", "t-pair-a", "s-line-a", "radical-x"})
        jobs.push_back(job(id, 8));
    IdentityParams bad;
    bad.mutation = Mutation::MapCoeff;
    jobs.push_back(job("s-pair-a", 8, bad));
    auto par = verify_batch(jobs, true);
    auto ser = verify_batch(jobs, false);
    REQUIRE(par.size() == jobs.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].id == ser[i].id);
        CHECK(par[i].pass == ser[i].pass);
        CHECK(par[i].mismatch_order == ser[i].mismatch_order);
        CHECK(par[i].mismatch_value == ser[i].mismatch_value);
        if (i > 0)
            CHECK(par[i - 1].id <= par[i].id);
    }
    CHECK(par[3].id == "s-pair-a");
    CHECK_FALSE(par[3].pass);
}

TEST_CASE("report JSON round-trips")
{
    VerifyReport pass = verify(job("radical-v", 12));
    CHECK(report_from_json(report_to_json(pass)) == pass);
    IdentityParams ip;
    ip.mutation = Mutation::PochOffset;
    VerifyJob j = job("t-pair-a", 6, ip);
    j.mode = VerifyMode::Sampled;
    VerifyReport fail = verify(j);
    CHECK_FALSE(fail.pass);
    REQUIRE(fail.samples.has_value());
    CHECK(report_from_json(report_to_json(fail)) == fail);
    VerifyReport sym = verify(job("s-pair-a", 6, ip));
    CHECK(report_from_json(report_to_json(sym)) == sym);
    CHECK(report_to_json(pass).find("\"first_mismatch\": null") != std::string::npos);
}
