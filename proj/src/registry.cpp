#include "thyp/registry.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <random>
#include <set>

namespace thyp {

namespace {

using Build = std::function<Sides(const IdentityParams&, int)>;
using IntOf = std::function<int(const IdentityParams&)>;

const std::vector<Mutation> kAll = {Mutation::KernelSign, Mutation::MapCoeff, Mutation::PochOffset};
const std::vector<Mutation> kMapPoch = {Mutation::MapCoeff, Mutation::PochOffset};

IntOf constant(int v)
{
    return [v](const IdentityParams&) { return v; };
}

TrinomialCase trinomial_case(Part part, const IdentityParams& ip)
{
    if (ip.p < 1 || ip.q < 1 || std::gcd(ip.p, ip.q) != 1)
        throw ConstraintError("p and q must be positive and coprime");
    TrinomialCase tc;
    tc.part = part;
    tc.p = ip.p;
    tc.q = ip.q;
    tc.l = ip.l;
    tc.kappa = ip.kappa;
    tc.j = ip.j;
    tc.a = ip.sym(ka);
    tc.c = ip.sym(kc);
    return tc;
}

IdentityParams with_shape(IdentityParams ip, int p, int q)
{
    ip.p = p;
    ip.q = q;
    return ip;
}

std::vector<IdentityCase> make_registry()
{
    std::vector<IdentityCase> reg;
    auto add = [&](std::string id, std::string desc, std::string ring, std::vector<int> slots,
                   std::vector<std::string> shape, std::vector<Mutation> muts, int order, IntOf screen,
                   IntOf degree_n, Build build, IdentityParams defaults = {}) {
        IdentityCase c;
        c.id = std::move(id);
        c.description = std::move(desc);
        c.ring = std::move(ring);
        c.free_slots = std::move(slots);
        c.shape = std::move(shape);
        c.mutations = std::move(muts);
        c.default_order = order;
        c.defaults = defaults;
        c.screen = std::move(screen);
        c.degree_n = std::move(degree_n);
        c.build = std::move(build);
        reg.push_back(std::move(c));
    };

    add("kernel-ladder", "y^A F_l(A,B;y) on y - 1 - z y^B = 0 against its binomial series, l = -2..3", "Q(A,B)",
        {kA, kB}, {"l"}, {Mutation::KernelSign}, 12, constant(0), constant(2),
        [](const IdentityParams& ip, int N) {
            if (ip.l < -2 || ip.l > 3)
                throw ConstraintError("the kernel ladder covers l = -2..3");
            return kernel_ladder_sides(ip, N);
        });
    for (int l = 0; l <= 1; ++l)
        add("kernel-interp-" + std::to_string(l),
            "y^A G_" + std::to_string(l) + "(A,B,C;w) against its binomial series", "Q(A,B,C)", {kA, kB, kC}, {},
            {Mutation::KernelSign}, 8, constant(0), constant(2), [l](IdentityParams ip, int N) {
                ip.l = l;
                return kernel_interp_sides(ip, N);
            });

    struct RootId {
        const char* stem;
        const char* what;
        bool kappa, j, c;
        Sides (*fn)(const TrinomialCase&, int);
    };
    const RootId roots[] = {
        {"roots-binomial", "trinomial root power y_j^-a F_l against the binomial series", false, true, false,
         forward_sides},
        {"roots-expansion", "trinomial root power y_j^-a F_l as a sum of hypergeometric terms", false, true, false,
         expansion_sides},
        {"roots-inverse", "hypergeometric term as a root-of-unity average of root powers", true, false, false,
         inverse_sides},
        {"roots-interp", "c-interpolated hypergeometric term as an average of G_l root sides", true, false, true,
         interp_sides},
    };
    for (const auto& r : roots)
        for (Part part : {Part::I, Part::II}) {
            bool one = part == Part::I;
            std::string id = std::string(r.stem) + (one ? "-i" : "-ii");
            std::string desc = std::string(r.what) + (one ? ", roots near beta = 0" : ", roots near g = 0");
            std::vector<std::string> shape = {"p", "q", "l"};
            if (r.kappa)
                shape.push_back("kappa");
            if (r.j)
                shape.push_back("j");
            std::vector<int> slots = {ka};
            if (r.c)
                slots.push_back(kc);
            auto fn = r.fn;
            add(id, desc, r.c ? "Q(a,c)[w]" : "Q(a)[w]", slots, shape, {}, r.c ? 12 : 16,
                [one](const IdentityParams& ip) { return one ? ip.q : ip.p + ip.q; },
                [](const IdentityParams& ip) { return ip.p + ip.q; },
                [fn, part](const IdentityParams& ip, int N) { return fn(trinomial_case(part, ip), N); });
        }

    struct FamilyId {
        const char* stem;
        const char* what;
        LineFamily fam;
        bool reads_p;
        int p, q;
    };
    const FamilyId families[] = {
        {"s-line", "q = 1 line near s = 0", LineFamily::SLine, true, 1, 1},
        {"s-pair", "p = q = 1 pair curve near s = 1", LineFamily::SPair, false, 1, 1},
        {"t-pair", "q = 2 pair curve near t = 0, p odd", LineFamily::TPair, true, 1, 2},
        {"t-triple", "p = 1, q = 2 triple curve near t = 0", LineFamily::TTriple, false, 1, 2},
        {"u-conic", "p = 1, q = 3 conic near u = 0", LineFamily::UConic, false, 1, 3},
    };
    for (const auto& f : families)
        for (bool interp : {false, true}) {
            std::string id = std::string(f.stem) + (interp ? "-b" : "-a");
            std::string desc = std::string(f.what) + (interp ? ", c-interpolated kernel G_l" : ", kernel F_l");
            std::vector<std::string> shape;
            if (f.reads_p)
                shape.push_back("p");
            shape.insert(shape.end(), {"l", "kappa"});
            std::vector<int> slots = {ka};
            if (interp)
                slots.push_back(kc);
            LineFamily fam = f.fam;
            bool reads_p = f.reads_p;
            int p0 = f.p, q0 = f.q;
            IntOf screen, degree;
            switch (fam) {
            case LineFamily::SLine:
                screen = constant(1);
                degree = [](const IdentityParams& ip) { return ip.p + 1; };
                break;
            case LineFamily::SPair: screen = constant(2); degree = constant(2); break;
            case LineFamily::TPair:
                screen = constant(2);
                degree = [](const IdentityParams& ip) { return ip.p + 2; };
                break;
            case LineFamily::TTriple: screen = constant(3); degree = constant(3); break;
            case LineFamily::UConic: screen = constant(3); degree = constant(4); break;
            }
            add(id, desc, interp ? "Q(a,c)[w]" : "Q(a)[w]", slots, shape, kAll, interp ? 12 : 16, screen, degree,
                [fam, interp, reads_p, p0, q0](const IdentityParams& ip, int N) {
                    return family_sides(fam, reads_p ? with_shape(ip, ip.p, q0) : with_shape(ip, p0, q0), interp,
                                        N);
                });
        }

    add("t-pair-sample", "q = 2 pair curve at kappa = l = 0 with binomial powers of 1 +- t on the right", "Q(a)",
        {ka}, {"p"}, kMapPoch, 16, constant(2), [](const IdentityParams& ip) { return ip.p + 2; },
        [](const IdentityParams& ip, int N) { return pair_sample_sides(with_shape(ip, ip.p, 2), N); });

    add("degenerate-s-line", "q = 1 line at a = -1: rational closed form ((n-1)+s)/((n-1)(1-s))", "Q", {}, {"p"},
        kMapPoch, 16, constant(0), constant(1), degenerate_line_sides);
    add("degenerate-s-line-limit", "q = 1 line at a = -1 through the parameter limit: 1/(1-s)", "Q", {}, {"p"},
        kMapPoch, 16, constant(0), constant(1), degenerate_line_limit_sides);

    IdentityParams integral;
    integral.ia = -1;
    add("integral-pair", "p = 2, q = 3 pair curve at integral a <= -1 via the parameter limit, power-sum closed form",
        "Q", {}, {"a"}, kMapPoch, 24, constant(0), constant(1), integral_pair_sides, integral);
    const char* red[] = {"integral-red-5f4", "integral-red-4f3", "integral-red-5f4-a5"};
    const char* red_desc[] = {"nondegenerate 5F4 form of the integral family at a = -1",
                              "nondegenerate 4F3 form of the integral family at a = -1",
                              "nondegenerate 5F4 form of the integral family at a = -5"};
    for (int w = 0; w < 3; ++w)
        add(red[w], red_desc[w], "Q", {}, {}, kMapPoch, 24, constant(0), constant(1),
            [w](const IdentityParams& ip, int N) { return integral_reduction_sides(w, ip, N); });

    add("v-line-4f3", "4F3 on the degree-10 v line as a rational function of v", "Q", {}, {}, kMapPoch, 24,
        constant(0), constant(1), [](const IdentityParams& ip, int N) { return v_line_sides(0, ip, N); });
    add("v-line-5f4", "5F4 on the degree-10 v line as a rational function of v", "Q", {}, {}, kMapPoch, 24,
        constant(0), constant(1), [](const IdentityParams& ip, int N) { return v_line_sides(1, ip, N); });

    add("radical-v", "4F3 on the v line as a nested radical", "Q", {}, {}, kMapPoch, 40, constant(0), constant(1),
        radical_v_sides);
    add("radical-v-quadratic", "cube of the v-line 4F3 satisfies the stated quadratic", "Q", {}, {}, kMapPoch, 40,
        constant(0), constant(1),
        [](const IdentityParams& ip, int N) { return radical_v_quadratic_sides(ip, N, false); });
    add("radical-v-quadratic-derived", "cube of the v-line 4F3 satisfies the quadratic derived from the coset product",
        "Q", {}, {}, kMapPoch, 40, constant(0), constant(1),
        [](const IdentityParams& ip, int N) { return radical_v_quadratic_sides(ip, N, true); });
    add("radical-x", "4F3 on the degree-15 x line as a nested radical", "Q", {}, {}, kMapPoch, 30, constant(0),
        constant(1), radical_x_sides);
    add("radical-x-quadratic", "fourth power of the x-line 4F3 satisfies the stated quadratic", "Q", {}, {},
        kMapPoch, 30, constant(0), constant(1), radical_x_quadratic_sides);

    std::sort(reg.begin(), reg.end(), [](const IdentityCase& x, const IdentityCase& y) { return x.id < y.id; });
    return reg;
}

std::string slot_list(const std::vector<int>& slots)
{
    std::string out;
    for (int s : slots)
        out += (out.empty() ? "" : ",") + default_var_names().at(static_cast<std::size_t>(s));
    return out;
}

struct RingScan {
    unsigned mask = 0;
    int conductor = 1;
    void add(const Cyclo& x)
    {
        for (const auto& c : x.coords())
            mask |= c.var_mask();
        if (!x.is_scalar())
            conductor = std::lcm(conductor, x.conductor());
    }
};

Rat draw(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-40, 40), den(2, 40);
    for (;;) {
        Rat r(num(rng), den(rng));
        if (!r.is_integer())
            return r;
    }
}

bool screened(int m, int slot, const Rat& v) { return slot == ka && m > 0 && (v * Rat(m)).is_integer(); }

std::string assignment(const std::map<int, ParamRat>& values, const std::vector<int>& slots)
{
    std::string out;
    for (int s : slots)
        out += (out.empty() ? "" : ", ") + default_var_names().at(static_cast<std::size_t>(s)) + "=" +
               values.at(s).str();
    return out;
}

void fill(VerifyReport& r, const Sides& s)
{
    int k = first_mismatch(s);
    r.pass = k < 0;
    r.mismatch_order = k;
    r.mismatch_value = k < 0 ? "" : mismatch_value(s, k);
    r.branch_choices = s.branch_choices;
}

}  // namespace

std::string mode_name(VerifyMode m) { return m == VerifyMode::Parametric ? "parametric" : "sampled"; }

VerifyMode parse_mode(const std::string& s)
{
    if (s == "parametric")
        return VerifyMode::Parametric;
    if (s == "sampled")
        return VerifyMode::Sampled;
    throw UsageError("unknown mode: " + s);
}

const std::vector<IdentityCase>& list_identities()
{
    static const std::vector<IdentityCase> reg = make_registry();
    return reg;
}

const IdentityCase& find_identity(const std::string& id)
{
    for (const auto& c : list_identities())
        if (c.id == id)
            return c;
    throw UsageError("unknown identity: " + id);
}

void screen_params(const IdentityCase& c, const IdentityParams& ip)
{
    auto it = ip.values.find(ka);
    if (it == ip.values.end() || !it->second.is_constant())
        return;
    int m = c.screen(ip);
    if (screened(m, ka, it->second.constant_value()))
        throw ConstraintError("a = " + it->second.str() + " is screened: " + std::to_string(m) +
                              " a is an integer");
}

Sides build_sides(const std::string& id, const IdentityParams& ip, int N)
{
    const IdentityCase& c = find_identity(id);
    screen_params(c, ip);
    return c.build(ip, N);
}

int sample_degree_bound(const std::string& id, const IdentityParams& ip, int N)
{
    const IdentityCase& c = find_identity(id);
    int free = 0;
    for (int s : c.free_slots)
        free += ip.values.count(s) ? 0 : 1;
    return ((c.degree_n(ip) + 1) * N + std::abs(ip.l) + 4) * std::max(free, 1);
}

int sample_plan(const std::string& id, const IdentityParams& ip, int N) { return sample_degree_bound(id, ip, N) + 1; }

std::string ring_of(const Sides& s)
{
    RingScan scan;
    for (const CSeries* side : {&s.lhs, &s.rhs})
        for (int k = 0; k <= side->order(); ++k)
            scan.add((*side)[k]);
    scan.mask |= s.lhs_den.var_mask() | s.rhs_den.var_mask();
    std::vector<int> slots;
    for (int v = 0; v < 8; ++v)
        if (scan.mask & (1u << v))
            slots.push_back(v);
    std::string out = slots.empty() ? "Q" : "Q(" + slot_list(slots) + ")";
    if (scan.conductor > 1)
        out += "[w]/Phi_" + std::to_string(scan.conductor);
    return out;
}

VerifyReport verify(const VerifyJob& job)
{
    const IdentityCase& c = find_identity(job.id);
    IdentityParams ip = job.params;
    if (ip.mutation != Mutation::None &&
        std::find(c.mutations.begin(), c.mutations.end(), ip.mutation) == c.mutations.end())
        throw UsageError(job.id + " does not support the mutation " + mutation_name(ip.mutation));
    if (job.order < -1)
        throw UsageError("order must be non-negative");
    int N = job.order < 0 ? c.default_order : job.order;
    if (N < 0)
        throw UsageError("order must be non-negative");
    screen_params(c, ip);

    auto t0 = std::chrono::steady_clock::now();
    VerifyReport r;
    r.id = job.id;
    r.mode = job.mode;
    r.order = N;
    std::vector<int> free;
    for (int s : c.free_slots)
        if (!ip.values.count(s))
            free.push_back(s);

    if (job.mode == VerifyMode::Parametric || free.empty()) {
        Sides s = c.build(ip, N);
        fill(r, s);
        r.ring = ring_of(s);
    } else {
        int d = sample_degree_bound(job.id, ip, N);
        int count = d + 1;
        int m = c.screen(ip);
        std::mt19937_64 rng(job.seed);
        std::vector<std::set<Rat>> used(free.size());
        auto fresh = [&](std::mt19937_64& g, std::size_t i) {
            for (;;) {
                Rat v = draw(g);
                if (!screened(m, free[i], v) && used[i].insert(v).second)
                    return v;
            }
        };
        std::vector<std::map<int, ParamRat>> points(static_cast<std::size_t>(count));
        for (auto& pt : points)
            for (std::size_t i = 0; i < free.size(); ++i)
                pt[free[i]] = ParamRat(fresh(rng, i));

        std::vector<Sides> sides(points.size());
        std::vector<std::exception_ptr> errors(points.size());
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            auto& pt = points[static_cast<std::size_t>(i)];
            for (int attempt = 0;; ++attempt) {
                IdentityParams at = ip;
                for (const auto& [slot, v] : pt)
                    at.values[slot] = v;
                try {
                    sides[static_cast<std::size_t>(i)] = c.build(at, N);
                    break;
                } catch (const std::domain_error&) {
                    if (attempt == 20) {
                        errors[static_cast<std::size_t>(i)] = std::current_exception();
                        break;
                    }
                } catch (...) {
                    errors[static_cast<std::size_t>(i)] = std::current_exception();
                    break;
                }
                // a degenerate point: move it off the degeneracy
                for (auto& [slot, v] : pt)
                    v = v + ParamRat(Rat(1, 97 + attempt));
            }
        }
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);

        r.pass = true;
        for (std::size_t i = 0; i < sides.size(); ++i) {
            int k = first_mismatch(sides[i]);
            if (k >= 0 && (r.pass || k < r.mismatch_order)) {
                r.pass = false;
                r.mismatch_order = k;
                r.mismatch_value = assignment(points[i], free) + ": " + mismatch_value(sides[i], k);
            }
        }
        r.branch_choices = sides.front().branch_choices;
        r.ring = ring_of(sides.front()) + " at sampled " + slot_list(free);
        SampleInfo info;
        info.count = count;
        info.degree_bound = d;
        info.status = count > d && free.size() == 1 ? "deterministic under degree bound" : "probabilistic";
        r.samples = info;
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<VerifyReport> verify_batch(const std::vector<VerifyJob>& jobs, bool parallel)
{
    std::vector<VerifyReport> out(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    int n = static_cast<int>(jobs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = verify(jobs[static_cast<std::size_t>(i)]);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::stable_sort(out.begin(), out.end(), [](const VerifyReport& x, const VerifyReport& y) { return x.id < y.id; });
    return out;
}

std::string report_to_json(const VerifyReport& r)
{
    nlohmann::json j;
    j["id"] = r.id;
    j["mode"] = mode_name(r.mode);
    j["order"] = r.order;
    j["pass"] = r.pass;
    if (r.mismatch_order < 0)
        j["first_mismatch"] = nullptr;
    else
        j["first_mismatch"] = {{"order", r.mismatch_order}, {"value", r.mismatch_value}};
    j["ring"] = r.ring;
    j["branch_choices"] = r.branch_choices;
    j["millis"] = r.millis;
    if (r.samples)
        j["samples"] = {{"count", r.samples->count},
                        {"degree_bound", r.samples->degree_bound},
                        {"status", r.samples->status}};
    else
        j["samples"] = nullptr;
    return j.dump(2);
}

VerifyReport report_from_json(const std::string& s)
{
    nlohmann::json j = nlohmann::json::parse(s);
    VerifyReport r;
    r.id = j.at("id").get<std::string>();
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.order = j.at("order").get<int>();
    r.pass = j.at("pass").get<bool>();
    const auto& fm = j.at("first_mismatch");
    if (!fm.is_null()) {
        r.mismatch_order = fm.at("order").get<int>();
        r.mismatch_value = fm.at("value").get<std::string>();
    }
    r.ring = j.at("ring").get<std::string>();
    r.branch_choices = j.at("branch_choices").get<std::vector<std::string>>();
    r.millis = j.at("millis").get<double>();
    if (j.contains("samples") && !j.at("samples").is_null()) {
        const auto& sm = j.at("samples");
        r.samples = SampleInfo{sm.at("count").get<int>(), sm.at("degree_bound").get<int>(),
                               sm.at("status").get<std::string>()};
    }
    return r;
}

}  // namespace thyp
