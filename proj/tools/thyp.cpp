#include "thyp/errors.hpp"
#include "thyp/geometry.hpp"
#include "thyp/registry.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <regex>

using namespace thyp;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kConstraint = 2, kUsage = 3 };

Rat parse_rat(const std::string& s)
{
    static const std::regex lit(R"([+-]?[0-9]+(/[0-9]+)?)");
    if (!std::regex_match(s, lit))
        throw UsageError("not a rational literal num/den: '" + s + "'");
    try {
        return Rat::parse(s);
    } catch (const std::exception&) {
        throw UsageError("not a rational literal num/den: '" + s + "'");
    }
}

void emit_json(const std::string& path, const json& j)
{
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    out << j.dump(2) << "\n";
}

struct VerifyArgs {
    std::string id;
    bool all = false;
    int order = -1;
    std::string mode = "parametric";
    std::map<std::string, std::string> values;  // symbolic slot name -> literal
    std::optional<int> p, q, l, kappa, j;
    std::string mutation = "none";
    std::uint64_t seed = 1;
    std::string json_path;
};

const std::map<std::string, int> kSlots = {{"a", ka}, {"c", kc}, {"A", kA}, {"B", kB}, {"C", kC}};

VerifyJob make_job(const IdentityCase& c, const VerifyArgs& v)
{
    VerifyJob job;
    job.id = c.id;
    job.order = v.order;
    job.mode = parse_mode(v.mode);
    job.seed = v.seed;
    IdentityParams ip = c.defaults;
    auto shape = [&](const std::optional<int>& flag, const char* name, int& field) {
        if (!flag)
            return;
        if (std::find(c.shape.begin(), c.shape.end(), name) == c.shape.end())
            throw UsageError(c.id + " takes no parameter " + name);
        field = *flag;
    };
    shape(v.p, "p", ip.p);
    shape(v.q, "q", ip.q);
    shape(v.l, "l", ip.l);
    shape(v.kappa, "kappa", ip.kappa);
    shape(v.j, "j", ip.j);
    for (const auto& [name, lit] : v.values) {
        Rat r = parse_rat(lit);
        int slot = kSlots.at(name);
        bool integral = name == "a" && std::find(c.shape.begin(), c.shape.end(), "a") != c.shape.end();
        if (integral) {
            if (!r.is_integer())
                throw ConstraintError("the integral parameter a must be an integer");
            ip.ia = static_cast<int>(r.to_long());
        } else if (std::find(c.free_slots.begin(), c.free_slots.end(), slot) != c.free_slots.end()) {
            ip.values[slot] = ParamRat(r);
        } else {
            throw UsageError(c.id + " takes no parameter " + name);
        }
    }
    ip.mutation = parse_mutation(v.mutation);
    job.params = ip;
    return job;
}

void print_report(const VerifyReport& r)
{
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " order=" << r.order << " mode=" << mode_name(r.mode)
              << " ring=" << r.ring << " millis=" << r.millis << "\n";
    if (r.samples)
        std::cout << "  samples=" << r.samples->count << " degree_bound=" << r.samples->degree_bound << " ("
                  << r.samples->status << ")\n";
    for (const auto& b : r.branch_choices)
        std::cout << "  branch: " << b << "\n";
    if (!r.pass)
        std::cout << "  first mismatch at order " << r.mismatch_order << ": " << r.mismatch_value << "\n";
}

int cmd_verify(const VerifyArgs& v)
{
    if (v.all == !v.id.empty())
        throw UsageError("give an identity id or --all");
    std::vector<VerifyJob> jobs;
    if (v.all) {
        for (const auto& c : list_identities()) {
            VerifyArgs plain;
            plain.order = v.order;
            plain.mode = v.mode;
            plain.seed = v.seed;
            jobs.push_back(make_job(c, plain));
        }
    } else {
        jobs.push_back(make_job(find_identity(v.id), v));
    }
    std::vector<VerifyReport> reports = verify_batch(jobs);
    bool ok = true;
    json arr = json::array();
    for (const auto& r : reports) {
        print_report(r);
        ok = ok && r.pass;
        arr.push_back(json::parse(report_to_json(r)));
    }
    if (!v.json_path.empty())
        emit_json(v.json_path, v.all ? arr : arr.at(0));
    return ok ? kPass : kFail;
}

std::string triple_list(const std::vector<std::array<int, 3>>& xs)
{
    std::string out;
    for (const auto& t : xs)
        out += (out.empty() ? "" : " ") + std::string("(") + std::to_string(t[0]) + "," + std::to_string(t[1]) +
               "," + std::to_string(t[2]) + ")";
    return out;
}

json profile_json(const RamProfile& r)
{
    auto fib = [](const std::map<long, long>& f) {
        json o = json::object();
        for (const auto& [e, n] : f)
            o[std::to_string(e)] = n;
        return o;
    };
    return {{"0", fib(r.over0)}, {"1", fib(r.over1)}, {"inf", fib(r.overinf)}};
}

json genus_table(int bound)
{
    json rows = json::array();
    for (int n = 2; n <= bound; ++n)
        for (int p = 1; p < n; ++p) {
            int q = n - p;
            if (std::gcd(p, q) != 1)
                continue;
            for (int k = 1; k <= n; ++k) {
                GenusReport g = genus(p, q, k);
                rows.push_back({{"p", p}, {"q", q}, {"k", k}, {"genus", g.genus}, {"degree", cover_degree(p, q, k)}});
            }
        }
    return rows;
}

json classification(int bound)
{
    Classification c = classify_low_genus(bound);
    return {{"bound", bound}, {"genus0", c.genus0}, {"genus1", c.genus1}};
}

void print_classification(const json& j)
{
    std::cout << "genus 0, k >= 3: " << triple_list(j["genus0"].get<std::vector<std::array<int, 3>>>()) << "\n";
    std::cout << "genus 1, k >= 3: " << triple_list(j["genus1"].get<std::vector<std::array<int, 3>>>()) << "\n";
}

void print_genus_table(const json& rows)
{
    std::cout << "p q k degree genus\n";
    for (const auto& r : rows)
        std::cout << r["p"] << " " << r["q"] << " " << r["k"] << " " << r["degree"] << " " << r["genus"] << "\n";
}

struct GenusArgs {
    std::vector<int> pqk;
    int table = 0;
    int classify = 0;
    std::string json_path;
};

int cmd_genus(const GenusArgs& g)
{
    int modes = (g.pqk.empty() ? 0 : 1) + (g.table ? 1 : 0) + (g.classify ? 1 : 0);
    if (modes != 1)
        throw UsageError("give p q k, --table BOUND or --classify BOUND");
    json j;
    if (g.table) {
        j = genus_table(g.table);
        print_genus_table(j);
    } else if (g.classify) {
        j = classification(g.classify);
        print_classification(j);
    } else {
        if (g.pqk.size() != 3)
            throw UsageError("genus needs p q k");
        GenusReport r = genus(g.pqk[0], g.pqk[1], g.pqk[2]);
        std::cout << r.genus << "\n";
        std::cout << "  degree=" << cover_degree(r.p, r.q, r.k) << " hurwitz_genus=" << r.hurwitz_genus
                  << " profile=" << profile_str(r.profile) << "\n";
        j = {{"p", r.p},
             {"q", r.q},
             {"k", r.k},
             {"genus", r.genus},
             {"hurwitz_genus", r.hurwitz_genus},
             {"profile", profile_json(r.profile)}};
    }
    if (!g.json_path.empty())
        emit_json(g.json_path, j);
    return kPass;
}

struct BelyiArgs {
    std::string id;
    int p = 1, q = 2;
    std::string json_path;
};

int cmd_belyi(const BelyiArgs& b)
{
    if (b.id.empty()) {
        for (const auto& c : belyi_ids())
            std::cout << c.id << (c.uses_p ? " [p]" : "") << (c.uses_q ? " [q]" : "") << "  " << c.description
                      << "\n";
        return kPass;
    }
    const auto& ids = belyi_ids();
    if (std::none_of(ids.begin(), ids.end(), [&](const CatalogEntry& c) { return c.id == b.id; }))
        throw UsageError("unknown catalog map: " + b.id);
    QRatFunc f = belyi_catalog(b.id, b.p, b.q);
    BelyiReport r = verify_belyi(f);
    int stated = belyi_stated_degree(b.id, b.p, b.q);
    std::cout << b.id << " = " << f.str("x") << "\n";
    std::cout << "degree " << r.degree << " (stated " << stated << ")\n";
    std::cout << (r.ok() ? "ramified only over {0,1,oo}" : "NOT a Belyi map") << "\n";
    std::cout << "genus " << r.genus << "\n";
    std::cout << "profile " << profile_str(r.profile) << "\n";
    if (!b.json_path.empty())
        emit_json(b.json_path, {{"id", b.id},
                                {"map", f.str("x")},
                                {"degree", r.degree},
                                {"stated_degree", stated},
                                {"belyi", r.ok()},
                                {"genus", r.genus},
                                {"profile", profile_json(r.profile)}});
    return r.ok() && r.degree == stated ? kPass : kFail;
}

struct TableArgs {
    std::string name;
    int p = 2, q = 3, k = 5;
    std::optional<int> nu;
    int bound = 8;
    std::string json_path;
};

int cmd_table(const TableArgs& t)
{
    json j;
    if (t.name == "branching") {
        auto [lo, hi] = nu_range(t.p, t.q, t.k);
        j = json::array();
        std::cout << "nu NP NT M\n";
        for (int nu = lo; nu <= hi; ++nu) {
            if (t.nu && *t.nu != nu)
                continue;
            BranchDatum d = branch_counts(t.p, t.q, t.k, nu);
            std::cout << d.nu << " " << d.NP << " " << d.NT << " " << d.M << "\n";
            j.push_back({{"nu", d.nu}, {"NP", d.NP}, {"NT", d.NT}, {"M", d.M}});
        }
        if (t.nu && j.empty())
            throw ConstraintError("nu outside its range");
    } else if (t.name == "genus") {
        j = genus_table(t.bound);
        print_genus_table(j);
    } else if (t.name == "classification") {
        j = classification(t.bound);
        print_classification(j);
    } else {
        throw UsageError("unknown table: " + t.name + " (branching, genus, classification)");
    }
    if (!t.json_path.empty())
        emit_json(t.json_path, j);
    return kPass;
}

int cmd_list(const std::string& json_path)
{
    json arr = json::array();
    for (const auto& c : list_identities()) {
        std::string params;
        for (int s : c.free_slots)
            params += (params.empty() ? "" : ",") + default_var_names().at(static_cast<std::size_t>(s));
        std::string shape;
        for (const auto& s : c.shape)
            shape += (shape.empty() ? "" : ",") + s;
        std::cout << c.id << "  [" << c.ring << "; shape " << (shape.empty() ? "-" : shape) << "; order "
                  << c.default_order << "]  " << c.description << "\n";
        std::vector<std::string> muts;
        for (Mutation m : c.mutations)
            muts.push_back(mutation_name(m));
        arr.push_back({{"id", c.id},
                       {"description", c.description},
                       {"ring", c.ring},
                       {"symbolic", params},
                       {"shape", c.shape},
                       {"default_order", c.default_order},
                       {"mutations", muts}});
    }
    if (!json_path.empty())
        emit_json(json_path, arr);
    return kPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact truncated-series verification of algebraic hypergeometric identities"};
    app.require_subcommand(1);

    VerifyArgs v;
    auto* verify = app.add_subcommand("verify", "verify an identity to a truncation order");
    verify->add_option("id", v.id, "registry id");
    verify->add_flag("--all", v.all, "verify every registry id");
    verify->add_option("--order", v.order, "truncation order")->check(CLI::NonNegativeNumber);
    verify->add_option("--mode", v.mode, "parametric or sampled");
    for (const auto& [name, slot] : kSlots)
        verify->add_option_function<std::string>(
            "--" + name, [&v, name = name](const std::string& s) { v.values[name] = s; },
            "value of " + name + " as num/den");
    auto opt_int = [](CLI::App* sub, const std::string& flag, std::optional<int>& field, const std::string& help) {
        sub->add_option_function<int>(flag, [&field](int x) { field = x; }, help);
    };
    opt_int(verify, "--p", v.p, "p");
    opt_int(verify, "--q", v.q, "q");
    opt_int(verify, "--l", v.l, "kernel index l");
    opt_int(verify, "--kappa", v.kappa, "kappa");
    opt_int(verify, "--j", v.j, "root index j");
    verify->add_option("--mutation", v.mutation, "none, kernel-sign, map-coeff or poch-offset");
    verify->add_option("--seed", v.seed, "seed for SAMPLED values");
    verify->add_option("--json", v.json_path, "write the JSON report to PATH (- for stdout)");

    GenusArgs g;
    auto* gen = app.add_subcommand("genus", "genus of the curve of ordered k-tuples of roots");
    gen->add_option("pqk", g.pqk, "p q k")->expected(0, 3);
    gen->add_option("--table", g.table, "all coprime p + q <= BOUND")->check(CLI::PositiveNumber);
    gen->add_option("--classify", g.classify, "genus 0 and 1 curves with k >= 3, p + q <= BOUND")
        ->check(CLI::PositiveNumber);
    gen->add_option("--json", g.json_path, "write JSON to PATH (- for stdout)");

    BelyiArgs b;
    auto* bel = app.add_subcommand("belyi", "check a catalog map; no id lists the catalog");
    bel->add_option("id", b.id, "catalog id");
    bel->add_option("--p", b.p, "p");
    bel->add_option("--q", b.q, "q");
    bel->add_option("--json", b.json_path, "write JSON to PATH (- for stdout)");

    TableArgs t;
    auto* tab = app.add_subcommand("table", "branching, genus or classification table");
    tab->add_option("name", t.name, "branching, genus or classification")->required();
    tab->add_option("--p", t.p, "p");
    tab->add_option("--q", t.q, "q");
    tab->add_option("--k", t.k, "k");
    opt_int(tab, "--nu", t.nu, "single row");
    tab->add_option("--bound", t.bound, "bound on p + q");
    tab->add_option("--json", t.json_path, "write JSON to PATH (- for stdout)");

    std::string list_json;
    auto* lst = app.add_subcommand("list", "list the registry");
    lst->add_option("--json", list_json, "write JSON to PATH (- for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify)
            return cmd_verify(v);
        if (*gen)
            return cmd_genus(g);
        if (*bel)
            return cmd_belyi(b);
        if (*tab)
            return cmd_table(t);
        return cmd_list(list_json);
    } catch (const ConstraintError& e) {
        std::cerr << "constraint: " << e.what() << "\n";
        return kConstraint;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    }
}
