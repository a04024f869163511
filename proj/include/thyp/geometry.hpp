#pragma once

#include "thyp/cyclo.hpp"
#include "thyp/upoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thyp {

// Branching data for the ordinary multiple points over beta = 0 on the curve
// of ordered k-tuples of trinomial roots: N^P points, each with N^T tangents,
// each lifted point mapped with multiplicity M.
struct BranchDatum {
    int nu;
    long NP;
    long NT;
    long M;
};

std::pair<int, int> nu_range(int p, int q, int k);
BranchDatum branch_counts(int p, int q, int k, int nu);
// (n-k+1)_k, the degree of the map to the zeta line.
long cover_degree(int p, int q, int k);

// Fibres over zeta = 0, 1, oo as multiplicity -> number of points.
struct RamProfile {
    std::map<long, long> over0, over1, overinf;
    friend bool operator==(const RamProfile&, const RamProfile&) = default;
};
long fibre_total(const std::map<long, long>& f);
std::string profile_str(const RamProfile& r);

RamProfile ram_profile(int p, int q, int k);

// Closed-form genus (exact rational, integral when the formula is right).
Rat genus_formula(int p, int q, int k);
// 1 - deg + sum (e - 1) / 2 over the three fibres.
Rat hurwitz_genus(const RamProfile& r, long degree);

struct GenusReport {
    int p, q, k;
    long genus;
    long hurwitz_genus;
    RamProfile profile;
};
// Throws ConstraintError on gcd(p,q) != 1 and std::logic_error when the
// formula and the Hurwitz count disagree.
GenusReport genus(int p, int q, int k);

struct Classification {
    std::vector<std::array<int, 3>> genus0, genus1;  // (p, q, k), k >= 3
};
Classification classify_low_genus(int bound);

// T_{p,q} with p x^{p+q} - (p+q) x^p + q = (x-1)^2 T, checked on construction.
QPoly T_poly(int p, int q);

// Belyi maps as rational functions over Q.
struct CatalogEntry {
    std::string id;
    std::string description;
    bool uses_p, uses_q;
};
const std::vector<CatalogEntry>& belyi_ids();
QRatFunc belyi_catalog(const std::string& id, int p = 1, int q = 2);
// Degree stated for the map.
int belyi_stated_degree(const std::string& id, int p = 1, int q = 2);

// s -> (-1)^q n^n/(p^p q^q) s^q/(1-s)^n
QRatFunc phi1(int p, int q);
// t -> s on the curve of root pairs, [x_1:x_2] = [t+1:t-1]
QRatFunc phi2(int p, int q);
QRatFunc pi2(int p, int q);

struct BelyiReport {
    int degree = 0;
    bool critical_values_ok = false;  // squarefree(W) | squarefree(P Q (P - Q))
    bool infinity_ok = false;         // oo unramified when mapped off {0,1,oo}
    bool totals_ok = false;           // each fibre sums to the degree
    bool matches_expected = true;
    long genus = -1;
    RamProfile profile;
    bool ok() const { return critical_values_ok && infinity_ok && totals_ok && matches_expected && genus >= 0; }
};
BelyiReport verify_belyi(const QRatFunc& f, const std::optional<RamProfile>& expected = std::nullopt);

// Defining polynomial of the plane curve of root triples, in slots 0, 1, 2.
MPoly defining_poly_k3(int p, int q);

// sigma_n, sigma_q on the plane curve of root triples, as rational functions
// of x_1, x_2, x_3 (slots 0, 1, 2); branch chosen by p > 1 or q > 1.
ParamRat sigma_n_k3(int p, int q, bool p_branch);
ParamRat sigma_q_k3(int p, int q, bool p_branch);

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};
// Parametrizations substituted into their curves and covering maps, and the
// decompositions of the catalog maps as compositions.
std::vector<Check> membership_checks();
std::vector<Check> composition_checks(int max_n = 7);

// j-invariant of w^2 = f(x), f of degree 3 or 4, via the invariants of the
// binary quartic: I/3 and J/54 in the normalization j = 1728 I^3/(I^3 - 27 J^2).
Rat elliptic_j(const QPoly& f);

}  // namespace thyp
