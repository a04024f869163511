#pragma once

#include "thyp/errors.hpp"
#include "thyp/series.hpp"

#include <vector>

namespace thyp {

using PSeries = TruncSeries<ParamRat>;
using QSeries = TruncSeries<Rat>;

// Parameters of nF_{n-1}(upper; lower; z); the implicit lower parameter 1 is
// not listed, so lower.size() == upper.size() - 1 for the balanced case.
struct HypSpec {
    std::vector<ParamRat> upper;
    std::vector<ParamRat> lower;
};

// sum_k prod (upper)_k / (prod (lower)_k k!) z^k through z^N.
PSeries hyp_series(const HypSpec& spec, int N);

// Parametric excess S = sum lower - sum upper - 1, the implicit lower 1 included.
ParamRat hyp_excess(const HypSpec& spec);

// D = prod_{i<=n} (theta + b_i - 1) - z prod (theta + a_i), b_n = 1, theta = z d/dz.
PSeries apply_Dn(const HypSpec& spec, const PSeries& f);

// Series factor g of the local solution z^(1 - b_j) g(z) at the origin,
// j indexing spec.lower.
HypSpec frobenius_spec(const HypSpec& spec, std::size_t j);

// Parameter affine in a single variable t: slope * t + offset.
struct Affine {
    Rat slope;
    Rat offset;
    Affine(Rat s, Rat o) : slope(std::move(s)), offset(std::move(o)) {}
    Affine(const Rat& o) : slope(0), offset(o) {}
    Affine(int o) : slope(0), offset(o) {}
    Rat at(const Rat& t) const { return slope * t + offset; }
};

// Coefficients of nF_{n-1} with parameters affine in t, in the limit t -> t0.
// Vanishing linear factors are cancelled by order counting; throws
// ConstraintError when a coefficient diverges.
QSeries hyp_series_limit(const std::vector<Affine>& upper, const std::vector<Affine>& lower,
                         const Rat& t0, int N);

// Tail [z^{>m'}] of nF_{n-1}((a), a_n; (b), b_{n-1}) in the limit a_n -> -m',
// b_{n-1} -> -m with (a_n + m') / (b_{n-1} + m) -> alpha. Here (a) has n-1
// entries and (b) has n-2 entries.
PSeries degenerate_limit(const std::vector<ParamRat>& a, const std::vector<ParamRat>& b, int m,
                         int mprime, const ParamRat& alpha, int N);

}  // namespace thyp
