#pragma once

#include "thyp/rat.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace thyp {

// Sparse multivariate polynomial over Q in at most kMaxVars variables.
// A monomial is packed into 64 bits, 8 bits of exponent per variable with
// variable 0 in the top byte, so integer order on the packed key is lex order.
constexpr int kMaxVars = 8;
constexpr int kMaxDeg = 255;
using Mono = std::uint64_t;

inline int mono_exp(Mono m, int v) { return static_cast<int>((m >> (56 - 8 * v)) & 0xFF); }
inline Mono mono_of(int v, int e) { return static_cast<Mono>(e) << (56 - 8 * v); }
bool mono_divides(Mono d, Mono m);
unsigned mono_mask(Mono m);

class MPoly {
public:
    using Term = std::pair<Mono, Rat>;

    MPoly() = default;
    MPoly(const Rat& c);
    MPoly(int c) : MPoly(Rat(c)) {}
    static MPoly var(int v, int e = 1);
    static MPoly monomial(Mono m, const Rat& c);
    static MPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    bool is_monomial() const { return t_.size() == 1; }
    Rat constant_value() const;
    Rat constant_term() const;
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    const Term& leading() const { return t_.front(); }
    const Rat& leading_coeff() const { return t_.front().second; }

    unsigned var_mask() const;
    int degree(int v) const;
    int total_degree() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rat& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& c) { a *= c; return a; }
    friend MPoly operator*(const Rat& c, MPoly a) { a *= c; return a; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(int e) const;
    MPoly mul_mono(Mono m) const;
    // Scaled so the lex-leading coefficient is 1.
    MPoly monic() const;
    // Scaled to integer coefficients with unit content and positive lead.
    MPoly primitive_integer() const;

    Rat eval(const std::vector<Rat>& point) const;
    // Polynomial substitution of variable v by value.
    MPoly subst(int v, const MPoly& value) const;
    MPoly derivative(int v) const;

    // Coefficients in variable v (index = degree); entries are free of v.
    std::vector<MPoly> coeffs_in(int v) const;
    static MPoly from_coeffs(const std::vector<MPoly>& c, int v);

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;

private:
    std::vector<Term> t_;  // sorted by descending monomial, nonzero coefficients
};

const std::vector<std::string>& default_var_names();

// Exact quotient a / b; throws std::domain_error if b does not divide a.
MPoly exact_div(const MPoly& a, const MPoly& b);
bool try_div(const MPoly& a, const MPoly& b, MPoly& quotient);
// Greatest common divisor, normalized to lex-leading coefficient 1.
MPoly gcd(const MPoly& a, const MPoly& b);
// Gcd of the coefficients of p viewed as a polynomial in v.
MPoly content_in(const MPoly& p, int v);

}  // namespace thyp
