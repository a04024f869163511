#pragma once

#include "thyp/mpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace thyp {

using ParamPoly = MPoly;

// Variable slots used throughout: kernel parameters A, B, C; identity
// parameters a, c; an auxiliary slot e for limits; the kernel argument y.
enum Param : int { kA = 0, kB = 1, kC = 2, ka = 3, kc = 4, ke = 5, kY = 6 };

// Rational function num/den in the parameters, kept coprime with the
// denominator's lex-leading coefficient equal to 1.
class ParamRat {
public:
    ParamRat() = default;
    ParamRat(int v) : num_(Rat(v)), den_(Rat(1)) {}
    ParamRat(const Rat& v) : num_(v), den_(Rat(1)) {}
    ParamRat(const MPoly& p) : num_(p), den_(Rat(1)) {}
    ParamRat(const MPoly& num, const MPoly& den);
    static ParamRat var(int v) { return ParamRat(MPoly::var(v)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Rat constant_value() const;
    unsigned var_mask() const { return num_.var_mask() | den_.var_mask(); }

    ParamRat inverse() const;
    ParamRat pow(long e) const;
    ParamRat operator-() const;
    ParamRat& operator+=(const ParamRat& o);
    ParamRat& operator-=(const ParamRat& o);
    ParamRat& operator*=(const ParamRat& o);
    ParamRat& operator/=(const ParamRat& o) { return *this *= o.inverse(); }
    friend ParamRat operator+(ParamRat a, const ParamRat& b) { a += b; return a; }
    friend ParamRat operator-(ParamRat a, const ParamRat& b) { a -= b; return a; }
    friend ParamRat operator*(ParamRat a, const ParamRat& b) { a *= b; return a; }
    friend ParamRat operator/(ParamRat a, const ParamRat& b) { a /= b; return a; }
    friend bool operator==(const ParamRat& a, const ParamRat& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ParamRat& a, const ParamRat& b) { return !(a == b); }

    // Substitute the listed variables by values (others kept).
    ParamRat subst(const std::map<int, ParamRat>& values) const;
    // Value at a point; throws std::domain_error when the denominator vanishes.
    Rat eval(const std::vector<Rat>& point) const;
    // Limit as variable v tends to infinity; throws if it diverges.
    ParamRat limit_infinity(int v) const;

    std::string str() const;

private:
    void normalize();
    MPoly num_;
    MPoly den_{Rat(1)};
};

inline bool is_zero(const ParamRat& r) { return r.is_zero(); }
inline ParamRat inverse(const ParamRat& r) { return r.inverse(); }
inline std::string to_string(const ParamRat& r) { return r.str(); }

ParamRat pochhammer(const ParamRat& x, long r);
ParamRat binom_ext(const ParamRat& x, long r);

}  // namespace thyp
