#pragma once

#include "thyp/param_rat.hpp"

#include <string>
#include <vector>

namespace thyp {

// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_poly(int m);
int euler_phi(int m);

// Element of Q(params)[w]/Phi_m(w), w a primitive m-th root of unity.
// Coordinates are taken in the power basis 1, w, ..., w^(phi(m)-1).
class Cyclo {
public:
    Cyclo() : c_(1) {}
    Cyclo(int v) : c_{ParamRat(v)} {}
    Cyclo(const Rat& v) : c_{ParamRat(v)} {}
    Cyclo(const ParamRat& v) : c_{v} {}
    Cyclo(const ParamRat& v, int m);
    // w_m^k
    static Cyclo root(int m, long k);

    int conductor() const { return m_; }
    const std::vector<ParamRat>& coords() const { return c_; }
    bool is_zero() const;
    bool is_scalar() const;
    const ParamRat& scalar_part() const { return c_[0]; }
    // Coordinates with respect to conductor L (m must divide L).
    Cyclo embed(int L) const;

    Cyclo inverse() const;
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { a += b; return a; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { a -= b; return a; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { a *= b; return a; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { a /= b; return a; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo subst(const std::map<int, ParamRat>& values) const;
    std::string str() const;

private:
    void unify(Cyclo& o);
    int m_ = 1;
    std::vector<ParamRat> c_;
};

inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
inline Cyclo inverse(const Cyclo& x) { return x.inverse(); }
inline std::string to_string(const Cyclo& x) { return x.str(); }

}  // namespace thyp
