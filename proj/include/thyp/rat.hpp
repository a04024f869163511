#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace thyp {

// Exact rational number, always canonical (reduced, positive denominator).
class Rat {
public:
    Rat() = default;
    Rat(int v) : q_(v) {}
    Rat(long v) : q_(v) {}
    Rat(long long v) : q_(static_cast<long>(v)) {}
    Rat(unsigned long v) : q_(v) {}
    Rat(const mpz_class& z) : q_(z) {}
    Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    Rat(long num, long den);
    Rat(const mpz_class& num, const mpz_class& den);

    static Rat parse(const std::string& s);

    const mpq_class& get() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    long to_long() const;

    Rat inverse() const;
    Rat pow(long e) const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }

    std::string str() const { return q_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline Rat inverse(const Rat& r) { return r.inverse(); }
inline std::string to_string(const Rat& r) { return r.str(); }

// Pochhammer symbol (x)_r, with (x)_r = 1/[(x-s)...(x-1)] for r = -s < 0.
Rat pochhammer(const Rat& x, long r);
Rat factorial(long n);
Rat binomial(long n, long k);
// C(x, r) = (x-r+1)_r / r! for r >= 0, zero for r < 0.
Rat binom_ext(const Rat& x, long r);

}  // namespace thyp

template <>
struct std::hash<thyp::Rat> {
    size_t operator()(const thyp::Rat& r) const;
};
