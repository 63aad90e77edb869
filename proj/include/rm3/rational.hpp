#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rm3 {

// Exact rationals. mpq_class keeps gcd(num,den)=1 and den>0 after
// canonicalize(), which the arithmetic operators maintain.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sgn(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer rfloor(const Rational& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline Integer rceil(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

// Nearest integer, ties toward +infinity.
inline Integer rround(const Rational& q) {
    return rfloor(q + Rational(1, 2));
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational rpow(const Rational& base, long e) {
    if (e == 0) return 1;
    if (base == 0) {
        if (e < 0) throw std::domain_error("rpow: 0^negative");
        return 0;
    }
    Rational b = e < 0 ? Rational(1 / base) : base;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Rational acc = 1;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Parses "a", "-a", "a/b".
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::runtime_error("bad rational: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw std::runtime_error("zero denominator: " + s);
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// The unique rational with smallest denominator in [lo, hi], via the
// Stern-Brocot walk.  Used to reconstruct exact coordinates from certified
// enclosures.
inline Rational simplest_in_interval(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::domain_error("simplest_in_interval: empty");
    if (lo <= 0 && 0 <= hi) return 0;
    if (hi < 0) return -simplest_in_interval(-hi, -lo);
    // 0 < lo <= hi
    Rational c(rceil(lo));
    if (c <= hi) return c;
    Rational f(rfloor(lo));  // f < lo <= hi < f+1
    return f + 1 / simplest_in_interval(1 / (hi - f), 1 / (lo - f));
}

}  // namespace rm3
