#pragma once

#include "rm3/rational.hpp"

#include <utility>
#include <vector>

namespace rm3 {

// Dense univariate polynomial over Q, constant term first.  The zero
// polynomial has empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RationalPoly constant(const Rational& q) { return RationalPoly({q}); }
    static RationalPoly x_power(int n, const Rational& lead = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero poly
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool has_integer_coeffs() const;

    Rational operator()(const Rational& x) const;

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator*(const Rational& q) const;
    RationalPoly operator-() const { return *this * Rational(-1); }
    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

    RationalPoly derivative() const;
    // Euclidean division: returns (quotient, remainder).
    std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const;
    RationalPoly monic() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);  // monic gcd
RationalPoly squarefree_part(const RationalPoly& a);

// Resultant of two polynomials over Q (subresultant-free notion: computed
// from the Euclidean remainder sequence).
Rational resultant(const RationalPoly& a, const RationalPoly& b);
Rational discriminant(const RationalPoly& a);

// Rational roots, found exactly (candidates p/q with p | constant, q | leading
// after clearing denominators).
std::vector<Rational> rational_roots(const RationalPoly& a);

// Sturm-sequence machinery for exact real-root isolation.
struct SturmSequence {
    explicit SturmSequence(const RationalPoly& f);  // f squarefree
    int sign_changes_at(const Rational& x) const;
    // Number of real roots in (a, b].
    int count_roots(const Rational& a, const Rational& b) const;
    std::vector<RationalPoly> seq;
};

// A bound B such that all real roots of f lie in (-B, B).
Rational root_bound(const RationalPoly& f);

// Disjoint open isolating intervals for the real roots of f (not necessarily
// squarefree), ascending, each containing exactly one root.  Intervals are
// refined to width <= eps.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const RationalPoly& f,
                                                              const Rational& eps);

// nth cyclotomic polynomial, exact.
RationalPoly cyclotomic(int n);

}  // namespace rm3
