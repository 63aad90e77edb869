#pragma once

#include "rm3/matrix.hpp"
#include "rm3/poly.hpp"
#include "rm3/rational.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace rm3 {

struct NotIrreducible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotTotallyReal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotABasis : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroElement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed rational interval, the exact carrier for embedding values.
struct QInterval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const;
    QInterval operator+(const Rational& q) const { return {lo + q, hi + q}; }
    QInterval operator*(const Rational& q) const {
        return q >= 0 ? QInterval{lo * q, hi * q} : QInterval{hi * q, lo * q};
    }
};

// Interval certified to contain one real embedding value, with the width it
// was refined to.
struct EmbeddingValue {
    QInterval interval;
    Rational target_precision;
};

class FieldElement;

// A totally real cubic field Q[x]/(f) with certified, ascending isolating
// intervals for the three real roots of f.
class CubicField : public std::enable_shared_from_this<CubicField> {
  public:
    static std::shared_ptr<const CubicField> make(const RationalPoly& f);

    const RationalPoly& defining_poly() const { return f_; }
    const Integer& discriminant() const { return disc_; }

    // Isolating interval of root j (1-based, ascending), width <= eps.
    QInterval root_interval(int j, const Rational& eps) const;

    FieldElement element(const Rational& c0, const Rational& c1, const Rational& c2) const;
    FieldElement from_rational(const Rational& q) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement theta() const;

  private:
    CubicField() = default;
    RationalPoly f_;
    Integer disc_;
    mutable std::array<QInterval, 3> roots_;
    mutable std::mutex refine_mutex_;
};

using FieldPtr = std::shared_ptr<const CubicField>;

// An element of a cubic field, exact coordinates in the power basis
// (1, theta, theta^2).
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::array<Rational, 3> coords)
        : field_(std::move(field)), c_(std::move(coords)) {}

    const FieldPtr& field() const { return field_; }
    const std::array<Rational, 3>& coords() const { return c_; }
    const Rational& coord(int i) const { return c_[i]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0; }
    Rational rational_value() const;  // throws unless is_rational

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator*(const Rational& q) const;
    FieldElement inverse() const;  // throws ZeroElement
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
    FieldElement pow(long e) const;
    bool operator==(const FieldElement& o) const { return c_ == o.c_; }
    bool operator!=(const FieldElement& o) const { return c_ != o.c_; }

    // Multiplication-by-x matrix on power-basis column coordinates.
    RationalMatrix mul_matrix() const;

    std::string str() const;

  private:
    FieldPtr field_;
    std::array<Rational, 3> c_{Rational(0), Rational(0), Rational(0)};
};

Rational trace(const FieldElement& x);
Rational norm(const FieldElement& x);

// The quadratic map Q(x) = N(x)/x, the product of the two conjugates of x.
FieldElement qmap(const FieldElement& x);

// Exact sign of x under the j-th embedding (1-based); 0 only for x == 0.
int sign_at(const FieldElement& x, int j);

bool totally_positive(const FieldElement& x);

// Interval of width <= eps certified to contain iota_j(x).
EmbeddingValue embed(const FieldElement& x, int j, const Rational& eps);

// Dual basis with respect to the trace pairing: Tr(r_i s_j) = delta_ij.
std::array<FieldElement, 3> dual_basis(const std::array<FieldElement, 3>& r);

// Trace Gram matrix Tr(r_i r_j).
RationalMatrix trace_gram(const std::array<FieldElement, 3>& r);

// Monic minimal polynomial over Q (degree 1 or 3 for cubic field elements).
RationalPoly minpoly_over_Q(const FieldElement& x);

}  // namespace rm3
