#pragma once

#include "rm3/numberfield.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace rm3 {

// Polynomials over the cubic field F, constant term first, as plain
// coefficient vectors.  Trailing zeros are trimmed by fp_trim.
using FPoly = std::vector<FieldElement>;

FPoly fp_trim(FPoly p);
int fp_degree(const FPoly& p);  // -1 for zero
FPoly fp_add(const FPoly& a, const FPoly& b);
FPoly fp_sub(const FPoly& a, const FPoly& b);
FPoly fp_mul(const FPoly& a, const FPoly& b);
FPoly fp_scale(const FPoly& a, const FieldElement& s);
std::pair<FPoly, FPoly> fp_divmod(const FPoly& a, const FPoly& b);
FieldElement fp_eval(const FPoly& p, const FieldElement& x);
FPoly fp_from_rational_poly(const FieldPtr& field, const RationalPoly& p);

// The extension ring L = F[t]/(m), m monic of degree 1..3 over F, verified
// irreducible at construction, so L is a field of degree 3*deg(m) over Q.
class ExtensionRing : public std::enable_shared_from_this<ExtensionRing> {
  public:
    // Caller-verified route: throws if m is not monic of degree 1..3 or if m
    // has a root in F while deg(m) >= 2.
    static std::shared_ptr<const ExtensionRing> make(FieldPtr field, FPoly modulus);
    // F adjoin a primitive k-th root of unity, k in {1,2,3,4,6}.
    static std::shared_ptr<const ExtensionRing> make_cyclotomic(FieldPtr field, int k);

    const FieldPtr& field() const { return field_; }
    const FPoly& modulus() const { return modulus_; }
    int degree_over_field() const { return fp_degree(modulus_); }
    int degree_over_Q() const { return 3 * degree_over_field(); }

  private:
    ExtensionRing() = default;
    FieldPtr field_;
    FPoly modulus_;
};

using ExtRingPtr = std::shared_ptr<const ExtensionRing>;

// An element of L, coordinates over F in powers of t.
class ExtensionElement {
  public:
    ExtensionElement() = default;
    ExtensionElement(ExtRingPtr ring, FPoly coords);

    const ExtRingPtr& ring() const { return ring_; }
    const FPoly& coords() const { return c_; }
    FieldElement coord(int i) const;

    bool is_zero() const;
    // Nonzero coordinates only at t^0.
    bool lies_in_field() const;
    FieldElement field_value() const;

    ExtensionElement operator+(const ExtensionElement& o) const;
    ExtensionElement operator-(const ExtensionElement& o) const;
    ExtensionElement operator-() const;
    ExtensionElement operator*(const ExtensionElement& o) const;
    ExtensionElement inverse() const;  // throws ZeroElement
    ExtensionElement operator/(const ExtensionElement& o) const { return *this * o.inverse(); }
    ExtensionElement pow(long e) const;
    bool operator==(const ExtensionElement& o) const;

    // Multiplication matrix on the Q-basis theta^i t^j of L.
    RationalMatrix mul_matrix_over_Q() const;

    std::string str() const;

  private:
    ExtRingPtr ring_;
    FPoly c_;
};

ExtensionElement ext_from_field(const ExtRingPtr& ring, const FieldElement& x);
ExtensionElement ext_generator(const ExtRingPtr& ring);  // the class of t

// Monic minimal polynomial over Q of an element of L.
RationalPoly minpoly_over_Q(const ExtensionElement& z);

// Kronecker test: the minimal polynomial must be a cyclotomic Phi_k; every k
// with phi(k) <= 18 is tried.  Returns the exact order, or nullopt.
std::optional<int> is_root_of_unity(const ExtensionElement& z);
std::optional<int> is_root_of_unity(const FieldElement& x);

// All roots of g that lie in F itself (g over F, degree <= 3), found by
// high-precision isolation plus continued-fraction reconstruction and exact
// verification, with the remaining cofactor.  The cofactor is irreducible
// over F whenever the root list is complete (any missed root would be
// caught when the cofactor is used as an extension modulus).
struct FieldRoots {
    std::vector<FieldElement> roots;
    FPoly cofactor;
};
FieldRoots roots_in_field(const FPoly& g);

}  // namespace rm3
