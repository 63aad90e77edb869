#pragma once

#include "rm3/extension.hpp"
#include "rm3/numberfield.hpp"

#include <array>
#include <string>
#include <vector>

namespace rm3 {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerificationFailed : std::runtime_error {
    VerificationFailed(const std::string& id, const std::string& reason)
        : std::runtime_error(id + ": " + reason), record_id(id), reason(reason) {}
    std::string record_id, reason;
};
struct RootNotInField : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SeedFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A rank-3 lattice in the field, held in canonical form: an integral 3x3 row
// HNF matrix over a positive denominator, with common content removed.  The
// canonical form is unique per lattice, so equality is representation
// equality.
class FractionalIdeal {
  public:
    FractionalIdeal() = default;
    // rows = basis elements in power-basis coordinates (need not be in any
    // normal form; must be rationally independent).
    static FractionalIdeal from_rows(const FieldPtr& field,
                                     const std::vector<std::array<Rational, 3>>& rows);
    static FractionalIdeal from_elements(const std::vector<FieldElement>& gens);
    static FractionalIdeal power_basis_lattice(const FieldPtr& field);  // Z[theta]

    const FieldPtr& field() const { return field_; }
    const RationalMatrix& numerator() const { return h_; }
    const Integer& denominator() const { return den_; }
    // Basis as field elements (rows of numerator() / denominator()).
    std::array<FieldElement, 3> basis() const;
    RationalMatrix basis_matrix() const;  // rows over Q

    bool contains(const FieldElement& x) const;
    FractionalIdeal scaled(const FieldElement& lambda) const;
    FractionalIdeal multiplied(const FractionalIdeal& other) const;

    bool operator==(const FractionalIdeal& o) const;
    bool operator!=(const FractionalIdeal& o) const { return !(*this == o); }
    std::string str() const;

  private:
    FieldPtr field_;
    RationalMatrix h_;  // integral, row HNF, full rank
    Integer den_ = 1;
};

// An order: a lattice that is a subring containing 1 (verified).
class Order {
  public:
    Order() = default;
    explicit Order(FractionalIdeal lattice);  // throws if not a ring with 1
    const FractionalIdeal& lattice() const { return lat_; }
    bool operator==(const Order& o) const { return lat_ == o.lat_; }
    Integer discriminant() const;  // det of the trace Gram of a basis

  private:
    FractionalIdeal lat_;
};

Order coefficient_ring(const FractionalIdeal& ideal);
FractionalIdeal inverse_different(const FractionalIdeal& ideal);

// Two fundamental totally positive units stabilizing a lattice; the axioms
// that can be checked are checked by verify(), fundamentality itself is
// trusted input.
struct UnitSystem {
    FieldElement eps1, eps2;
    // Throws VerificationFailed on a violated axiom.
    void verify(const std::string& record_id, const FractionalIdeal& ideal) const;
};

// Generators of the full group of units stabilizing the ideal, modulo sign:
// the totally positive pair extended by any square roots of eps1, eps2,
// eps1*eps2 that exist in the field and stabilize the ideal.
std::pair<FieldElement, FieldElement> saturate_units(const UnitSystem& units,
                                                     const FractionalIdeal& ideal);

struct FieldRecord {
    Integer disc;
    int index = 0;  // distinguishes fields sharing a discriminant
    FieldPtr field;
    int class_number = 0;
    std::vector<FractionalIdeal> classes;  // classes[0] is the maximal order
    Order maximal_order;
    UnitSystem units;
    std::string source;
    std::string id() const;
};

// One JSON record per line; every record is re-verified on load and rejected
// with a diagnostic on any failure.  See README for the exact grammar.
std::vector<FieldRecord> load_field_table(const std::string& path);

// Fractional ideal with power basis {1, alpha, alpha^2} whose coefficient
// ring is the given maximal order, found through the index form of the
// order's basis.
std::pair<FractionalIdeal, FieldElement> monogenetic_seed(const FieldPtr& field,
                                                          const Order& maximal_order);

// The basis (a, 1-a, a(a-1)) of the monogenetic lattice, with a shifted by an
// integer so that the triple is admissible.
std::pair<FractionalIdeal, std::array<FieldElement, 3>> seed_admissible_basis(
    const FieldPtr& field, const Order& maximal_order);

}  // namespace rm3
