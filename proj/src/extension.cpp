#include "rm3/extension.hpp"

#include <algorithm>
#include <sstream>

namespace rm3 {

FPoly fp_trim(FPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int fp_degree(const FPoly& p) {
    int d = (int)p.size() - 1;
    while (d >= 0 && p[d].is_zero()) --d;
    return d;
}

FPoly fp_add(const FPoly& a, const FPoly& b) {
    FPoly r = a.size() >= b.size() ? a : b;
    const FPoly& s = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    return fp_trim(std::move(r));
}

FPoly fp_sub(const FPoly& a, const FPoly& b) {
    FPoly nb = b;
    for (auto& x : nb) x = -x;
    return fp_add(a, nb);
}

FPoly fp_mul(const FPoly& a, const FPoly& b) {
    if (a.empty() || b.empty()) return {};
    FieldPtr f = a[0].field() ? a[0].field() : b[0].field();
    FPoly r(a.size() + b.size() - 1, f->zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return fp_trim(std::move(r));
}

FPoly fp_scale(const FPoly& a, const FieldElement& s) {
    FPoly r = a;
    for (auto& x : r) x = x * s;
    return fp_trim(std::move(r));
}

std::pair<FPoly, FPoly> fp_divmod(const FPoly& a, const FPoly& b) {
    int db = fp_degree(b);
    if (db < 0) throw std::domain_error("fp_divmod: division by zero polynomial");
    FPoly r = fp_trim(a);
    int dr = fp_degree(r);
    if (dr < db) return {{}, r};
    FieldPtr f = b[db].field();
    FieldElement lead_inv = b[db].inverse();
    FPoly q(dr - db + 1, f->zero());
    for (int i = dr; i >= db; --i) {
        if (r.size() <= (size_t)i || r[i].is_zero()) continue;
        FieldElement c = r[i] * lead_inv;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - c * b[j];
    }
    return {fp_trim(std::move(q)), fp_trim(std::move(r))};
}

FieldElement fp_eval(const FPoly& p, const FieldElement& x) {
    FieldElement acc = x.field()->zero();
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

FPoly fp_from_rational_poly(const FieldPtr& field, const RationalPoly& p) {
    FPoly r;
    for (const auto& q : p.coeffs()) r.push_back(field->from_rational(q));
    return fp_trim(std::move(r));
}

std::shared_ptr<const ExtensionRing> ExtensionRing::make(FieldPtr field, FPoly modulus) {
    modulus = fp_trim(std::move(modulus));
    int d = fp_degree(modulus);
    if (d < 1 || d > 3) throw std::domain_error("extension modulus degree must be 1..3");
    if (!(modulus[d] == field->one())) throw std::domain_error("extension modulus must be monic");
    if (d >= 2) {
        // A cubic or quadratic with no root in F is irreducible over F.
        FieldRoots fr = roots_in_field(modulus);
        if (!fr.roots.empty()) throw NotIrreducible("extension modulus has a root in the field");
    }
    auto ring = std::shared_ptr<ExtensionRing>(new ExtensionRing());
    ring->field_ = std::move(field);
    ring->modulus_ = std::move(modulus);
    return ring;
}

std::shared_ptr<const ExtensionRing> ExtensionRing::make_cyclotomic(FieldPtr field, int k) {
    if (k != 1 && k != 2 && k != 3 && k != 4 && k != 6)
        throw std::domain_error("cyclotomic adjunction supports k in {1,2,3,4,6}");
    RationalPoly phi = cyclotomic(k);
    // For k in {3,4,6}, Phi_k is quadratic with no real roots, so it has no
    // root in the totally real F and irreducibility needs no search.
    auto ring = std::shared_ptr<ExtensionRing>(new ExtensionRing());
    ring->field_ = std::move(field);
    ring->modulus_ = fp_from_rational_poly(ring->field_, phi);
    if (fp_degree(ring->modulus_) < 1) throw std::logic_error("bad cyclotomic modulus");
    return ring;
}

ExtensionElement::ExtensionElement(ExtRingPtr ring, FPoly coords) : ring_(std::move(ring)) {
    c_ = fp_divmod(std::move(coords), ring_->modulus()).second;
}

FieldElement ExtensionElement::coord(int i) const {
    if (i >= 0 && i < (int)c_.size()) return c_[i];
    return ring_->field()->zero();
}

bool ExtensionElement::is_zero() const { return fp_degree(c_) < 0; }

bool ExtensionElement::lies_in_field() const { return fp_degree(c_) <= 0; }

FieldElement ExtensionElement::field_value() const {
    if (!lies_in_field()) throw std::domain_error("element does not lie in the base field");
    return coord(0);
}

ExtensionElement ExtensionElement::operator+(const ExtensionElement& o) const {
    return ExtensionElement(ring_, fp_add(c_, o.c_));
}
ExtensionElement ExtensionElement::operator-(const ExtensionElement& o) const {
    return ExtensionElement(ring_, fp_sub(c_, o.c_));
}
ExtensionElement ExtensionElement::operator-() const {
    return ExtensionElement(ring_, fp_scale(c_, ring_->field()->from_rational(-1)));
}
ExtensionElement ExtensionElement::operator*(const ExtensionElement& o) const {
    return ExtensionElement(ring_, fp_mul(c_, o.c_));
}

ExtensionElement ExtensionElement::inverse() const {
    if (is_zero()) throw ZeroElement("inverse of zero extension element");
    // Extended Euclid in F[t]: u*c + v*m = gcd = nonzero constant.
    FPoly r0 = ring_->modulus(), r1 = c_;
    FieldPtr f = ring_->field();
    FPoly s0 = {}, s1 = {f->one()};  // coefficients of c_ in the Bezout identity
    while (fp_degree(r1) > 0) {
        auto [q, r2] = fp_divmod(r0, r1);
        FPoly s2 = fp_sub(s0, fp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (fp_degree(r1) != 0) throw std::logic_error("modulus not irreducible: gcd not constant");
    return ExtensionElement(ring_, fp_scale(s1, r1[0].inverse()));
}

ExtensionElement ExtensionElement::pow(long e) const {
    ExtensionElement base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    ExtensionElement acc = ext_from_field(ring_, ring_->field()->one());
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool ExtensionElement::operator==(const ExtensionElement& o) const {
    return fp_degree(fp_sub(c_, o.c_)) < 0;
}

RationalMatrix ExtensionElement::mul_matrix_over_Q() const {
    int d = ring_->degree_over_field();
    int n = 3 * d;
    RationalMatrix m(n, n);
    FieldPtr f = ring_->field();
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < 3; ++i) {
            // column for basis vector theta^i t^j
            FPoly base(j + 1, f->zero());
            std::array<Rational, 3> cc{Rational(0), Rational(0), Rational(0)};
            cc[i] = 1;
            base[j] = FieldElement(f, cc);
            ExtensionElement prod = *this * ExtensionElement(ring_, base);
            for (int jj = 0; jj < d; ++jj) {
                FieldElement co = prod.coord(jj);
                for (int ii = 0; ii < 3; ++ii) m.at(3 * jj + ii, 3 * j + i) = co.coord(ii);
            }
        }
    return m;
}

std::string ExtensionElement::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? " + " : "") << c_[i].str() << "*t^" << i;
    os << "]";
    return os.str();
}

ExtensionElement ext_from_field(const ExtRingPtr& ring, const FieldElement& x) {
    return ExtensionElement(ring, {x});
}

ExtensionElement ext_generator(const ExtRingPtr& ring) {
    FieldPtr f = ring->field();
    return ExtensionElement(ring, {f->zero(), f->one()});
}

namespace {

// Newton interpolation through (x_i, y_i), exact.
RationalPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    size_t n = xs.size();
    std::vector<Rational> dd = ys;  // divided differences
    for (size_t lvl = 1; lvl < n; ++lvl)
        for (size_t i = n - 1; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
    RationalPoly p, basis = RationalPoly::constant(1);
    for (size_t i = 0; i < n; ++i) {
        p = p + basis * dd[i];
        basis = basis * RationalPoly({-xs[i], Rational(1)});
    }
    return p;
}

RationalPoly charpoly(const RationalMatrix& m) {
    int n = m.rows();
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= n; ++k) {
        Rational x(k);
        RationalMatrix a = m * Rational(-1);
        for (int i = 0; i < n; ++i) a.at(i, i) += x;
        xs.push_back(x);
        ys.push_back(a.det());
    }
    return interpolate(xs, ys);
}

}  // namespace

RationalPoly minpoly_over_Q(const ExtensionElement& z) {
    // char poly of multiplication by z on L over Q equals minpoly^[L:Q(z)]
    // because L is a field; the squarefree part is the minimal polynomial.
    return squarefree_part(charpoly(z.mul_matrix_over_Q()));
}

std::optional<int> is_root_of_unity(const ExtensionElement& z) {
    if (z.is_zero()) throw ZeroElement("is_root_of_unity of zero");
    ExtRingPtr ring = z.ring();
    ExtensionElement one = ext_from_field(ring, ring->field()->one());
    if (z == one) return 1;
    if (z == -one) return 2;
    if (z.lies_in_field() && z.field_value().is_rational()) return std::nullopt;
    int n = ring->degree_over_Q();
    // Power-trace filter: all conjugates of a root of unity lie on the unit
    // circle, so |Tr(z^k)| <= [L:Q].  Exact and cheap relative to charpoly.
    RationalMatrix m = z.mul_matrix_over_Q();
    Rational t1 = 0;
    for (int i = 0; i < n; ++i) t1 += m.at(i, i);
    if (rabs(t1) > n) return std::nullopt;
    RationalMatrix m2 = m * m;
    Rational t2 = 0;
    for (int i = 0; i < n; ++i) t2 += m2.at(i, i);
    if (rabs(t2) > n) return std::nullopt;
    RationalPoly mu = squarefree_part(charpoly(m));
    if (!mu.has_integer_coeffs()) return std::nullopt;
    int d = mu.degree();
    for (int k = 1; k <= 72; ++k) {
        RationalPoly phi = cyclotomic(k);
        if (phi.degree() > 18) continue;
        if (phi.degree() != d) continue;
        if (mu == phi) {
            if (!(z.pow(k) == one)) throw std::logic_error("Kronecker test inconsistency");
            return k;
        }
    }
    return std::nullopt;
}

std::optional<int> is_root_of_unity(const FieldElement& x) {
    if (x.is_zero()) throw ZeroElement("is_root_of_unity of zero");
    // Roots of unity in a totally real field are +-1.
    if (x == x.field()->one()) return 1;
    if (x == -x.field()->one()) return 2;
    return std::nullopt;
}

namespace {

struct Interval3 {
    QInterval v[3];
};

QInterval iv_inverse(const QInterval& a) {
    if (a.contains_zero()) throw std::domain_error("interval inverse through zero");
    return {1 / a.hi, 1 / a.lo};
}

QInterval det3(QInterval m[3][3]) {
    auto mul = [](const QInterval& a, const QInterval& b) { return a * b; };
    QInterval d = mul(m[0][0], mul(m[1][1], m[2][2]) - mul(m[1][2], m[2][1]));
    d = d - mul(m[0][1], mul(m[1][0], m[2][2]) - mul(m[1][2], m[2][0]));
    d = d + mul(m[0][2], mul(m[1][0], m[2][1]) - mul(m[1][1], m[2][0]));
    return d;
}

}  // namespace

FieldRoots roots_in_field(const FPoly& g_in) {
    FPoly g = fp_trim(g_in);
    int dg = fp_degree(g);
    if (dg < 0) throw std::domain_error("roots_in_field: zero polynomial");
    FieldPtr field = g[dg].field();
    const RationalPoly& f = field->defining_poly();
    FieldRoots out;
    out.cofactor = g;
    if (dg == 0) return out;
    if (dg == 1) {
        out.roots.push_back(-(g[0] * g[1].inverse()));
        out.cofactor = {g[1]};
        return out;
    }

    // R(x) = prod_j G(x, theta_j) = Res_y(f(y), G(x, y)), an exact rational
    // polynomial whose real roots include every embedding of every root of g
    // in F.  Computed by evaluation at integer points plus interpolation
    // (valid pointwise because f is monic).
    int degx = 3 * dg;
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= degx + 1; ++k) {
        Rational x0(k);
        // G(x0, y): collapse the x-powers, coefficients in y from the
        // power-basis coordinates of each FieldElement coefficient.
        std::vector<Rational> cy(3, Rational(0));
        Rational xp = 1;
        for (int i = 0; i <= dg; ++i) {
            for (int t = 0; t < 3; ++t) cy[t] += g[i].coord(t) * xp;
            xp *= x0;
        }
        RationalPoly Gy{std::vector<Rational>(cy)};
        xs.push_back(x0);
        ys.push_back(Gy.is_zero() ? Rational(0) : resultant(f, Gy));
    }
    RationalPoly R = interpolate(xs, ys);
    if (R.is_zero()) throw std::logic_error("roots_in_field: vanishing resultant");

    // Reconstruction rounds: precision and denominator bound both grow, the
    // denominator bound doubling twice before giving up.
    const long kPrecBits[3] = {192, 384, 768};
    const long kDenBits[3] = {64, 128, 256};
    std::vector<FieldElement> roots;
    for (int round = 0; round < 3 && roots.size() < (size_t)dg; ++round) {
        Rational eps(1, Integer(1) << kPrecBits[round]);
        Integer denbound = Integer(1) << kDenBits[round];
        auto iso = isolate_real_roots(R, eps);
        // Refine theta intervals and build the interval Vandermonde.
        QInterval th[3];
        QInterval V[3][3];
        for (int j = 0; j < 3; ++j) {
            th[j] = field->root_interval(j + 1, eps);
            V[j][0] = {Rational(1), Rational(1)};
            V[j][1] = th[j];
            V[j][2] = th[j] * th[j];
        }
        QInterval det = det3(V);
        if (det.contains_zero()) continue;
        int nr = (int)iso.size();
        std::vector<QInterval> rho(nr);
        for (int i = 0; i < nr; ++i) rho[i] = {iso[i].first, iso[i].second};
        // Try every assignment of an R-root to each embedding.
        for (int i0 = 0; i0 < nr; ++i0)
            for (int i1 = 0; i1 < nr; ++i1)
                for (int i2 = 0; i2 < nr; ++i2) {
                    int pick[3] = {i0, i1, i2};
                    // Cramer solve V c = rho.
                    std::array<Rational, 3> cand;
                    bool ok = true;
                    for (int col = 0; col < 3 && ok; ++col) {
                        QInterval A[3][3];
                        for (int r = 0; r < 3; ++r)
                            for (int c = 0; c < 3; ++c)
                                A[r][c] = (c == col) ? rho[pick[r]] : V[r][c];
                        QInterval ci = det3(A) * iv_inverse(det);
                        if (ci.width() > Rational(1, Integer(1) << 8)) {
                            ok = false;
                            break;
                        }
                        Rational q = simplest_in_interval(ci.lo, ci.hi);
                        if (q.get_den() > denbound) {
                            ok = false;
                            break;
                        }
                        cand[col] = q;
                    }
                    if (!ok) continue;
                    FieldElement x(field, cand);
                    if (fp_eval(g, x).is_zero()) {
                        bool dup = false;
                        for (const auto& r : roots) dup = dup || r == x;
                        if (!dup) roots.push_back(x);
                    }
                }
    }

    // Divide out each verified root to full multiplicity.
    FPoly cof = g;
    for (const auto& r : roots) {
        FPoly lin = {-r, field->one()};
        while (true) {
            auto [q, rem] = fp_divmod(cof, lin);
            if (fp_degree(rem) >= 0) break;
            cof = q;
            out.roots.push_back(r);
            if (fp_degree(cof) < 1) break;
        }
    }
    // Report each distinct root once.
    std::vector<FieldElement> uniq;
    for (const auto& r : out.roots) {
        bool dup = false;
        for (const auto& u : uniq) dup = dup || u == r;
        if (!dup) uniq.push_back(r);
    }
    out.roots = uniq;
    out.cofactor = cof;
    return out;
}

}  // namespace rm3
