#include "rm3/numberfield.hpp"

#include <algorithm>
#include <sstream>

namespace rm3 {

QInterval QInterval::operator*(const QInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

std::shared_ptr<const CubicField> CubicField::make(const RationalPoly& f) {
    if (f.degree() != 3 || !f.is_monic() || !f.has_integer_coeffs())
        throw std::domain_error("make_field: want a monic integer cubic");
    if (!rational_roots(f).empty()) throw NotIrreducible("defining polynomial has a rational root");
    Rational disc = rm3::discriminant(f);
    if (disc <= 0) throw NotTotallyReal("discriminant is not positive");
    auto field = std::shared_ptr<CubicField>(new CubicField());
    field->f_ = f;
    field->disc_ = disc.get_num();
    auto iso = isolate_real_roots(f, Rational(1, 256));
    if (iso.size() != 3) throw NotTotallyReal("fewer than three real roots isolated");
    for (int j = 0; j < 3; ++j) field->roots_[j] = {iso[j].first, iso[j].second};
    return field;
}

QInterval CubicField::root_interval(int j, const Rational& eps) const {
    if (j < 1 || j > 3) throw std::domain_error("embedding index out of range");
    std::lock_guard<std::mutex> lock(refine_mutex_);
    QInterval& iv = roots_[j - 1];
    // Bisection with exact signs; endpoints are never roots (f irreducible).
    int slo = sgn(f_(iv.lo));
    while (iv.width() > eps) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int smid = sgn(f_(mid));
        if (smid == slo) iv.lo = mid;
        else iv.hi = mid;
    }
    return iv;
}

FieldElement CubicField::element(const Rational& c0, const Rational& c1,
                                 const Rational& c2) const {
    return FieldElement(shared_from_this(), {c0, c1, c2});
}
FieldElement CubicField::from_rational(const Rational& q) const { return element(q, 0, 0); }
FieldElement CubicField::zero() const { return element(0, 0, 0); }
FieldElement CubicField::one() const { return element(1, 0, 0); }
FieldElement CubicField::theta() const { return element(0, 1, 0); }

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw std::domain_error("element is not rational");
    return c_[0];
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return FieldElement(field_, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]});
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    return FieldElement(field_, {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]});
}
FieldElement FieldElement::operator-() const {
    return FieldElement(field_, {-c_[0], -c_[1], -c_[2]});
}
FieldElement FieldElement::operator*(const Rational& q) const {
    return FieldElement(field_, {c_[0] * q, c_[1] * q, c_[2] * q});
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    // theta^3 = -a2 theta^2 - a1 theta - a0, theta^4 = theta * theta^3.
    const RationalPoly& f = field_->defining_poly();
    Rational a0 = f.coeff(0), a1 = f.coeff(1), a2 = f.coeff(2);
    Rational t[5] = {c_[0] * o.c_[0],
                     c_[0] * o.c_[1] + c_[1] * o.c_[0],
                     c_[0] * o.c_[2] + c_[1] * o.c_[1] + c_[2] * o.c_[0],
                     c_[1] * o.c_[2] + c_[2] * o.c_[1],
                     c_[2] * o.c_[2]};
    // Reduce degree 4 then 3.
    t[1] -= t[4] * a0;
    t[2] -= t[4] * a1;
    t[3] -= t[4] * a2;
    t[0] -= t[3] * a0;
    t[1] -= t[3] * a1;
    t[2] -= t[3] * a2;
    return FieldElement(field_, {t[0], t[1], t[2]});
}

RationalMatrix FieldElement::mul_matrix() const {
    RationalMatrix m(3, 3);
    FieldElement b = *this;
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) m.at(i, j) = b.c_[i];
        if (j < 2) b = b * field_->theta();
    }
    return m;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw ZeroElement("inverse of zero");
    // Solve M_x y = e0.
    RationalMatrix inv = mul_matrix().inverse();
    return FieldElement(field_, {inv.at(0, 0), inv.at(1, 0), inv.at(2, 0)});
}

FieldElement FieldElement::pow(long e) const {
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    FieldElement acc = field_->one();
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << "(" << c_[0].get_str() << "," << c_[1].get_str() << "," << c_[2].get_str() << ")";
    return os.str();
}

Rational trace(const FieldElement& x) {
    RationalMatrix m = x.mul_matrix();
    return m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
}

Rational norm(const FieldElement& x) { return x.mul_matrix().det(); }

FieldElement qmap(const FieldElement& x) {
    if (x.is_zero()) throw ZeroElement("qmap of zero");
    return x.inverse() * norm(x);
}

int sign_at(const FieldElement& x, int j) {
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sgn(x.coord(0));
    Rational eps(1, Integer(1) << 32);
    while (true) {
        QInterval th = x.field()->root_interval(j, eps);
        QInterval v = th * th * x.coord(2) + th * x.coord(1) + QInterval{x.coord(0), x.coord(0)};
        if (!v.contains_zero()) return v.lo > 0 ? 1 : -1;
        eps = eps * eps;  // double the precision each round
    }
}

bool totally_positive(const FieldElement& x) {
    return sign_at(x, 1) > 0 && sign_at(x, 2) > 0 && sign_at(x, 3) > 0;
}

EmbeddingValue embed(const FieldElement& x, int j, const Rational& eps) {
    Rational delta = eps;
    while (true) {
        QInterval th = x.field()->root_interval(j, delta);
        QInterval v = th * th * x.coord(2) + th * x.coord(1) + QInterval{x.coord(0), x.coord(0)};
        if (v.width() <= eps) return {v, eps};
        delta /= 64;
    }
}

RationalMatrix trace_gram(const std::array<FieldElement, 3>& r) {
    RationalMatrix g(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            g.at(i, j) = trace(r[i] * r[j]);
            g.at(j, i) = g.at(i, j);
        }
    return g;
}

std::array<FieldElement, 3> dual_basis(const std::array<FieldElement, 3>& r) {
    RationalMatrix g = trace_gram(r);
    if (g.det() == 0) throw NotABasis("trace Gram matrix is singular");
    RationalMatrix inv = g.inverse();
    std::array<FieldElement, 3> s;
    for (int i = 0; i < 3; ++i) {
        FieldElement acc = r[0].field()->zero();
        for (int j = 0; j < 3; ++j) acc = acc + r[j] * inv.at(i, j);
        s[i] = acc;
    }
    return s;
}

RationalPoly minpoly_over_Q(const FieldElement& x) {
    if (x.is_rational()) return RationalPoly({-x.coord(0), Rational(1)});
    // Characteristic polynomial of the multiplication matrix; for a cubic
    // field and irrational x this is already the minimal polynomial.
    RationalMatrix m = x.mul_matrix();
    Rational tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
    Rational det = m.det();
    // Sum of principal 2x2 minors.
    Rational e2 = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            e2 += m.at(i, i) * m.at(j, j) - m.at(i, j) * m.at(j, i);
    return RationalPoly({-det, e2, -tr, Rational(1)});
}

}  // namespace rm3
