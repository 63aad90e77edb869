#include "rm3/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rm3 {

RationalPoly RationalPoly::x_power(int n, const Rational& lead) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = lead;
    return RationalPoly(std::move(c));
}

bool RationalPoly::has_integer_coeffs() const {
    for (const auto& q : c_)
        if (!is_integer(q)) return false;
    return true;
}

Rational RationalPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return RationalPoly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator*(const Rational& q) const {
    std::vector<Rational> c = c_;
    for (auto& x : c) x *= q;
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return RationalPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational((long)i);
    return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& d) const {
    if (d.is_zero()) throw std::domain_error("poly division by zero");
    std::vector<Rational> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {RationalPoly(), *this};
    std::vector<Rational> q(degree() - dd + 1, Rational(0));
    for (int i = degree(); i >= dd; --i) {
        if (r[i] == 0) continue;
        Rational f = r[i] / d.c_[dd];
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
    }
    return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / leading());
}

std::string RationalPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        Rational mag = rabs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly f = a, g = b;
    while (!g.is_zero()) {
        RationalPoly r = f.divmod(g).second;
        f = g;
        g = r;
    }
    return f.monic();
}

RationalPoly squarefree_part(const RationalPoly& a) {
    if (a.degree() <= 1) return a.monic();
    return a.divmod(gcd(a, a.derivative())).first.monic();
}

Rational resultant(const RationalPoly& a, const RationalPoly& b) {
    // res(a,b) via the Euclidean remainder sequence:
    // res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * res(b, r).
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.degree() == 0) return rpow(a.leading(), b.degree());
    if (b.degree() == 0) return rpow(b.leading(), a.degree());
    RationalPoly r = a.divmod(b).second;
    Rational sign = (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? -1 : 1;
    if (r.is_zero()) return 0;
    return sign * rpow(b.leading(), a.degree() - r.degree()) * resultant(b, r);
}

Rational discriminant(const RationalPoly& a) {
    int n = a.degree();
    if (n < 1) throw std::domain_error("discriminant of constant");
    Rational res = resultant(a, a.derivative());
    Rational sign = ((long)n * (n - 1) / 2) % 2 == 1 ? -1 : 1;
    return sign * res / a.leading();
}

std::vector<Rational> rational_roots(const RationalPoly& a) {
    std::vector<Rational> out;
    if (a.is_zero()) return out;
    // Clear denominators to an integer polynomial.
    Integer den = 1;
    for (const auto& q : a.coeffs()) den = lcm(den, q.get_den());
    std::vector<Integer> ic;
    for (const auto& q : a.coeffs()) ic.push_back(q.get_num() * (den / q.get_den()));
    size_t lo = 0;
    while (lo < ic.size() && ic[lo] == 0) ++lo;
    if (lo > 0) out.push_back(0);
    if (lo >= ic.size()) return out;
    Integer c0 = ic[lo], cn = ic.back();
    auto divisors = [](Integer n) {
        n = abs(n);
        std::vector<Integer> ds;
        for (Integer d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                ds.push_back(n / d);
            }
        return ds;
    };
    for (const Integer& p : divisors(c0))
        for (const Integer& q : divisors(cn)) {
            Rational cand(p, q);
            cand.canonicalize();
            if (a(cand) == 0) out.push_back(cand);
            if (a(-cand) == 0) out.push_back(-cand);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SturmSequence::SturmSequence(const RationalPoly& f) {
    seq.push_back(f);
    seq.push_back(f.derivative());
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        RationalPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
        seq.push_back(-r);
    }
    if (seq.back().is_zero()) seq.pop_back();
}

int SturmSequence::sign_changes_at(const Rational& x) const {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = sgn(p(x));
        if (s != 0) {
            if (last != 0 && s != last) ++changes;
            last = s;
        }
    }
    return changes;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    return sign_changes_at(a) - sign_changes_at(b);
}

Rational root_bound(const RationalPoly& f) {
    // Cauchy bound 1 + max |a_i / a_n|.
    Rational m = 0;
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, rabs(f.coeff(i) / f.leading()));
    return m + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const RationalPoly& f,
                                                              const Rational& eps) {
    std::vector<std::pair<Rational, Rational>> out;
    if (f.degree() < 1) return out;
    RationalPoly g = squarefree_part(f);
    SturmSequence st(g);
    Rational bound = root_bound(g);

    // Exact roots at interval endpoints would break the open-interval
    // bookkeeping; nudge endpoints off roots by perturbing.
    struct Item {
        Rational a, b;
        int count;
    };
    std::vector<Item> work;
    int total = st.count_roots(-bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        if (it.count == 1 && (it.b - it.a) <= eps) {
            out.push_back({it.a, it.b});
            continue;
        }
        Rational mid = (it.a + it.b) / 2;
        while (g(mid) == 0) mid = (it.a + mid) / 2;  // avoid landing exactly on a root
        int left = st.count_roots(it.a, mid);
        if (left > 0) work.push_back({it.a, mid, left});
        if (it.count - left > 0) work.push_back({mid, it.b, it.count - left});
    }
    std::sort(out.begin(), out.end());
    return out;
}

RationalPoly cyclotomic(int n) {
    static std::map<int, RationalPoly> cache;
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    std::vector<Rational> c(n + 1, Rational(0));
    c[0] = -1;
    c[n] = 1;
    RationalPoly num{std::move(c)};
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = num.divmod(cyclotomic(d)).first;
    cache[n] = num;
    return num;
}

}  // namespace rm3
