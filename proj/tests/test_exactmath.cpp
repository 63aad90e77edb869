#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rm3/linprog.hpp"
#include "rm3/matrix.hpp"
#include "rm3/poly.hpp"

#include <random>

using namespace rm3;

namespace {

RationalMatrix random_int_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("hnf identity and diagonal fixed points") {
    RationalMatrix id = RationalMatrix::identity(3);
    auto r = hnf(id);
    CHECK(r.h == id);
    CHECK(r.u == id);

    RationalMatrix d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 3;
    auto r2 = hnf(d);
    CHECK(r2.h == d);
    CHECK(r2.u == RationalMatrix::identity(2));
}

TEST_CASE("hnf preserves determinant up to sign") {
    // [[2,4],[1,3]]: det 2, so |det H| = 2.
    RationalMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 1;
    m.at(1, 1) = 3;
    auto r = hnf(m);
    CHECK(rabs(r.h.det()) == 2);
    CHECK(r.h == r.u * m);
    CHECK(rabs(r.u.det()) == 1);
    // echelon with positive pivots, reduced above
    CHECK(r.h.at(1, 0) == 0);
    CHECK(r.h.at(0, 0) > 0);
    CHECK(r.h.at(1, 1) > 0);
}

TEST_CASE("hnf random: H = U*M, U unimodular") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        int rows = 1 + iter % 4, cols = 1 + (iter / 2) % 4;
        RationalMatrix m = random_int_matrix(rng, rows, cols, -9, 9);
        auto r = hnf(m);
        CHECK(r.h == r.u * m);
        CHECK(rabs(r.u.det()) == 1);
    }
}

TEST_CASE("smith invariants basics") {
    CHECK(smith_invariants(RationalMatrix::identity(3)) == std::vector<Integer>{1, 1, 1});

    RationalMatrix d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 4;
    CHECK(smith_invariants(d) == std::vector<Integer>{2, 4});

    RationalMatrix e(2, 2);
    e.at(0, 0) = 2;
    e.at(1, 1) = 3;
    CHECK(smith_invariants(e) == std::vector<Integer>{1, 6});
}

TEST_CASE("smith invariants multiply to |det| and divide in a chain") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + iter % 3;
        RationalMatrix m = random_int_matrix(rng, n, n, -6, 6);
        Rational det = m.det();
        auto inv = smith_invariants(m);
        Integer prod = 1;
        for (size_t i = 0; i + 1 < inv.size(); ++i)
            if (inv[i + 1] != 0) CHECK(inv[i + 1] % inv[i] == 0);
        for (const auto& d : inv)
            if (d != 0) prod *= d;
        if (det != 0) CHECK(prod == abs(det.get_num()));
        auto s = smith_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(rabs(s.u.det()) == 1);
        CHECK(rabs(s.v.det()) == 1);
    }
}

TEST_CASE("preimage lattice of integer matrix scaled") {
    // M = [[1/2, 0],[0, 1/3]]: {x : Mx integral} = 2Z x 3Z.
    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(1, 2);
    m.at(1, 1) = Rational(1, 3);
    RationalMatrix b = preimage_lattice(m);
    // lattice generated by rows must equal diag(2,3): compare HNFs
    auto h = hnf(b);
    CHECK(h.h.at(0, 0) == 2);
    CHECK(h.h.at(1, 1) == 3);
    CHECK(h.h.at(0, 1) == 0);
}

TEST_CASE("lp_positive_relation examples") {
    auto r1 = lp_positive_relation({{Rational(1), Rational(0)}, {Rational(-1), Rational(0)}});
    REQUIRE(r1.has_value());
    CHECK((*r1)[0] == 1);
    CHECK((*r1)[1] == 1);

    auto r2 = lp_positive_relation({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(!r2.has_value());

    auto r3 = lp_positive_relation({{Rational(1)}, {Rational(-2)}, {Rational(1)}});
    REQUIRE(r3.has_value());
    Rational sum = (*r3)[0] - 2 * (*r3)[1] + (*r3)[2];
    CHECK(sum == 0);
    for (const auto& l : *r3) CHECK(l >= 1);
}

TEST_CASE("lp_positive_relation invariant under permutation, random") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + iter % 4;
        std::vector<QVector> vs(n, QVector(3));
        for (auto& v : vs)
            for (auto& x : v) x = d(rng);
        bool feasible = lp_positive_relation(vs).has_value();
        std::shuffle(vs.begin(), vs.end(), rng);
        CHECK(lp_positive_relation(vs).has_value() == feasible);
        // verify any produced relation exactly
        if (auto l = lp_positive_relation(vs)) {
            for (int j = 0; j < 3; ++j) {
                Rational s = 0;
                for (int k = 0; k < n; ++k) s += (*l)[k] * vs[k][j];
                CHECK(s == 0);
            }
            for (const auto& lam : *l) CHECK(lam >= 1);
        }
    }
}

TEST_CASE("lp_in_cone examples") {
    std::vector<QVector> gens = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    auto w0 = lp_in_cone({Rational(0), Rational(0)}, gens);
    REQUIRE(w0.has_value());
    CHECK((*w0)[0] == 0);
    CHECK((*w0)[1] == 0);

    auto w1 = lp_in_cone({Rational(1), Rational(1)}, gens);
    REQUIRE(w1.has_value());
    CHECK((*w1)[0] == 1);
    CHECK((*w1)[1] == 1);

    CHECK(!lp_in_cone({Rational(-1), Rational(0)}, gens).has_value());
}

TEST_CASE("lp_in_cone succeeds on every generator") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 1 + iter % 5;
        std::vector<QVector> gens(n, QVector(3));
        for (auto& v : gens)
            for (auto& x : v) x = d(rng);
        for (const auto& g : gens) {
            auto w = lp_in_cone(g, gens);
            REQUIRE(w.has_value());
            for (int j = 0; j < 3; ++j) {
                Rational s = 0;
                for (int k = 0; k < n; ++k) s += (*w)[k] * gens[k][j];
                CHECK(s == g[j]);
            }
            for (const auto& a : *w) CHECK(a >= 0);
        }
    }
}

TEST_CASE("lp_in_cone_strict distinguishes boundary from interior") {
    std::vector<QVector> gens = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK(lp_in_cone_strict({Rational(1), Rational(1)}, gens).has_value());
    CHECK(!lp_in_cone_strict({Rational(1), Rational(0)}, gens).has_value());  // on a face
    // lineality: cone is the whole line, every point is interior
    std::vector<QVector> line = {{Rational(1)}, {Rational(-1)}};
    CHECK(lp_in_cone_strict({Rational(0)}, line).has_value());
    CHECK(lp_in_cone_strict({Rational(5)}, line).has_value());
}

TEST_CASE("sturm isolation and cyclotomics") {
    // x^3 + x^2 - 2x - 1 has three real roots (disc 49 field)
    RationalPoly f({Rational(-1), Rational(-2), Rational(1), Rational(1)});
    auto iso = isolate_real_roots(f, Rational(1, 1024));
    REQUIRE(iso.size() == 3);
    for (auto& [a, b] : iso) {
        CHECK(b - a <= Rational(1, 1024));
        CHECK(sgn(f(a)) * sgn(f(b)) < 0);
    }
    CHECK(iso[0].second < iso[1].first);
    CHECK(iso[1].second < iso[2].first);

    CHECK(cyclotomic(1) == RationalPoly({Rational(-1), Rational(1)}));
    CHECK(cyclotomic(3) == RationalPoly({Rational(1), Rational(1), Rational(1)}));
    CHECK(cyclotomic(6) == RationalPoly({Rational(1), Rational(-1), Rational(1)}));
    CHECK(cyclotomic(12).degree() == 4);

    CHECK(discriminant(f) == 49);
    RationalPoly g81({Rational(1), Rational(-3), Rational(0), Rational(1)});
    CHECK(discriminant(g81) == 81);
}

TEST_CASE("simplest rational reconstruction") {
    Rational c(355, 113);
    Rational eps(1, Integer(1) << 40);
    CHECK(simplest_in_interval(c - eps, c + eps) == c);
    CHECK(simplest_in_interval(Rational(-1, 3), Rational(1, 7)) == 0);
    CHECK(simplest_in_interval(Rational(5, 2), Rational(7, 2)) == 3);
}
