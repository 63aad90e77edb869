#pragma once

#include "rm3/rational.hpp"

#include <vector>

namespace rm3 {

// Dense matrix over Q.  Problem sizes in this project are tiny (<= ~12 in
// either dimension), so everything is simple dense arithmetic.
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return e_[i * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[i * cols_ + j]; }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rational& q) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix transpose() const;

    bool is_integral() const;
    Rational det() const;
    int rank() const;
    RationalMatrix inverse() const;  // throws on singular

    // Solves x * (*this) = rhs for a row vector x; empty optional if the
    // system is inconsistent (matrix need not be square).
    std::vector<Rational> solve_left(const std::vector<Rational>& rhs) const;

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

RationalMatrix mat_from_rows(const std::vector<std::vector<Rational>>& rows);

// Row Hermite normal form of an integral matrix: H = U * M with U unimodular,
// H in row echelon form with positive pivots and entries above each pivot
// reduced into [0, pivot).  Zero rows sink to the bottom.
struct HnfResult {
    RationalMatrix h, u;
};
HnfResult hnf(const RationalMatrix& m);

// Smith normal form invariants d_1 | d_2 | ... of an integral matrix
// (nonnegative, zeros trailing).
std::vector<Integer> smith_invariants(const RationalMatrix& m);

// Full Smith decomposition u * m * v = d for integral m, u and v unimodular.
struct SmithResult {
    RationalMatrix u, d, v;
};
SmithResult smith_form(const RationalMatrix& m);

// Row basis of the lattice {x in Q^n : M x in Z^m} for M with full column
// rank (throws otherwise, since the solution set would contain a line).
RationalMatrix preimage_lattice(const RationalMatrix& m);

}  // namespace rm3
