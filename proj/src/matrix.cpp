#include "rm3/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace rm3 {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("matrix product shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator*(const Rational& q) const {
    RationalMatrix r = *this;
    for (auto& x : r.e_) x *= q;
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("matrix sum shape mismatch");
    RationalMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("matrix diff shape mismatch");
    RationalMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RationalMatrix::is_integral() const {
    for (const auto& x : e_)
        if (!is_integer(x)) return false;
    return true;
}

Rational RationalMatrix::det() const {
    if (rows_ != cols_) throw std::domain_error("det of non-square matrix");
    RationalMatrix a = *this;
    Rational d = 1;
    for (int col = 0; col < cols_; ++col) {
        int piv = -1;
        for (int i = col; i < rows_; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        for (int i = col + 1; i < rows_; ++i) {
            if (a.at(i, col) == 0) continue;
            Rational f = a.at(i, col) / a.at(col, col);
            for (int j = col; j < cols_; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

int RationalMatrix::rank() const {
    RationalMatrix a = *this;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(r, j));
        for (int i = r + 1; i < rows_; ++i) {
            if (a.at(i, col) == 0) continue;
            Rational f = a.at(i, col) / a.at(r, col);
            for (int j = col; j < cols_; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
    int n = rows_;
    RationalMatrix a = *this, inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rational p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rational> RationalMatrix::solve_left(const std::vector<Rational>& rhs) const {
    // x * M = rhs  <=>  M^T x^T = rhs^T; Gaussian elimination on [M^T | rhs].
    if ((int)rhs.size() != cols_) throw std::domain_error("solve_left shape mismatch");
    int n = cols_, m = rows_;
    RationalMatrix a(n, m + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) a.at(i, j) = at(j, i);
        a.at(i, m) = rhs[i];
    }
    std::vector<int> pivot_col(n, -1);
    int r = 0;
    for (int col = 0; col < m && r < n; ++col) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j <= m; ++j) std::swap(a.at(piv, j), a.at(r, j));
        Rational p = a.at(r, col);
        for (int j = col; j <= m; ++j) a.at(r, j) /= p;
        for (int i = 0; i < n; ++i) {
            if (i == r || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (int j = col; j <= m; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_col[r] = col;
        ++r;
    }
    for (int i = r; i < n; ++i)
        if (a.at(i, m) != 0) throw std::domain_error("inconsistent linear system");
    std::vector<Rational> x(m, Rational(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = a.at(i, m);
    return x;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << at(i, j).get_str() << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? ";\n" : "]");
    }
    return os.str();
}

RationalMatrix mat_from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = (int)rows.size();
    int c = r ? (int)rows[0].size() : 0;
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if ((int)rows[i].size() != c) throw std::domain_error("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

HnfResult hnf(const RationalMatrix& m) {
    if (!m.is_integral()) throw std::domain_error("hnf: matrix must be integral");
    int rows = m.rows(), cols = m.cols();
    RationalMatrix h = m, u = RationalMatrix::identity(rows);

    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(h.at(a, j), h.at(b, j));
        for (int j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto row_addmul = [&](int dst, int src, const Rational& f) {
        for (int j = 0; j < cols; ++j) h.at(dst, j) += f * h.at(src, j);
        for (int j = 0; j < rows; ++j) u.at(dst, j) += f * u.at(src, j);
    };
    auto row_negate = [&](int r) {
        for (int j = 0; j < cols; ++j) h.at(r, j) = -h.at(r, j);
        for (int j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
    };

    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        // Euclidean elimination below row r in this column.
        while (true) {
            int best = -1;
            for (int i = r; i < rows; ++i)
                if (h.at(i, col) != 0 &&
                    (best < 0 || rabs(h.at(i, col)) < rabs(h.at(best, col))))
                    best = i;
            if (best < 0) break;
            row_swap(r, best);
            bool cleared = true;
            for (int i = r + 1; i < rows; ++i) {
                if (h.at(i, col) == 0) continue;
                Rational q(floor_div(h.at(i, col).get_num(), h.at(r, col).get_num()));
                row_addmul(i, r, -q);
                if (h.at(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(r, col) == 0) continue;
        if (h.at(r, col) < 0) row_negate(r);
        // Reduce entries above the pivot into [0, pivot).
        for (int i = 0; i < r; ++i) {
            Rational q(floor_div(h.at(i, col).get_num(), h.at(r, col).get_num()));
            if (q != 0) row_addmul(i, r, -q);
        }
        ++r;
    }
    return {h, u};
}

SmithResult smith_form(const RationalMatrix& m) {
    if (!m.is_integral()) throw std::domain_error("smith: matrix must be integral");
    int rows = m.rows(), cols = m.cols();
    RationalMatrix d = m, u = RationalMatrix::identity(rows), v = RationalMatrix::identity(cols);

    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(d.at(a, j), d.at(b, j));
        for (int j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(d.at(i, a), d.at(i, b));
        for (int i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
    };
    auto row_addmul = [&](int dst, int src, const Rational& f) {
        for (int j = 0; j < cols; ++j) d.at(dst, j) += f * d.at(src, j);
        for (int j = 0; j < rows; ++j) u.at(dst, j) += f * u.at(src, j);
    };
    auto col_addmul = [&](int dst, int src, const Rational& f) {
        for (int i = 0; i < rows; ++i) d.at(i, dst) += f * d.at(i, src);
        for (int i = 0; i < cols; ++i) v.at(i, dst) += f * v.at(i, src);
    };

    int n = std::min(rows, cols);
    for (int k = 0; k < n; ++k) {
        // Find the minimal nonzero entry in the trailing block as pivot.
        int pi = -1, pj = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (d.at(i, j) != 0 &&
                    (pi < 0 || rabs(d.at(i, j)) < rabs(d.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        row_swap(k, pi);
        col_swap(k, pj);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = k + 1; i < rows; ++i) {
                if (d.at(i, k) == 0) continue;
                Rational q(floor_div(d.at(i, k).get_num(), d.at(k, k).get_num()));
                row_addmul(i, k, -q);
                if (d.at(i, k) != 0) {
                    row_swap(k, i);
                    dirty = true;
                }
            }
            for (int j = k + 1; j < cols; ++j) {
                if (d.at(k, j) == 0) continue;
                Rational q(floor_div(d.at(k, j).get_num(), d.at(k, k).get_num()));
                col_addmul(j, k, -q);
                if (d.at(k, j) != 0) {
                    col_swap(k, j);
                    dirty = true;
                }
            }
        }
        if (d.at(k, k) < 0) {
            for (int j = 0; j < cols; ++j) d.at(k, j) = -d.at(k, j);
            for (int j = 0; j < rows; ++j) u.at(k, j) = -u.at(k, j);
        }
    }
    // Fix the divisibility chain d_k | d_{k+1}.
    for (bool again = true; again;) {
        again = false;
        for (int k = 0; k + 1 < n; ++k) {
            Integer a = d.at(k, k).get_num(), b = d.at(k + 1, k + 1).get_num();
            if (a == 0 || b == 0 || b % a == 0) continue;
            // Standard trick: gather gcd(a, b) into position k.
            col_addmul(k, k + 1, 1);
            while (d.at(k + 1, k) != 0) {
                Rational q(floor_div(d.at(k, k).get_num(), d.at(k + 1, k).get_num()));
                // Elimination between rows k and k+1 in columns k, k+1.
                row_addmul(k, k + 1, -q);
                row_swap(k, k + 1);
            }
            // Clear the fill-in at (k, k+1).
            if (d.at(k, k + 1) != 0) {
                Rational q = d.at(k, k + 1) / d.at(k, k);
                if (!is_integer(q)) throw std::logic_error("smith: non-integral fill-in");
                col_addmul(k + 1, k, -q);
            }
            if (d.at(k, k) < 0) {
                for (int j = 0; j < cols; ++j) d.at(k, j) = -d.at(k, j);
                for (int j = 0; j < rows; ++j) u.at(k, j) = -u.at(k, j);
            }
            if (d.at(k + 1, k + 1) < 0) {
                for (int j = 0; j < cols; ++j) d.at(k + 1, j) = -d.at(k + 1, j);
                for (int j = 0; j < rows; ++j) u.at(k + 1, j) = -u.at(k + 1, j);
            }
            again = true;
        }
    }
    return {u, d, v};
}

std::vector<Integer> smith_invariants(const RationalMatrix& m) {
    SmithResult s = smith_form(m);
    std::vector<Integer> inv;
    int n = std::min(m.rows(), m.cols());
    for (int k = 0; k < n; ++k) inv.push_back(s.d.at(k, k).get_num());
    return inv;
}

RationalMatrix preimage_lattice(const RationalMatrix& m) {
    int n = m.cols();
    if (m.rank() != n) throw std::domain_error("preimage_lattice: column rank deficient");
    // Clear denominators: M = A / den with A integral; M x in Z^m <=> A x in den Z^m.
    Integer den = 1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < n; ++j) den = lcm(den, m.at(i, j).get_den());
    RationalMatrix a = m * Rational(den);
    SmithResult s = smith_form(a);  // u a v = d
    // A x in den Z^m  <=>  d_i y_i in den Z for y = v^{-1} x.
    RationalMatrix basis(n, n);
    for (int k = 0; k < n; ++k) {
        Rational scale = Rational(den) / s.d.at(k, k);
        for (int i = 0; i < n; ++i) basis.at(k, i) = s.v.at(i, k) * scale;
    }
    return basis;
}

}  // namespace rm3
