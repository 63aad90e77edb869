#include "rm3/linprog.hpp"

#include <stdexcept>

namespace rm3 {
namespace {

// Dense exact simplex, Bland's rule throughout, so termination is
// guaranteed with rational pivots.  Solves max c.x s.t. A x = b, x >= 0.
struct Simplex {
    int m, n;
    // tableau[i] = row of A | b, with basis[i] the basic column of row i.
    std::vector<QVector> tab;
    QVector cost;     // reduced cost row (length n), for the current objective
    Rational obj = 0; // objective value of current basis
    std::vector<int> basis;

    // Callers must pass b >= 0 so the artificial basis is feasible.
    Simplex(const std::vector<QVector>& a, const QVector& b) : m((int)a.size()), n(a.empty() ? 0 : (int)a[0].size()) {
        tab.assign(m, QVector(n + 1, Rational(0)));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) tab[i][j] = a[i][j];
            tab[i][n] = b[i];
        }
        basis.assign(m, -1);
    }

    void pivot(int row, int col) {
        Rational p = tab[row][col];
        for (auto& x : tab[row]) x /= p;
        for (int i = 0; i < m; ++i) {
            if (i == row || tab[i][col] == 0) continue;
            Rational f = tab[i][col];
            for (int j = 0; j <= n; ++j) tab[i][j] -= f * tab[row][j];
        }
        Rational cf = cost[col];
        if (cf != 0) {
            for (int j = 0; j < n; ++j) cost[j] -= cf * tab[row][j];
            obj += cf * tab[row][n];
        }
        basis[row] = col;
    }

    // Maximizes the current cost row.  Returns false on unbounded.
    bool iterate() {
        while (true) {
            int enter = -1;
            for (int j = 0; j < n; ++j)
                if (cost[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (tab[i][enter] <= 0) continue;
                Rational ratio = tab[i][n] / tab[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave]))
                    leave = i, best = ratio;
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

// Returns the optimal solution of max c.x, A x = b, x >= 0, or nullopt if
// infeasible.  Throws on unbounded (callers build bounded programs).
std::optional<std::pair<QVector, Rational>> solve_lp(const std::vector<QVector>& a,
                                                     const QVector& b, const QVector& c) {
    int m = (int)a.size();
    int n = m ? (int)a[0].size() : 0;
    // Normalize to b >= 0, then add artificial variables n..n+m-1.
    std::vector<QVector> a1(m, QVector(n + m, Rational(0)));
    QVector b1 = b;
    for (int i = 0; i < m; ++i) {
        Rational s = b1[i] < 0 ? -1 : 1;
        b1[i] *= s;
        for (int j = 0; j < n; ++j) a1[i][j] = s * a[i][j];
        a1[i][n + i] = 1;
    }
    Simplex s(a1, b1);
    s.cost.assign(n + m, Rational(0));
    // minimize sum of artificials == maximize -sum; express via reduced costs.
    for (int i = 0; i < s.m; ++i) {
        s.basis[i] = n + i;
        for (int j = 0; j < n; ++j) s.cost[j] += s.tab[i][j];
        s.obj -= s.tab[i][s.n];
    }
    if (!s.iterate()) throw std::logic_error("phase-1 unbounded");
    if (s.obj != 0) return std::nullopt;  // infeasible
    // Drive any artificial still in the basis out (degenerate rows).
    for (int i = 0; i < s.m; ++i) {
        if (s.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (s.tab[i][j] != 0) {
                col = j;
                break;
            }
        if (col >= 0) {
            s.cost.assign(s.n, Rational(0));
            s.obj = 0;
            s.pivot(i, col);
        }
    }
    // Any artificial still basic sits in an all-zero redundant row; delete
    // those rows and the artificial columns, otherwise later pivots could
    // silently push an artificial back to a nonzero value.
    {
        std::vector<QVector> tab2;
        std::vector<int> basis2;
        for (int i = 0; i < s.m; ++i) {
            if (s.basis[i] >= n) {
                if (s.tab[i][s.n] != 0) throw std::logic_error("redundant row with nonzero rhs");
                continue;
            }
            QVector row(n + 1);
            for (int j = 0; j < n; ++j) row[j] = s.tab[i][j];
            row[n] = s.tab[i][s.n];
            tab2.push_back(std::move(row));
            basis2.push_back(s.basis[i]);
        }
        s.tab = std::move(tab2);
        s.basis = std::move(basis2);
        s.m = (int)s.tab.size();
        s.n = n;
    }
    // Phase 2: price the true objective in the current basis and optimize.
    s.cost = c;
    s.obj = 0;
    for (int i = 0; i < s.m; ++i) {
        Rational f = s.cost[s.basis[i]];
        if (f == 0) continue;
        for (int j = 0; j < s.n; ++j) s.cost[j] -= f * s.tab[i][j];
        s.obj += f * s.tab[i][s.n];
    }
    if (!s.iterate()) throw std::logic_error("phase-2 unbounded");
    QVector x(n, Rational(0));
    for (int i = 0; i < s.m; ++i) x[s.basis[i]] = s.tab[i][s.n];
    return std::make_pair(x, s.obj);
}

}  // namespace

std::optional<QVector> lp_positive_relation(const std::vector<QVector>& vectors) {
    if (vectors.empty()) throw std::domain_error("lp_positive_relation: empty input");
    int n = (int)vectors.size();
    int d = (int)vectors[0].size();
    for (const auto& v : vectors)
        if ((int)v.size() != d) throw std::domain_error("lp_positive_relation: mixed dimensions");
    // Variables mu_1..mu_n >= 0 and t >= 0 with lambda = mu + t:
    //   sum_k mu_k v_k + t * (sum_k v_k) = 0,  sum_k mu_k + n t = 1,  max t.
    std::vector<QVector> a(d + 1, QVector(n + 1, Rational(0)));
    QVector b(d + 1, Rational(0));
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < n; ++k) {
            a[j][k] = vectors[k][j];
            a[j][n] += vectors[k][j];
        }
    }
    for (int k = 0; k < n; ++k) a[d][k] = 1;
    a[d][n] = n;
    b[d] = 1;
    QVector c(n + 1, Rational(0));
    c[n] = 1;
    auto sol = solve_lp(a, b, c);
    if (!sol || sol->second == 0) return std::nullopt;
    QVector lambda(n);
    Rational mn;
    for (int k = 0; k < n; ++k) {
        lambda[k] = sol->first[k] + sol->first[n];
        if (k == 0 || lambda[k] < mn) mn = lambda[k];
    }
    for (auto& l : lambda) l /= mn;
    // Re-verify by substitution: exact relation, every weight >= 1.
    for (int j = 0; j < d; ++j) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += lambda[k] * vectors[k][j];
        if (s != 0) throw std::logic_error("lp_positive_relation: relation check failed");
    }
    for (const auto& l : lambda)
        if (l < 1) throw std::logic_error("lp_positive_relation: scaling check failed");
    return lambda;
}

std::optional<QVector> lp_in_cone(const QVector& target, const std::vector<QVector>& generators) {
    int n = (int)generators.size();
    int d = (int)target.size();
    std::vector<QVector> a(d, QVector(n, Rational(0)));
    for (int k = 0; k < n; ++k) {
        if ((int)generators[k].size() != d) throw std::domain_error("lp_in_cone: mixed dimensions");
        for (int j = 0; j < d; ++j) a[j][k] = generators[k][j];
    }
    auto sol = solve_lp(a, target, QVector(n, Rational(0)));
    if (!sol) return std::nullopt;
    return sol->first;
}

std::optional<QVector> lp_in_cone_strict(const QVector& target,
                                         const std::vector<QVector>& generators) {
    int n = (int)generators.size();
    if (n == 0) return std::nullopt;
    int d = (int)target.size();
    // alpha = beta + t with beta >= 0, 0 <= t <= 1:
    //   sum_k beta_k g_k + t * (sum g_k) = target, t + slack = 1, max t.
    std::vector<QVector> a(d + 1, QVector(n + 2, Rational(0)));
    QVector b(d + 1, Rational(0));
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < n; ++k) {
            if ((int)generators[k].size() != d)
                throw std::domain_error("lp_in_cone_strict: mixed dimensions");
            a[j][k] = generators[k][j];
            a[j][n] += generators[k][j];
        }
        b[j] = target[j];
    }
    a[d][n] = 1;
    a[d][n + 1] = 1;
    b[d] = 1;
    QVector c(n + 2, Rational(0));
    c[n] = 1;
    auto sol = solve_lp(a, b, c);
    if (!sol || sol->second == 0) return std::nullopt;
    QVector alpha(n);
    for (int k = 0; k < n; ++k) alpha[k] = sol->first[k] + sol->first[n];
    return alpha;
}

}  // namespace rm3
