#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "trinity/integer.hpp"

namespace trinity {

// Dense integer matrix, row-major. Sized for desk-scale lattice work
// (a few dozen rows/columns), not for sparse or large problems.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Integer& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Integer& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Integer> column(int c) const {
        std::vector<Integer> v(rows_);
        for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void negate_col(int j) {
        for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
    }
    // col j += k * col i
    void addmul_col(int j, const Integer& k, int i) {
        if (k == 0) return;
        for (int r = 0; r < rows_; ++r) at(r, j) += k * at(r, i);
    }
    // row j += k * row i
    void addmul_row(int j, const Integer& k, int i) {
        if (k == 0) return;
        for (int c = 0; c < cols_; ++c) at(j, c) += k * at(i, c);
    }

    std::vector<Integer> mul(const std::vector<Integer>& x) const {
        assert(static_cast<int>(x.size()) == cols_);
        std::vector<Integer> y(rows_);
        for (int r = 0; r < rows_; ++r) {
            Integer s = 0;
            for (int c = 0; c < cols_; ++c) s += at(r, c) * x[c];
            y[r] = s;
        }
        return y;
    }

    IntMatrix mul(const IntMatrix& b) const {
        assert(cols_ == b.rows_);
        IntMatrix y(rows_, b.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                if (at(r, k) == 0) continue;
                for (int c = 0; c < b.cols_; ++c) y.at(r, c) += at(r, k) * b.at(k, c);
            }
        return y;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_, cols_;
    std::vector<Integer> a_;
};

// Column echelon form over Z: H = A * Q with Q unimodular, pivot rows strictly
// increasing and, right of each pivot, zeros in the pivot row. Enough structure
// to decide membership in the column lattice and to solve A x = b over Z.
struct ColEchelon {
    IntMatrix h;
    IntMatrix q;
    std::vector<std::pair<int, int>> pivots; // (row, col), rows increasing
    int rank = 0;
};

inline ColEchelon column_echelon(IntMatrix a) {
    const int rows = a.rows(), cols = a.cols();
    ColEchelon e;
    e.q = IntMatrix::identity(cols);
    int c = 0;
    for (int r = 0; r < rows && c < cols; ++r) {
        // gcd the row-r entries of columns >= c into column c
        for (;;) {
            int best = -1;
            for (int j = c; j < cols; ++j) {
                if (a.at(r, j) == 0) continue;
                if (best < 0 || abs(a.at(r, j)) < abs(a.at(r, best))) best = j;
            }
            if (best < 0) break;
            a.swap_cols(c, best);
            e.q.swap_cols(c, best);
            bool clean = true;
            for (int j = c + 1; j < cols; ++j) {
                if (a.at(r, j) == 0) continue;
                Integer t = -floor_div(a.at(r, j), a.at(r, c));
                a.addmul_col(j, t, c);
                e.q.addmul_col(j, t, c);
                if (a.at(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a.at(r, c) != 0) {
            if (a.at(r, c) < 0) {
                a.negate_col(c);
                e.q.negate_col(c);
            }
            e.pivots.emplace_back(r, c);
            ++c;
        }
    }
    e.rank = c;
    e.h = std::move(a);
    return e;
}

// Coefficients mu with H * mu = b, using only pivot columns. Works because in
// each pivot row every column right of the pivot is zero.
inline std::optional<std::vector<Integer>> echelon_solve(const ColEchelon& e, std::vector<Integer> b) {
    assert(static_cast<int>(b.size()) == e.h.rows());
    std::vector<Integer> mu(e.h.cols(), 0);
    for (auto [r, c] : e.pivots) {
        const Integer& p = e.h.at(r, c);
        if (b[r] % p != 0) return std::nullopt;
        Integer t = b[r] / p;
        if (t != 0) {
            for (int i = 0; i < e.h.rows(); ++i) b[i] -= t * e.h.at(i, c);
        }
        mu[c] = t;
    }
    for (const Integer& v : b)
        if (v != 0) return std::nullopt;
    return mu;
}

inline bool lattice_contains(const ColEchelon& e, const std::vector<Integer>& b) {
    return echelon_solve(e, b).has_value();
}

// Some x with A x = b over Z (x = Q * mu), or nullopt.
inline std::optional<std::vector<Integer>> lattice_solve(const ColEchelon& e, const std::vector<Integer>& b) {
    auto mu = echelon_solve(e, b);
    if (!mu) return std::nullopt;
    return e.q.mul(*mu);
}

// Smith normal form U A W = S with unimodular U, W and their inverses.
// diag holds min(rows, cols) entries, nonnegative, each dividing the next,
// zeros trailing.
struct SmithForm {
    std::vector<Integer> diag;
    IntMatrix u, uinv;
    IntMatrix w, winv;
    int rank = 0;
};

inline SmithForm smith_normal_form(IntMatrix a) {
    const int rows = a.rows(), cols = a.cols();
    SmithForm s;
    s.u = IntMatrix::identity(rows);
    s.uinv = IntMatrix::identity(rows);
    s.w = IntMatrix::identity(cols);
    s.winv = IntMatrix::identity(cols);

    auto row_swap = [&](int i, int j) {
        a.swap_rows(i, j);
        s.u.swap_rows(i, j);
        s.uinv.swap_cols(i, j);
    };
    auto col_swap = [&](int i, int j) {
        a.swap_cols(i, j);
        s.w.swap_cols(i, j);
        s.winv.swap_rows(i, j);
    };
    auto row_addmul = [&](int j, const Integer& k, int i) { // row j += k*row i
        a.addmul_row(j, k, i);
        s.u.addmul_row(j, k, i);
        s.uinv.addmul_col(i, -k, j);
    };
    auto col_addmul = [&](int j, const Integer& k, int i) { // col j += k*col i
        a.addmul_col(j, k, i);
        s.w.addmul_col(j, k, i);
        s.winv.addmul_row(i, -k, j);
    };
    auto row_negate = [&](int i) {
        a.negate_row(i);
        s.u.negate_row(i);
        s.uinv.negate_col(i);
    };

    const int nd = std::min(rows, cols);
    int k = 0;
    for (; k < nd; ++k) {
        // pick the smallest nonzero entry in the trailing block as pivot
        int pr = -1, pc = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                if (a.at(i, j) == 0) continue;
                if (pr < 0 || abs(a.at(i, j)) < abs(a.at(pr, pc))) { pr = i; pc = j; }
            }
        if (pr < 0) break;
        row_swap(k, pr);
        col_swap(k, pc);
        for (;;) {
            bool dirty = false;
            for (int i = k + 1; i < rows; ++i) {
                if (a.at(i, k) == 0) continue;
                Integer t = -floor_div(a.at(i, k), a.at(k, k));
                row_addmul(i, t, k);
                if (a.at(i, k) != 0) { row_swap(k, i); dirty = true; }
            }
            for (int j = k + 1; j < cols; ++j) {
                if (a.at(k, j) == 0) continue;
                Integer t = -floor_div(a.at(k, j), a.at(k, k));
                col_addmul(j, t, k);
                if (a.at(k, j) != 0) { col_swap(k, j); dirty = true; }
            }
            if (!dirty) break;
        }
        if (a.at(k, k) < 0) row_negate(k);
    }
    s.rank = k;

    // enforce the divisibility chain
    for (int i = 0; i + 1 < s.rank; ++i) {
        for (int j = i + 1; j < s.rank; ++j) {
            if (a.at(j, j) % a.at(i, i) == 0) continue;
            // fold entry (j,j) into column i, then re-clear the 2x2 block
            col_addmul(i, 1, j);
            for (;;) {
                bool dirty = false;
                if (a.at(j, i) != 0) {
                    if (abs(a.at(j, i)) < abs(a.at(i, i))) { row_swap(i, j); dirty = true; }
                    Integer t = -floor_div(a.at(j, i), a.at(i, i));
                    if (t != 0) { row_addmul(j, t, i); dirty = true; }
                    if (a.at(j, i) != 0) { row_swap(i, j); dirty = true; }
                }
                if (a.at(i, j) != 0) {
                    Integer t = -floor_div(a.at(i, j), a.at(i, i));
                    if (t != 0) { col_addmul(j, t, i); dirty = true; }
                    if (a.at(i, j) != 0) { col_swap(i, j); dirty = true; }
                }
                if (!dirty) break;
            }
            if (a.at(i, i) < 0) row_negate(i);
            if (a.at(j, j) < 0) row_negate(j);
        }
    }

    s.diag.resize(nd);
    for (int i = 0; i < nd; ++i) s.diag[i] = a.at(i, i);
    return s;
}

// Fraction-free (Bareiss) determinant; independent of the SNF route.
inline Integer det_bareiss(IntMatrix a) {
    assert(a.rows() == a.cols());
    const int n = a.rows();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev; // exact by Sylvester's identity
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

} // namespace trinity
