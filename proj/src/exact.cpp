#include "tfpm/exact.hpp"

#include <algorithm>
#include <cstdlib>

namespace tfpm {

Vec mat_vec(const IntMatrix& a, const Vec& x) {
    if (static_cast<int>(x.size()) != a.cols) throw std::runtime_error("mat_vec: dimension mismatch");
    Vec r(a.rows, 0);
    for (int i = 0; i < a.rows; ++i) {
        Int s = 0;
        const Int* row = &a.entries[static_cast<size_t>(i) * a.cols];
        for (int j = 0; j < a.cols; ++j)
            if (row[j] != 0) s = checked_addmul(s, row[j], x[j]);
        r[i] = s;
    }
    return r;
}

Vec vec_mat(const Vec& x, const IntMatrix& a) {
    if (static_cast<int>(x.size()) != a.rows) throw std::runtime_error("vec_mat: dimension mismatch");
    Vec r(a.cols, 0);
    for (int i = 0; i < a.rows; ++i) {
        if (x[i] == 0) continue;
        const Int* row = &a.entries[static_cast<size_t>(i) * a.cols];
        for (int j = 0; j < a.cols; ++j)
            if (row[j] != 0) r[j] = checked_addmul(r[j], x[i], row[j]);
    }
    return r;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::runtime_error("mat_mul: dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            Int v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b.at(k, j) != 0) c.at(i, j) = checked_addmul(c.at(i, j), v, b.at(k, j));
        }
    return c;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s = checked_addmul(s, a[i], b[i]);
    return s;
}

bool is_zero(const Vec& v) {
    for (Int e : v)
        if (e != 0) return false;
    return true;
}

Int content(const Vec& v) {
    Int g = 0;
    for (Int e : v) g = gcd_int(g, e);
    return g;
}

void make_primitive(Vec& v) {
    Int g = content(v);
    if (g > 1)
        for (auto& e : v) e /= g;
}

namespace {

void row_axpy(IntMatrix& m, int dst, int src, Int f) {
    // row[dst] += f * row[src]
    if (f == 0) return;
    for (int j = 0; j < m.cols; ++j)
        m.at(dst, j) = checked_addmul(m.at(dst, j), f, m.at(src, j));
}

void row_swap(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void row_negate(IntMatrix& m, int r) {
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
    HnfResult res;
    res.h = a;
    res.u = IntMatrix::identity(a.rows);
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;

    int pivot_row = 0;
    for (int col = 0; col < a.cols && pivot_row < a.rows; ++col) {
        // Euclid within the column until a single nonzero remains at/below
        // pivot_row.  Pivot choice: smallest absolute value, lowest row index.
        for (;;) {
            int best = -1;
            for (int i = pivot_row; i < h.rows; ++i) {
                Int v = h.at(i, col);
                if (v == 0) continue;
                if (best < 0 || std::llabs(v) < std::llabs(h.at(best, col))) best = i;
            }
            if (best < 0) break;  // column is zero below pivot_row
            row_swap(h, pivot_row, best);
            row_swap(u, pivot_row, best);
            Int p = h.at(pivot_row, col);
            bool cleared = true;
            for (int i = pivot_row + 1; i < h.rows; ++i) {
                Int v = h.at(i, col);
                if (v == 0) continue;
                Int q = v / p;
                // round toward a remainder in (-|p|, |p|); any works for Euclid
                row_axpy(h, i, pivot_row, -q);
                row_axpy(u, i, pivot_row, -q);
                if (h.at(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(pivot_row, col) == 0) continue;
        if (h.at(pivot_row, col) < 0) {
            row_negate(h, pivot_row);
            row_negate(u, pivot_row);
        }
        // reduce entries above the pivot into [0, pivot)
        Int p = h.at(pivot_row, col);
        for (int i = 0; i < pivot_row; ++i) {
            Int v = h.at(i, col);
            Int q = v >= 0 ? v / p : -((-v + p - 1) / p);
            row_axpy(h, i, pivot_row, -q);
            row_axpy(u, i, pivot_row, -q);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

namespace {

using I128 = __int128;

Int to_int_checked(I128 v) {
    if (v > I128(INT64_MAX) || v < I128(INT64_MIN)) throw overflow_error("128-bit overflow narrowing");
    return static_cast<Int>(v);
}

// Bareiss fraction-free elimination; returns (rank, +/- last pivot for square
// full-rank input).  Works on a copy in 128-bit to keep intermediates exact.
std::pair<int, I128> bareiss(const IntMatrix& a) {
    int m = a.rows, n = a.cols;
    std::vector<I128> w(a.entries.begin(), a.entries.end());
    auto at = [&](int i, int j) -> I128& { return w[static_cast<size_t>(i) * n + j]; };
    I128 prev = 1;
    int r = 0;
    int sign = 1;
    for (int col = 0; col < n && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(r, j));
            sign = -sign;
        }
        I128 p = at(r, col);
        for (int i = r + 1; i < m; ++i) {
            I128 f = at(i, col);
            for (int j = 0; j < n; ++j) {
                I128 num = at(i, j) * p - f * at(r, j);
                if (num % prev != 0) throw std::runtime_error("bareiss: inexact division");
                at(i, j) = num / prev;
            }
        }
        prev = p;
        ++r;
    }
    return {r, sign * prev};
}

}  // namespace

int rank(const IntMatrix& a) { return bareiss(a).first; }

Int determinant(const IntMatrix& a) {
    if (a.rows != a.cols) throw std::runtime_error("determinant: matrix not square");
    if (a.rows == 0) return 1;
    auto [r, d] = bareiss(a);
    if (r < a.rows) return 0;
    return to_int_checked(d);
}

LatticeBasis kernel_lattice(const IntMatrix& a) {
    // HNF of [A^T | I]: rows whose A^T-part vanished carry kernel vectors of A.
    IntMatrix at = a.transposed();
    IntMatrix ext(at.rows, at.cols + at.rows);
    for (int i = 0; i < at.rows; ++i) {
        for (int j = 0; j < at.cols; ++j) ext.at(i, j) = at.at(i, j);
        ext.at(i, at.cols + i) = 1;
    }
    HnfResult hr = hnf(ext);
    std::vector<Vec> gens;
    for (int i = 0; i < hr.h.rows; ++i) {
        bool left_zero = true;
        for (int j = 0; j < at.cols && left_zero; ++j)
            if (hr.h.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        Vec v(at.rows);
        for (int j = 0; j < at.rows; ++j) v[j] = hr.h.at(i, at.cols + j);
        if (!is_zero(v)) gens.push_back(std::move(v));
    }
    // canonical form: HNF of the generator matrix
    LatticeBasis basis;
    basis.ambient_dim = a.cols;
    if (!gens.empty()) {
        HnfResult canon = hnf(IntMatrix::from_rows(gens, a.cols));
        for (int i = 0; i < canon.rank; ++i) basis.generators.push_back(canon.h.row(i));
    }
    return basis;
}

std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows) throw std::runtime_error("solve_integer: dimension mismatch");
    // x^T A^T = b^T: with H = U A^T, solve d H = b by forward substitution,
    // then x = d U.
    HnfResult hr = hnf(a.transposed());
    const IntMatrix& h = hr.h;
    Vec d(h.rows, 0);
    Vec rem = b;
    for (int i = 0; i < hr.rank; ++i) {
        int pc = hr.pivot_cols[i];
        Int p = h.at(i, pc);
        if (rem[pc] % p != 0) return std::nullopt;
        Int f = rem[pc] / p;
        d[i] = f;
        if (f != 0)
            for (int j = 0; j < h.cols; ++j) rem[j] = checked_sub(rem[j], checked_mul(f, h.at(i, j)));
    }
    if (!is_zero(rem)) return std::nullopt;
    return vec_mat(d, hr.u);
}

}  // namespace tfpm
