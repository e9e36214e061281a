#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tfpm/checked.hpp"

// Exact integer linear algebra: Hermite normal form, rank, kernel lattices
// and integer linear solves.  Everything is deterministic; no floating point.

namespace tfpm {

using Vec = std::vector<Int>;

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> entries;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c, 0) {}

    Int& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    Int at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

    Vec row(int r) const {
        return Vec(entries.begin() + static_cast<size_t>(r) * cols,
                   entries.begin() + static_cast<size_t>(r + 1) * cols);
    }
    void set_row(int r, const Vec& v) {
        for (int j = 0; j < cols; ++j) at(r, j) = v[j];
    }
    Vec col(int c) const {
        Vec v(rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, c);
        return v;
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix from_rows(const std::vector<Vec>& rs, int ncols) {
        IntMatrix m(static_cast<int>(rs.size()), ncols);
        for (size_t i = 0; i < rs.size(); ++i) m.set_row(static_cast<int>(i), rs[i]);
        return m;
    }
    static IntMatrix from_cols(const std::vector<Vec>& cs, int nrows) {
        IntMatrix m(nrows, static_cast<int>(cs.size()));
        for (size_t j = 0; j < cs.size(); ++j)
            for (int i = 0; i < nrows; ++i) m.at(i, static_cast<int>(j)) = cs[j][i];
        return m;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
};

struct LatticeBasis {
    int ambient_dim = 0;
    std::vector<Vec> generators;  // linearly independent after canonicalization
};

Vec mat_vec(const IntMatrix& a, const Vec& x);
Vec vec_mat(const Vec& x, const IntMatrix& a);  // x^T A
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// Row-style Hermite normal form: H = U*A with U unimodular, pivot entries
// positive, entries above each pivot reduced into [0, pivot).
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
    int rank = 0;
    std::vector<int> pivot_cols;
};
HnfResult hnf(const IntMatrix& a);

// Rank over the rationals via fraction-free elimination.
int rank(const IntMatrix& a);

// Z-basis of { v : A v = 0 }, canonicalized to the HNF of the generator
// matrix.  The returned lattice is saturated (it is the full integer kernel).
LatticeBasis kernel_lattice(const IntMatrix& a);

// Some integer solution of A x = b, if one exists.
std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b);

// |det U| for square U, fraction-free.  Used by tests and unimodularity checks.
Int determinant(const IntMatrix& a);

// content (gcd of entries); 0 for the zero vector
Int content(const Vec& v);
// divide by content, making the vector primitive (zero vector unchanged)
void make_primitive(Vec& v);

inline void negate(Vec& v) {
    for (auto& e : v) e = -e;
}
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Int dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

}  // namespace tfpm
