#include "tfpm/simplex.hpp"

#include <numeric>
#include <vector>

namespace tfpm {

namespace {

using I128 = __int128;

I128 gcd128(I128 a, I128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Frac {
    I128 num = 0;
    I128 den = 1;

    Frac() = default;
    Frac(I128 n) : num(n), den(1) {}
    Frac(I128 n, I128 d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        I128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (den == 0) throw std::runtime_error("zero denominator");
    }
    bool is_zero() const { return num == 0; }
    bool positive() const { return num > 0; }
    bool negative() const { return num < 0; }
};

Frac operator+(const Frac& a, const Frac& b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
Frac operator-(const Frac& a, const Frac& b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
Frac operator*(const Frac& a, const Frac& b) { return Frac(a.num * b.num, a.den * b.den); }
Frac operator/(const Frac& a, const Frac& b) {
    if (b.num == 0) throw std::runtime_error("division by zero fraction");
    return Frac(a.num * b.den, a.den * b.num);
}
bool operator<(const Frac& a, const Frac& b) { return (a - b).negative(); }
bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }

}  // namespace

std::optional<Vec> nonneg_rational_solution_scaled(const IntMatrix& m, const Vec& b) {
    const int rows = m.rows, n = m.cols;
    // phase-1 tableau: columns y (n) + artificials (rows), objective = sum of artificials
    std::vector<std::vector<Frac>> t(rows, std::vector<Frac>(n + rows + 1));
    for (int i = 0; i < rows; ++i) {
        int s = b[i] >= 0 ? 1 : -1;
        for (int j = 0; j < n; ++j) t[i][j] = Frac(s * m.at(i, j));
        t[i][n + i] = Frac(1);
        t[i][n + rows] = Frac(s * b[i]);
    }
    std::vector<int> basis(rows);
    for (int i = 0; i < rows; ++i) basis[i] = n + i;

    auto objective_coeff = [&](int col) {
        // reduced cost of column under objective = sum of artificial rows
        Frac c = col >= n && col < n + rows ? Frac(1) : Frac(0);
        for (int i = 0; i < rows; ++i)
            if (basis[i] >= n) c = c - t[i][col];
        return c;
    };

    for (;;) {
        // Bland's rule: smallest-index entering column with negative reduced cost
        int enter = -1;
        for (int j = 0; j < n + rows; ++j) {
            if (objective_coeff(j).negative()) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;
        int leave = -1;
        Frac best;
        for (int i = 0; i < rows; ++i) {
            if (!t[i][enter].positive()) continue;
            Frac ratio = t[i][n + rows] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) throw std::runtime_error("phase-1 simplex unbounded");
        Frac piv = t[leave][enter];
        for (int j = 0; j <= n + rows; ++j) t[leave][j] = t[leave][j] / piv;
        for (int i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            Frac f = t[i][enter];
            for (int j = 0; j <= n + rows; ++j) t[i][j] = t[i][j] - f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Frac value(0);
    for (int i = 0; i < rows; ++i)
        if (basis[i] >= n) value = value + t[i][n + rows];
    if (!value.is_zero()) return std::nullopt;

    std::vector<Frac> y(n, Frac(0));
    for (int i = 0; i < rows; ++i)
        if (basis[i] < n) y[basis[i]] = t[i][n + rows];
    I128 lcm = 1;
    for (const auto& f : y) lcm = lcm / gcd128(lcm, f.den) * f.den;
    Vec out(n);
    for (int j = 0; j < n; ++j) {
        I128 v = y[j].num * (lcm / y[j].den);
        if (v > I128(INT64_MAX) || v < I128(INT64_MIN)) throw overflow_error("grading overflow");
        out[j] = static_cast<Int>(v);
    }
    if (lcm > I128(INT64_MAX)) throw overflow_error("grading overflow");
    out.push_back(static_cast<Int>(lcm));
    return out;  // y scaled by lcm; last entry is the scale
}

std::optional<Vec> find_positive_grading(const IntMatrix& lattice_rows) {
    const int n = lattice_rows.cols;
    if (lattice_rows.rows == 0) return Vec(n, 1);
    // w = 1 + y with y >= 0 and M(1 + y) = 0
    Vec b(lattice_rows.rows, 0);
    for (int i = 0; i < lattice_rows.rows; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s = checked_add(s, lattice_rows.at(i, j));
        b[i] = -s;
    }
    auto scaled = nonneg_rational_solution_scaled(lattice_rows, b);
    if (!scaled) return std::nullopt;
    Int scale = scaled->back();
    Vec w(n);
    for (int j = 0; j < n; ++j) w[j] = checked_add(checked_mul(scale, 1), (*scaled)[j]);
    Int g = content(w);
    if (g > 1)
        for (auto& e : w) e /= g;
    return w;
}

}  // namespace tfpm
