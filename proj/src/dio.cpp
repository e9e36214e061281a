#include "tfpm/dio.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "tfpm/io.hpp"

namespace tfpm {

DioSystem DioSystem::homogeneous(IntMatrix a_, std::vector<Sign> signs_) {
    DioSystem s;
    s.rhs.assign(a_.rows, 0);
    s.a = std::move(a_);
    s.signs = std::move(signs_);
    return s;
}

DioSystem DioSystem::nonneg_system(IntMatrix a_, Vec rhs_) {
    DioSystem s;
    s.a = std::move(a_);
    s.rhs = std::move(rhs_);
    s.signs.assign(s.a.cols, Sign::nonneg);
    return s;
}

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Internal completion state: columns are the split/extended columns, the last
// one (if present) being -rhs with multiplier capped at 1.
struct Completion {
    std::vector<Vec> cols;  // column vectors of length m
    int ncols = 0;
    bool has_rhs_col = false;

    std::vector<std::vector<int>> minimal;  // found minimal solutions (counts)

    bool dominated(const std::vector<int>& x) const {
        for (const auto& s : minimal) {
            bool ge = true;
            for (size_t i = 0; i < x.size() && ge; ++i)
                if (x[i] < s[i]) ge = false;
            if (ge) return true;
        }
        return false;
    }

    void run() {
        struct Node {
            std::vector<int> x;
            Vec value;
        };
        std::vector<Node> frontier;
        std::unordered_set<std::vector<int>, VecHash> seen;
        const int m = cols.empty() ? 0 : static_cast<int>(cols[0].size());

        auto push = [&](std::vector<int> x, Vec value, std::vector<Node>& out) {
            if (dominated(x)) return;
            if (seen.insert(x).second) out.push_back({std::move(x), std::move(value)});
        };

        for (int j = 0; j < ncols; ++j) {
            std::vector<int> x(ncols, 0);
            x[j] = 1;
            push(std::move(x), cols[j], frontier);
        }
        while (!frontier.empty()) {
            std::vector<Node> next;
            // solutions first, so domination pruning sees the whole level
            for (auto& n : frontier)
                if (is_zero(n.value) && !dominated(n.x)) minimal.push_back(n.x);
            for (auto& n : frontier) {
                if (is_zero(n.value)) continue;
                for (int j = 0; j < ncols; ++j) {
                    if (has_rhs_col && j == ncols - 1 && n.x[j] >= 1) continue;
                    Int ip = 0;
                    for (int i = 0; i < m; ++i)
                        if (n.value[i] != 0 && cols[j][i] != 0)
                            ip = checked_addmul(ip, n.value[i], cols[j][i]);
                    if (ip >= 0) continue;
                    std::vector<int> x = n.x;
                    x[j] += 1;
                    if (dominated(x)) continue;
                    Vec value = add(n.value, cols[j]);
                    push(std::move(x), std::move(value), next);
                }
            }
            frontier = std::move(next);
        }
    }
};

// Build split columns: for each original column j, +A_j (and -A_j when free).
// back_map[k] = (orig column, sign).
struct SplitSystem {
    std::vector<Vec> cols;
    std::vector<std::pair<int, int>> back_map;
};

SplitSystem split_columns(const DioSystem& sys) {
    SplitSystem s;
    for (int j = 0; j < sys.a.cols; ++j) {
        s.cols.push_back(sys.a.col(j));
        s.back_map.emplace_back(j, 1);
        if (sys.signs[j] == Sign::free_sign) {
            Vec neg = sys.a.col(j);
            negate(neg);
            s.cols.push_back(std::move(neg));
            s.back_map.emplace_back(j, -1);
        }
    }
    return s;
}

Vec map_back(const std::vector<int>& x, const SplitSystem& split, int orig_cols) {
    Vec v(orig_cols, 0);
    for (size_t k = 0; k < split.back_map.size(); ++k)
        v[split.back_map[k].first] += split.back_map[k].second * static_cast<Int>(x[k]);
    return v;
}

void sort_dedup(std::vector<Vec>& vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// With free splits, distinct internal solutions can map to comparable vectors;
// re-minimalize on the constrained coordinates.
void minimalize_constrained(std::vector<Vec>& vs, const std::vector<Sign>& signs) {
    bool any_free = std::any_of(signs.begin(), signs.end(),
                                [](Sign s) { return s == Sign::free_sign; });
    if (!any_free) return;
    std::vector<Vec> kept;
    for (const auto& v : vs) {
        bool dom = false;
        for (const auto& u : vs) {
            if (u == v) continue;
            bool le = true, strict = false;
            for (size_t j = 0; j < v.size() && le; ++j) {
                if (signs[j] != Sign::nonneg) continue;
                if (u[j] > v[j]) le = false;
                else if (u[j] < v[j]) strict = true;
            }
            // ties on the constrained part are broken lexicographically
            if (le && (strict || u < v)) { dom = true; break; }
        }
        if (!dom) kept.push_back(v);
    }
    vs = std::move(kept);
}

MinimalSolutionSet run_completion(const DioSystem& sys, bool with_rhs) {
    if (static_cast<int>(sys.rhs.size()) != sys.a.rows) throw std::runtime_error("rhs length mismatch");
    if (static_cast<int>(sys.signs.size()) != sys.a.cols) throw std::runtime_error("sign length mismatch");
    SplitSystem split = split_columns(sys);
    Completion c;
    c.cols = split.cols;
    c.has_rhs_col = with_rhs;
    if (with_rhs) {
        Vec neg_rhs = sys.rhs;
        negate(neg_rhs);
        c.cols.push_back(std::move(neg_rhs));
    }
    c.ncols = static_cast<int>(c.cols.size());
    c.run();

    MinimalSolutionSet out;
    for (const auto& x : c.minimal) {
        bool inhom = with_rhs && x[c.ncols - 1] == 1;
        Vec v = map_back(x, split, sys.a.cols);
        if (!inhom && is_zero(v)) continue;  // cancelling free split, e.g. (x+,x-) = (1,1)
        (inhom ? out.inhomogeneous : out.homogeneous).push_back(std::move(v));
    }
    sort_dedup(out.inhomogeneous);
    sort_dedup(out.homogeneous);
    minimalize_constrained(out.inhomogeneous, sys.signs);
    minimalize_constrained(out.homogeneous, sys.signs);
    return out;
}

bool all_nonneg_matrix(const IntMatrix& a) {
    for (Int e : a.entries)
        if (e < 0) return false;
    return true;
}

bool all_nonneg_signs(const std::vector<Sign>& s) {
    return std::all_of(s.begin(), s.end(), [](Sign x) { return x == Sign::nonneg; });
}

}  // namespace

MinimalSolutionSet minimal_homogeneous(const DioSystem& system) {
    if (!is_zero(system.rhs)) throw std::runtime_error("minimal_homogeneous: rhs must be zero");
    return run_completion(system, false);
}

MinimalSolutionSet minimal_inhomogeneous(const DioSystem& system) {
    if (is_zero(system.rhs)) return run_completion(system, false);
    return run_completion(system, true);
}

bool enumerate_nonneg(const IntMatrix& a, const Vec& b,
                      const std::function<bool(const Vec&)>& visit) {
    if (!all_nonneg_matrix(a)) throw std::runtime_error("enumerate_nonneg: matrix has negative entries");
    const int n = a.cols, m = a.rows;
    for (Int e : b)
        if (e < 0) return true;  // infeasible, nothing to visit
    // column supports and last supported column per row
    std::vector<std::vector<std::pair<int, Int>>> col_support(n);
    std::vector<int> last_col(m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (a.at(i, j) != 0) {
                col_support[j].emplace_back(i, a.at(i, j));
                last_col[i] = j;
            }
    for (int i = 0; i < m; ++i)
        if (last_col[i] < 0 && b[i] != 0) return true;  // zero row, nonzero rhs
    std::vector<std::vector<int>> rows_ending(n);
    for (int i = 0; i < m; ++i)
        if (last_col[i] >= 0) rows_ending[last_col[i]].push_back(i);
    // a column supported by no row would make the solution set infinite
    for (int j = 0; j < n; ++j)
        if (col_support[j].empty()) throw std::runtime_error("enumerate_nonneg: unconstrained column");

    Vec deficit = b;
    Vec x(n, 0);
    bool keep_going = true;

    std::function<void(int)> rec = [&](int j) {
        if (!keep_going) return;
        if (j == n) {
            keep_going = visit(x);
            return;
        }
        Int ub = -1;
        for (auto [r, coef] : col_support[j]) {
            Int cap = deficit[r] / coef;
            if (ub < 0 || cap < ub) ub = cap;
        }
        for (Int v = 0; v <= ub && keep_going; ++v) {
            x[j] = v;
            if (v > 0)
                for (auto [r, coef] : col_support[j]) deficit[r] -= coef;
            bool ok = true;
            for (int r : rows_ending[j])
                if (deficit[r] != 0) { ok = false; break; }
            if (ok) rec(j + 1);
        }
        // restore
        if (ub >= 0 && x[j] > 0)
            for (auto [r, coef] : col_support[j]) deficit[r] += coef * x[j];
        x[j] = 0;
    };
    rec(0);
    return keep_going;
}

std::optional<Vec> feasible_solution(const DioSystem& system) {
    if (all_nonneg_signs(system.signs) && all_nonneg_matrix(system.a)) {
        std::optional<Vec> found;
        enumerate_nonneg(system.a, system.rhs, [&](const Vec& x) {
            found = x;
            return false;
        });
        return found;
    }
    MinimalSolutionSet s = minimal_inhomogeneous(system);
    if (is_zero(system.rhs)) return Vec(system.a.cols, 0);
    if (s.inhomogeneous.empty()) return std::nullopt;
    return s.inhomogeneous.front();
}

void write_dio_files(const std::string& stem, const DioSystem& system) {
    write_mat_file(stem + ".mat", system.a);
    IntMatrix rhs(1, system.a.rows);
    for (int i = 0; i < system.a.rows; ++i) rhs.at(0, i) = system.rhs[i];
    write_mat_file(stem + ".rhs", rhs);
    IntMatrix sign(1, system.a.cols);
    for (int j = 0; j < system.a.cols; ++j)
        sign.at(0, j) = system.signs[j] == Sign::nonneg ? 1 : 0;
    write_mat_file(stem + ".sign", sign);
}

DioSystem read_dio_files(const std::string& stem) {
    DioSystem s;
    s.a = read_mat_file(stem + ".mat");
    IntMatrix rhs = read_mat_file(stem + ".rhs");
    if (rhs.rows != 1 || rhs.cols != s.a.rows) throw std::runtime_error("bad .rhs shape");
    s.rhs = rhs.row(0);
    IntMatrix sign = read_mat_file(stem + ".sign");
    if (sign.rows != 1 || sign.cols != s.a.cols) throw std::runtime_error("bad .sign shape");
    for (int j = 0; j < sign.cols; ++j)
        s.signs.push_back(sign.at(0, j) == 0 ? Sign::free_sign : Sign::nonneg);
    return s;
}

void write_zinhom(const std::string& path, const MinimalSolutionSet& sols, int cols) {
    write_mat_file(path, IntMatrix::from_rows(sols.inhomogeneous, cols));
}

}  // namespace tfpm
