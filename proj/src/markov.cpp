#include "tfpm/markov.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "tfpm/io.hpp"
#include "tfpm/notation.hpp"
#include "tfpm/simplex.hpp"

namespace tfpm {

Move Move::of(Vec v) {
    Move m;
    m.degree = 0;
    for (Int e : v)
        if (e > 0) m.degree += e;
    m.vector = std::move(v);
    return m;
}

MoveSet MoveSet::from_vectors(int ambient, std::vector<Vec> vectors) {
    MoveSet s;
    s.ambient_dim = ambient;
    for (auto& v : vectors) {
        canonical_sign(v);
        if (!is_zero(v)) s.moves.push_back(Move::of(std::move(v)));
    }
    std::sort(s.moves.begin(), s.moves.end(), [](const Move& a, const Move& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.vector < b.vector;
    });
    s.moves.erase(std::unique(s.moves.begin(), s.moves.end()), s.moves.end());
    return s;
}

bool MoveSet::contains(const Vec& v) const {
    Vec c = v;
    canonical_sign(c);
    for (const auto& m : moves)
        if (m.vector == c) return true;
    return false;
}

std::vector<Vec> MoveSet::vectors() const {
    std::vector<Vec> vs;
    vs.reserve(moves.size());
    for (const auto& m : moves) vs.push_back(m.vector);
    return vs;
}

namespace {

using Mask = unsigned __int128;

Mask pos_mask(const Vec& v) {
    Mask m = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) m |= Mask(1) << i;
    return m;
}

Int wdeg_pos(const Vec& v, const Vec& w) {
    Int s = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) s = checked_addmul(s, v[i], w[i]);
    return s;
}

// degrevlex with a permuted variable sequence; seq.back() is cheapest
struct TermOrder {
    Vec w;
    std::vector<int> seq;

    // compare monomials u, v: 1 if u > v, -1 if u < v, 0 equal
    int cmp(const Vec& u, const Vec& v) const {
        Int du = 0, dv = 0;
        for (size_t i = 0; i < u.size(); ++i) {
            if (u[i] != 0) du = checked_addmul(du, u[i], w[i]);
            if (v[i] != 0) dv = checked_addmul(dv, v[i], w[i]);
        }
        if (du != dv) return du < dv ? -1 : 1;
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            if (u[*it] != v[*it]) return u[*it] > v[*it] ? -1 : 1;
        }
        return 0;
    }

    // orient a lattice vector so that its positive part is the leading term
    void orient(Vec& g) const {
        Vec p(g.size(), 0), n(g.size(), 0);
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i] > 0) p[i] = g[i];
            else n[i] = -g[i];
        }
        if (cmp(p, n) < 0) negate(g);
    }
};

struct Binomial {
    Vec v;       // oriented: positive part is the leading term
    Mask head;   // support mask of the positive part
    Int wdeg;    // grading of the positive part
};

bool head_divides(const Binomial& h, const Vec& v, Mask vmask) {
    if ((h.head & ~vmask) != 0) return false;
    for (size_t i = 0; i < v.size(); ++i)
        if (h.v[i] > 0 && v[i] < h.v[i]) return false;
    return true;
}

// full normal form of a lattice vector against the basis
bool normal_form(Vec& s, const std::vector<Binomial>& basis, const TermOrder& ord) {
    for (;;) {
        if (is_zero(s)) return false;
        ord.orient(s);
        Mask pm = pos_mask(s);
        bool reduced = false;
        for (const auto& b : basis) {
            if (head_divides(b, s, pm)) {
                s = sub(s, b.v);
                reduced = true;
                break;
            }
        }
        if (reduced) continue;
        // tail reduction: the head divides the negative part
        Vec neg(s.size(), 0);
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] < 0) neg[i] = -s[i];
        Mask nm = pos_mask(neg);
        for (const auto& b : basis) {
            if (head_divides(b, neg, nm)) {
                s = add(s, b.v);
                reduced = true;
                break;
            }
        }
        if (!reduced) return true;
    }
}

Binomial make_binomial(Vec v, const TermOrder& ord) {
    ord.orient(v);
    Binomial b;
    b.head = pos_mask(v);
    b.wdeg = wdeg_pos(v, ord.w);
    b.v = std::move(v);
    return b;
}

}  // namespace

std::vector<Vec> completion_round(std::vector<Vec> gens, const Vec& w, int cheapest) {
    const int n = gens.empty() ? 0 : static_cast<int>(gens[0].size());
    if (n > 120) throw std::runtime_error("completion: too many coordinates for support masks");
    TermOrder ord;
    ord.w = w;
    for (int i = 0; i < n; ++i)
        if (i != cheapest) ord.seq.push_back(i);
    ord.seq.push_back(cheapest);

    std::vector<Binomial> basis;
    for (auto& g : gens) {
        if (is_zero(g)) continue;
        Vec s = g;
        if (normal_form(s, basis, ord)) basis.push_back(make_binomial(std::move(s), ord));
    }

    struct Pair {
        Int key;
        int i, j;
        bool operator>(const Pair& o) const { return key > o.key; }
    };
    std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs;
    auto lcm_wdeg = [&](const Binomial& a, const Binomial& b) {
        Int s = 0;
        for (size_t i = 0; i < a.v.size(); ++i) {
            Int m = std::max(a.v[i] > 0 ? a.v[i] : 0, b.v[i] > 0 ? b.v[i] : 0);
            if (m) s = checked_addmul(s, m, w[i]);
        }
        return s;
    };
    auto add_pairs = [&](int newest) {
        for (int i = 0; i < newest; ++i) {
            if ((basis[i].head & basis[newest].head) == 0) continue;  // coprime criterion
            pairs.push({lcm_wdeg(basis[i], basis[newest]), i, newest});
        }
    };
    for (int k = 1; k < static_cast<int>(basis.size()); ++k) add_pairs(k);

    while (!pairs.empty()) {
        auto [key, i, j] = pairs.top();
        pairs.pop();
        Vec s = sub(basis[i].v, basis[j].v);
        if (normal_form(s, basis, ord)) {
            basis.push_back(make_binomial(std::move(s), ord));
            add_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // interreduce for a small canonical generating set
    std::sort(basis.begin(), basis.end(), [&](const Binomial& a, const Binomial& b) {
        if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg;
        return a.v < b.v;
    });
    std::vector<Binomial> kept;
    for (auto& b : basis) {
        Vec s = b.v;
        if (normal_form(s, kept, ord)) kept.push_back(make_binomial(std::move(s), ord));
    }
    std::vector<Vec> out;
    out.reserve(kept.size());
    for (auto& b : kept) out.push_back(std::move(b.v));
    return out;
}

namespace {

struct VecHash {
    size_t operator()(const Vec& v) const {
        size_t h = 1469598103934665603ull;
        for (Int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// restriction of basis rows to a coordinate subset
IntMatrix restrict_cols(const IntMatrix& m, const std::vector<int>& cols) {
    IntMatrix r(m.rows, static_cast<int>(cols.size()));
    for (int i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.at(i, static_cast<int>(j)) = m.at(i, cols[j]);
    return r;
}

}  // namespace

MoveSet lattice_markov_basis(const LatticeBasis& lattice) {
    const int n = lattice.ambient_dim;
    if (lattice.generators.empty()) return MoveSet::from_vectors(n, {});
    HnfResult canon = hnf(IntMatrix::from_rows(lattice.generators, n));
    const int r = canon.rank;
    IntMatrix basis(r, n);
    for (int i = 0; i < r; ++i) basis.set_row(i, canon.h.row(i));

    auto grading_full = find_positive_grading(basis);
    if (!grading_full)
        throw std::runtime_error("lattice meets the non-negative orthant; no finite Markov basis");

    // greedily project away coordinates, keeping rank and a positive grading
    std::vector<int> kept(n);
    for (int i = 0; i < n; ++i) kept[i] = i;
    struct Removal {
        int coord;
        Vec grading_before;  // grading on the kept set including `coord`
        std::vector<int> kept_before;
    };
    std::vector<Removal> removals;
    Vec cur_grading = *grading_full;
    for (int i = n - 1; i >= 0; --i) {
        std::vector<int> cand;
        for (int c : kept)
            if (c != i) cand.push_back(c);
        if (static_cast<int>(cand.size()) < r) break;
        IntMatrix sub = restrict_cols(basis, cand);
        if (rank(sub) < r) continue;
        auto g = find_positive_grading(sub);
        if (!g) continue;
        removals.push_back({i, cur_grading, kept});
        kept = std::move(cand);
        cur_grading = *g;
    }

    // base: one completion round per kept coordinate
    std::vector<Vec> gens;
    {
        IntMatrix sub = restrict_cols(basis, kept);
        HnfResult sh = hnf(sub);
        for (int i = 0; i < sh.rank; ++i) gens.push_back(sh.h.row(i));
    }
    for (size_t pos = 0; pos < kept.size(); ++pos)
        gens = completion_round(std::move(gens), cur_grading, static_cast<int>(pos));

    // lift removed coordinates back, most recently removed first
    for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
        const std::vector<int>& prev = it->kept_before;
        IntMatrix old_sub = restrict_cols(basis, kept);
        HnfResult factor = hnf(old_sub);
        IntMatrix new_sub = restrict_cols(basis, prev);
        int insert_pos = static_cast<int>(std::lower_bound(prev.begin(), prev.end(), it->coord) -
                                          prev.begin());
        std::vector<Vec> lifted;
        lifted.reserve(gens.size());
        for (const auto& g : gens) {
            // coefficients of g w.r.t. the projected basis, then re-expand
            Vec d(factor.h.rows, 0);
            Vec rem = g;
            for (int k = 0; k < factor.rank; ++k) {
                int pc = factor.pivot_cols[k];
                Int p = factor.h.at(k, pc);
                if (rem[pc] % p != 0) throw std::runtime_error("lift: non-integral coefficient");
                Int f = rem[pc] / p;
                d[k] = f;
                if (f != 0)
                    for (int j = 0; j < factor.h.cols; ++j)
                        rem[j] = checked_sub(rem[j], checked_mul(f, factor.h.at(k, j)));
            }
            if (!is_zero(rem)) throw std::runtime_error("lift: vector outside projected lattice");
            Vec coeff = vec_mat(d, factor.u);
            lifted.push_back(vec_mat(coeff, new_sub));
        }
        gens = completion_round(std::move(lifted), it->grading_before, insert_pos);
        kept = prev;
        cur_grading = it->grading_before;
    }

    MoveSet out = MoveSet::from_vectors(n, std::move(gens));
    LatticeBasis lb;
    lb.ambient_dim = n;
    for (int i = 0; i < r; ++i) lb.generators.push_back(basis.row(i));
    return minimize(out, lb);
}

MoveSet kernel_markov_basis(const DesignMatrix& design) {
    LatticeBasis k = kernel_lattice(design.matrix);
    MoveSet mb = lattice_markov_basis(k);
    for (const auto& m : mb.moves) {
        if (!is_zero(mat_vec(design.matrix, m.vector)))
            throw std::runtime_error("markov basis element outside the kernel");
        Int s = 0;
        for (Int e : m.vector) s = checked_add(s, e);
        if (s != 0) throw std::runtime_error("kernel move with non-zero entry sum");
    }
    return mb;
}

bool connects(const Vec& start, const Vec& target, const MoveSet& ms, size_t node_cap) {
    if (start == target) return true;
    std::unordered_set<Vec, VecHash> seen;
    std::deque<Vec> queue;
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        Vec cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& m : ms.moves) {
            for (int dir = 0; dir < 2; ++dir) {
                Vec nxt(cur.size());
                bool ok = true;
                for (size_t i = 0; i < cur.size() && ok; ++i) {
                    nxt[i] = dir == 0 ? cur[i] + m.vector[i] : cur[i] - m.vector[i];
                    if (nxt[i] < 0) ok = false;
                }
                if (!ok) continue;
                if (nxt == target) return true;
                if (seen.size() >= node_cap) throw std::runtime_error("connects: node cap exceeded");
                if (seen.insert(nxt).second) queue.push_back(nxt);
            }
        }
    }
    return false;
}

MoveSet minimize(const MoveSet& m, const LatticeBasis& lattice, size_t node_cap) {
    if (!lattice.generators.empty()) {
        HnfResult factor = hnf(IntMatrix::from_rows(lattice.generators, lattice.ambient_dim));
        for (const auto& mv : m.moves) {
            Vec rem = mv.vector;
            for (int k = 0; k < factor.rank; ++k) {
                int pc = factor.pivot_cols[k];
                Int p = factor.h.at(k, pc);
                if (rem[pc] % p != 0) throw std::runtime_error("move outside declared lattice");
                Int f = rem[pc] / p;
                if (f != 0)
                    for (int j = 0; j < factor.h.cols; ++j)
                        rem[j] = checked_sub(rem[j], checked_mul(f, factor.h.at(k, j)));
            }
            if (!is_zero(rem)) throw std::runtime_error("move outside declared lattice");
        }
    }
    // try dropping moves, largest degree first
    std::vector<Move> order = m.moves;
    std::sort(order.begin(), order.end(), [](const Move& a, const Move& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        return a.vector > b.vector;
    });
    std::vector<Vec> current;
    for (const auto& mv : m.moves) current.push_back(mv.vector);
    for (const auto& mv : order) {
        std::vector<Vec> rest;
        rest.reserve(current.size());
        for (const auto& v : current)
            if (v != mv.vector) rest.push_back(v);
        MoveSet rest_set = MoveSet::from_vectors(m.ambient_dim, rest);
        Vec pos(mv.vector.size(), 0), neg(mv.vector.size(), 0);
        for (size_t i = 0; i < mv.vector.size(); ++i) {
            if (mv.vector[i] > 0) pos[i] = mv.vector[i];
            else neg[i] = -mv.vector[i];
        }
        bool redundant = false;
        try {
            redundant = connects(pos, neg, rest_set, node_cap);
        } catch (const std::runtime_error&) {
            redundant = false;  // cap exceeded: keep the move
        }
        if (redundant) current = std::move(rest);
    }
    return MoveSet::from_vectors(m.ambient_dim, current);
}

DegreeStats degree_stats(const MoveSet& m) {
    DegreeStats s;
    for (const auto& mv : m.moves) {
        s.count_by_degree[mv.degree] += 1;
        s.max_degree = std::max(s.max_degree, mv.degree);
    }
    return s;
}

void write_moves(const std::string& path, const MoveSet& m) {
    write_mat_file(path, IntMatrix::from_rows(m.vectors(), m.ambient_dim));
}

MoveSet read_moves(const std::string& path) {
    IntMatrix mat = read_mat_file(path);
    std::vector<Vec> vs;
    for (int i = 0; i < mat.rows; ++i) vs.push_back(mat.row(i));
    return MoveSet::from_vectors(mat.cols, std::move(vs));
}

}  // namespace tfpm
