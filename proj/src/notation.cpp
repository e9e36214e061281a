#include "tfpm/notation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tfpm {

long long tensor_index(const std::vector<int>& state) {
    long long idx = 0;
    for (size_t i = 0; i < state.size(); ++i) {
        if (state[i] != 0 && state[i] != 1) throw std::runtime_error("non-binary state entry");
        idx |= static_cast<long long>(state[i]) << i;
    }
    return idx;
}

std::vector<int> state_of_tensor_index(long long index, int nodes) {
    std::vector<int> s(nodes);
    for (int i = 0; i < nodes; ++i) s[i] = static_cast<int>((index >> i) & 1);
    return s;
}

void Tableau::canonicalize() {
    std::sort(positive_rows.begin(), positive_rows.end());
    std::sort(negative_rows.begin(), negative_rows.end());
}

std::string Tableau::to_string() const {
    auto block = [](const std::vector<std::vector<int>>& rows) {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i) os << ";";
            for (int v : rows[i]) os << v;
        }
        os << "]";
        return os.str();
    };
    return block(positive_rows) + "-" + block(negative_rows);
}

Tableau to_tableau(const Vec& move, int nodes) {
    if (static_cast<long long>(move.size()) != (1ll << nodes))
        throw std::runtime_error("move length is not 2^nodes");
    Tableau t;
    Int balance = 0;
    for (size_t idx = 0; idx < move.size(); ++idx) {
        balance += move[idx];
        Int e = move[idx];
        for (Int k = 0; k < (e > 0 ? e : -e); ++k) {
            auto st = state_of_tensor_index(static_cast<long long>(idx), nodes);
            (e > 0 ? t.positive_rows : t.negative_rows).push_back(st);
        }
    }
    if (balance != 0) throw std::runtime_error("unbalanced move has no tableau");
    t.canonicalize();
    return t;
}

Vec from_tableau(const Tableau& t, int nodes) {
    if (t.positive_rows.size() != t.negative_rows.size())
        throw std::runtime_error("tableau row counts differ");
    Vec m(1ll << nodes, 0);
    for (const auto& r : t.positive_rows) m[tensor_index(r)] += 1;
    for (const auto& r : t.negative_rows) m[tensor_index(r)] -= 1;
    return m;
}

SymmetryGroup SymmetryGroup::make(int nodes, const std::vector<int>& permuted,
                                  const std::vector<int>& switchable) {
    SymmetryGroup g;
    g.nodes = nodes;
    g.switchable_columns = switchable;
    std::vector<int> sorted = permuted;
    std::sort(sorted.begin(), sorted.end());
    do {
        std::vector<int> perm(nodes);
        for (int i = 0; i < nodes; ++i) perm[i] = i;
        for (size_t k = 0; k < permuted.size(); ++k) perm[permuted[k]] = sorted[k];
        g.column_permutations.push_back(perm);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return g;
}

Vec apply_symmetry(const Vec& move, int nodes, const std::vector<int>& perm,
                   unsigned switch_mask, const std::vector<int>& switchable) {
    Vec out(move.size(), 0);
    for (size_t idx = 0; idx < move.size(); ++idx) {
        if (move[idx] == 0) continue;
        auto st = state_of_tensor_index(static_cast<long long>(idx), nodes);
        std::vector<int> img(nodes);
        for (int i = 0; i < nodes; ++i) img[perm[i]] = st[i];
        for (size_t k = 0; k < switchable.size(); ++k)
            if (switch_mask & (1u << k)) img[switchable[k]] ^= 1;
        out[tensor_index(img)] += move[idx];
    }
    return out;
}

void canonical_sign(Vec& move) {
    for (Int e : move) {
        if (e > 0) return;
        if (e < 0) {
            negate(move);
            return;
        }
    }
}

std::vector<Vec> orbit(const Vec& move, const SymmetryGroup& g) {
    std::set<Vec> images;
    unsigned nmask = 1u << g.switchable_columns.size();
    for (const auto& perm : g.column_permutations)
        for (unsigned mask = 0; mask < nmask; ++mask) {
            Vec img = apply_symmetry(move, g.nodes, perm, mask, g.switchable_columns);
            canonical_sign(img);
            images.insert(std::move(img));
        }
    return std::vector<Vec>(images.begin(), images.end());
}

FamilyTableau FamilyTableau::parse(const std::string& text) {
    auto parse_block = [](const std::string& s) {
        std::vector<std::string> rows;
        std::string cur;
        for (char c : s) {
            if (c == ';') {
                rows.push_back(cur);
                cur.clear();
            } else if (!isspace(static_cast<unsigned char>(c))) {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) rows.push_back(cur);
        return rows;
    };
    size_t l1 = text.find('['), r1 = text.find(']');
    size_t l2 = text.find('[', r1), r2 = text.find(']', l2);
    if (l1 == std::string::npos || r1 == std::string::npos || l2 == std::string::npos ||
        r2 == std::string::npos)
        throw std::runtime_error("malformed family tableau: " + text);
    FamilyTableau f;
    f.positive_rows = parse_block(text.substr(l1 + 1, r1 - l1 - 1));
    f.negative_rows = parse_block(text.substr(l2 + 1, r2 - l2 - 1));
    return f;
}

std::vector<Vec> expand_family(const FamilyTableau& family, int nodes) {
    std::set<char> symbols;
    auto scan = [&](const std::vector<std::string>& rows) {
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != nodes)
                throw std::runtime_error("family row width mismatch: " + r);
            for (char c : r) {
                if (c >= 'a' && c <= 'd') symbols.insert(c);
                else if (c >= 'A' && c <= 'D') symbols.insert(static_cast<char>(c - 'A' + 'a'));
                else if (c != '0' && c != '1') throw std::runtime_error("unbound symbol in family");
            }
        }
    };
    scan(family.positive_rows);
    scan(family.negative_rows);
    std::vector<char> syms(symbols.begin(), symbols.end());

    std::set<Vec> out;
    for (unsigned assign = 0; assign < (1u << syms.size()); ++assign) {
        std::map<char, int> value;
        for (size_t k = 0; k < syms.size(); ++k) value[syms[k]] = (assign >> k) & 1;
        auto instantiate = [&](const std::string& row) {
            std::vector<int> st(nodes);
            for (int i = 0; i < nodes; ++i) {
                char c = row[i];
                if (c == '0') st[i] = 0;
                else if (c == '1') st[i] = 1;
                else if (c >= 'a' && c <= 'd') st[i] = value[c];
                else st[i] = 1 - value[static_cast<char>(c - 'A' + 'a')];
            }
            return st;
        };
        Vec m(1ll << nodes, 0);
        for (const auto& r : family.positive_rows) m[tensor_index(instantiate(r))] += 1;
        for (const auto& r : family.negative_rows) m[tensor_index(instantiate(r))] -= 1;
        canonical_sign(m);
        if (!is_zero(m)) out.insert(std::move(m));
    }
    return std::vector<Vec>(out.begin(), out.end());
}

std::string render_tensor(const Vec& move) {
    std::ostringstream os;
    for (size_t i = 0; i < move.size(); ++i) {
        if (i) os << ",";
        os << move[i];
    }
    return os.str();
}

}  // namespace tfpm
