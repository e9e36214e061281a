#pragma once

#include <string>
#include <vector>

#include "tfpm/exact.hpp"
#include "tfpm/model.hpp"

// Tableau and tensor notation for moves over binary state spaces, the
// symmetry group actions (column permutations, per-column state switches),
// and expansion of parameterized tableau families.

namespace tfpm {

// flat index of a binary state, node 1 least significant
long long tensor_index(const std::vector<int>& state);
std::vector<int> state_of_tensor_index(long long index, int nodes);

struct Tableau {
    // each row is one state, one entry per node; repeated rows carry multiplicity
    std::vector<std::vector<int>> positive_rows;
    std::vector<std::vector<int>> negative_rows;

    void canonicalize();  // sort rows lexicographically
    std::string to_string() const;
};

// Moves here are plain integer vectors over the 2^k states.
Tableau to_tableau(const Vec& move, int nodes);
Vec from_tableau(const Tableau& t, int nodes);

struct SymmetryGroup {
    int nodes = 0;
    std::vector<std::vector<int>> column_permutations;  // each a permutation of 0..nodes-1
    std::vector<int> switchable_columns;                // columns whose states may be flipped

    // permutations = all permutations of `permuted` (identity elsewhere)
    static SymmetryGroup make(int nodes, const std::vector<int>& permuted,
                              const std::vector<int>& switchable);
};

Vec apply_symmetry(const Vec& move, int nodes, const std::vector<int>& perm,
                   unsigned switch_mask, const std::vector<int>& switchable);

// all distinct images of the move under the group, identified up to global sign
std::vector<Vec> orbit(const Vec& move, const SymmetryGroup& g);

// Parameterized tableau families: rows are strings with one character per
// node; '0'/'1' literal, 'a'..'d' a binary symbol, 'A'..'D' its complement.
struct FamilyTableau {
    std::vector<std::string> positive_rows;
    std::vector<std::string> negative_rows;

    // "[00ac;11aC]-[01ac;10aC]"
    static FamilyTableau parse(const std::string& text);
};

std::vector<Vec> expand_family(const FamilyTableau& family, int nodes);

// canonical sign: first non-zero entry positive
void canonical_sign(Vec& move);

std::string render_tensor(const Vec& move);

}  // namespace tfpm
