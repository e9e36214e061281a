#pragma once

#include <map>
#include <string>
#include <vector>

#include "tfpm/exact.hpp"

// Simplicial complexes, state spaces and hierarchical-model design matrices.
// States of a k-node space are tuples (x_1,...,x_k); the flat index of a
// binary state is sum x_i 2^(i-1), i.e. node 1 is the least significant bit.

namespace tfpm {

struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::vector<int>> facets;  // 0-based vertex lists, sorted, pairwise incomparable
};

struct StateSpace {
    std::vector<int> arities;
    long long total_states = 0;

    static StateSpace binary(int nodes);
    static StateSpace of(std::vector<int> arities);

    // mixed-radix index with node 1 least significant
    long long index_of(const std::vector<int>& state) const;
    std::vector<int> state_of(long long index) const;
};

struct DesignMatrix {
    SimplicialComplex complex;
    StateSpace states;
    IntMatrix matrix;                              // one row per (facet, facet-state)
    std::vector<std::pair<int, long long>> row_index;  // row -> (facet, facet-state index)
    std::vector<int> facet_row_begin;              // facet -> first row

    int row_of(int facet, long long facet_state) const {
        return facet_row_begin[facet] + static_cast<int>(facet_state);
    }
};

enum class NamedModel { k3n, three_star, k4_tilde };

// Named models realize the graphs of interest; explicit facet lists are
// accepted too (redundant faces are dropped, order of first appearance kept).
SimplicialComplex build_complex(NamedModel model, int n = 1);
SimplicialComplex build_complex_explicit(int vertex_count, const std::vector<std::vector<int>>& facets);

DesignMatrix design_matrix(const SimplicialComplex& complex, const std::vector<int>& arities);

inline DesignMatrix binary_design(NamedModel model, int n = 1) {
    SimplicialComplex c = build_complex(model, n);
    return design_matrix(c, std::vector<int>(c.vertex_count, 2));
}

Vec margin(const DesignMatrix& b, const Vec& table);

}  // namespace tfpm
