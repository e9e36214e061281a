#include "tfpm/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tfpm {

StateSpace StateSpace::binary(int nodes) { return of(std::vector<int>(nodes, 2)); }

StateSpace StateSpace::of(std::vector<int> arities) {
    StateSpace s;
    s.arities = std::move(arities);
    s.total_states = 1;
    for (int a : s.arities) {
        if (a < 2) throw std::runtime_error("arity must be at least 2");
        s.total_states = checked_mul(s.total_states, a);
    }
    return s;
}

long long StateSpace::index_of(const std::vector<int>& state) const {
    if (state.size() != arities.size()) throw std::runtime_error("state length mismatch");
    long long idx = 0, stride = 1;
    for (size_t i = 0; i < arities.size(); ++i) {
        if (state[i] < 0 || state[i] >= arities[i]) throw std::runtime_error("state value out of range");
        idx += state[i] * stride;
        stride *= arities[i];
    }
    return idx;
}

std::vector<int> StateSpace::state_of(long long index) const {
    std::vector<int> s(arities.size());
    for (size_t i = 0; i < arities.size(); ++i) {
        s[i] = static_cast<int>(index % arities[i]);
        index /= arities[i];
    }
    return s;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SimplicialComplex build_complex_explicit(int vertex_count, const std::vector<std::vector<int>>& facets) {
    if (facets.empty()) throw std::runtime_error("empty facet list");
    SimplicialComplex c;
    c.vertex_count = vertex_count;
    std::vector<std::vector<int>> cleaned;
    for (const auto& f : facets) {
        if (f.empty()) throw std::runtime_error("empty facet");
        for (int v : f)
            if (v < 0 || v >= vertex_count) throw std::runtime_error("facet vertex out of range");
        cleaned.push_back(sorted_unique(f));
    }
    // keep faces maximal under inclusion, order of first appearance
    for (size_t i = 0; i < cleaned.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < cleaned.size() && maximal; ++j) {
            if (i == j) continue;
            if (cleaned[i] == cleaned[j]) {
                if (j < i) maximal = false;  // duplicate, keep first
            } else if (subset_of(cleaned[i], cleaned[j])) {
                maximal = false;
            }
        }
        if (maximal) c.facets.push_back(cleaned[i]);
    }
    std::set<int> covered;
    for (const auto& f : c.facets) covered.insert(f.begin(), f.end());
    if (static_cast<int>(covered.size()) != vertex_count)
        throw std::runtime_error("some vertex appears in no facet");
    return c;
}

SimplicialComplex build_complex(NamedModel model, int n) {
    switch (model) {
        case NamedModel::k3n: {
            if (n < 1) throw std::runtime_error("k3n requires n >= 1");
            std::vector<std::vector<int>> facets;
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < 3; ++i) facets.push_back({i, 3 + j});
            return build_complex_explicit(3 + n, facets);
        }
        case NamedModel::three_star:
            return build_complex_explicit(4, {{0, 3}, {1, 3}, {2, 3}});
        case NamedModel::k4_tilde:
            // triangle facet first, so margin vectors carry the triangle block first
            return build_complex_explicit(4, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}});
    }
    throw std::runtime_error("unknown model");
}

DesignMatrix design_matrix(const SimplicialComplex& complex, const std::vector<int>& arities) {
    if (static_cast<int>(arities.size()) != complex.vertex_count)
        throw std::runtime_error("arity list length mismatch");
    DesignMatrix d;
    d.complex = complex;
    d.states = StateSpace::of(arities);

    int total_rows = 0;
    for (const auto& f : complex.facets) {
        d.facet_row_begin.push_back(total_rows);
        long long fs = 1;
        for (int v : f) fs *= arities[v];
        total_rows += static_cast<int>(fs);
    }
    d.matrix = IntMatrix(total_rows, static_cast<int>(d.states.total_states));
    for (int fi = 0; fi < static_cast<int>(complex.facets.size()); ++fi) {
        const auto& f = complex.facets[fi];
        long long fs = 1;
        for (int v : f) fs *= arities[v];
        for (long long s = 0; s < fs; ++s) d.row_index.emplace_back(fi, s);
    }
    for (long long x = 0; x < d.states.total_states; ++x) {
        std::vector<int> st = d.states.state_of(x);
        for (int fi = 0; fi < static_cast<int>(complex.facets.size()); ++fi) {
            const auto& f = complex.facets[fi];
            long long s = 0, stride = 1;
            for (int v : f) {  // facet-states indexed over the facet's nodes in ascending order
                s += st[v] * stride;
                stride *= arities[v];
            }
            d.matrix.at(d.row_of(fi, s), static_cast<int>(x)) = 1;
        }
    }
    return d;
}

Vec margin(const DesignMatrix& b, const Vec& table) {
    if (static_cast<long long>(table.size()) != b.states.total_states)
        throw std::runtime_error("table length mismatch");
    return mat_vec(b.matrix, table);
}

}  // namespace tfpm
