#pragma once

#include <map>
#include <string>
#include <vector>

#include "tfpm/exact.hpp"
#include "tfpm/model.hpp"

// Markov bases of integer lattices.  The engine is project-and-lift: project
// the lattice onto a coordinate subset that still carries a strictly positive
// grading, compute a generating set there by one binomial-completion round
// per coordinate (each round a Buchberger completion under a degrevlex order
// with that coordinate cheapest), then add the removed coordinates back one
// at a time, each re-entry being one more completion round.  Minimality is
// restored at the end by dropping every move whose endpoints stay connected
// without it.

namespace tfpm {

struct Move {
    Vec vector;
    Int degree = 0;  // one-norm of the positive part

    static Move of(Vec v);
    bool operator==(const Move& o) const { return vector == o.vector; }
};

struct MoveSet {
    int ambient_dim = 0;
    std::vector<Move> moves;  // canonical sign, sorted by (degree, lex), no duplicates

    static MoveSet from_vectors(int ambient, std::vector<Vec> vectors);
    bool contains(const Vec& v) const;  // up to global sign
    std::vector<Vec> vectors() const;
};

struct DegreeStats {
    std::map<Int, int> count_by_degree;
    Int max_degree = 0;
};

MoveSet lattice_markov_basis(const LatticeBasis& lattice);
MoveSet kernel_markov_basis(const DesignMatrix& design);

// Drops every move whose positive part can still reach its negative part
// through the remaining moves without leaving the non-negative orthant.
// `node_cap` bounds the per-move search; a move whose search exceeds the cap
// is kept (keeping is always safe).
MoveSet minimize(const MoveSet& m, const LatticeBasis& lattice, size_t node_cap = 4000000);

DegreeStats degree_stats(const MoveSet& m);

// true iff `target` is reachable from `start` inside the non-negative orthant
// using moves of `ms` in either direction
bool connects(const Vec& start, const Vec& target, const MoveSet& ms, size_t node_cap = 4000000);

// Buchberger completion of lattice vectors: one saturation round for the
// variable at `cheapest` under the grading `w`.  Exposed for tests.
std::vector<Vec> completion_round(std::vector<Vec> gens, const Vec& w, int cheapest);

void write_moves(const std::string& path, const MoveSet& m);
MoveSet read_moves(const std::string& path);

}  // namespace tfpm
