#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tfpm/exact.hpp"

// Minimal non-negative solutions of integer linear systems (the completion
// step behind hole detection, Hilbert bases and lift enumeration).
//
// The solver is a Pottier / Contejean-Devie vector-addition completion: a
// breadth-first frontier of partial sums, extended only along coordinates
// that decrease the residual (inner-product rule) and pruned against the
// minimal solutions found so far.  Free coordinates are split x = x+ - x-
// internally.  Inhomogeneous systems get an auxiliary column -rhs whose
// multiplier is capped at one; solutions with multiplier one are the minimal
// inhomogeneous solutions, those with zero the minimal homogeneous ones.

namespace tfpm {

enum class Sign : unsigned char { free_sign = 0, nonneg = 1 };

struct DioSystem {
    IntMatrix a;
    Vec rhs;                  // zero for homogeneous systems
    std::vector<Sign> signs;  // per column

    static DioSystem homogeneous(IntMatrix a_, std::vector<Sign> signs_);
    static DioSystem nonneg_system(IntMatrix a_, Vec rhs_);
};

struct MinimalSolutionSet {
    std::vector<Vec> inhomogeneous;  // minimal solutions of A x = rhs
    std::vector<Vec> homogeneous;    // minimal non-zero solutions of A x = 0
};

MinimalSolutionSet minimal_homogeneous(const DioSystem& system);
MinimalSolutionSet minimal_inhomogeneous(const DioSystem& system);

// First sign-feasible solution of A x = rhs, or nullopt.  Uses backtracking
// when all signs are nonneg and A is entrywise non-negative, completion
// otherwise.
std::optional<Vec> feasible_solution(const DioSystem& system);

// Exhaustive enumeration of x >= 0 with A x = b for entrywise non-negative A,
// in lexicographic order.  The callback returns false to stop early.  Returns
// false iff the callback stopped the walk.
bool enumerate_nonneg(const IntMatrix& a, const Vec& b,
                      const std::function<bool(const Vec&)>& visit);

// File round-trips in 4ti2 style (.mat / .rhs / .sign / .zinhom).
void write_dio_files(const std::string& stem, const DioSystem& system);
DioSystem read_dio_files(const std::string& stem);
void write_zinhom(const std::string& path, const MinimalSolutionSet& sols, int cols);

}  // namespace tfpm
