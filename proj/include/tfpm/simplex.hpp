#pragma once

#include <optional>

#include "tfpm/exact.hpp"

// Exact rational linear feasibility, used to certify positive gradings:
// a strictly positive integer functional vanishing on a lattice guarantees
// finite fibers and terminating completions.

namespace tfpm {

// some y >= 0 with M y = b over the rationals, scaled to integers, or nullopt
std::optional<Vec> nonneg_rational_solution_scaled(const IntMatrix& m, const Vec& b);

// integer w with w >= 1 componentwise and (row_i . w) = 0 for every row of
// `lattice_rows`, or nullopt if no strictly positive grading exists
std::optional<Vec> find_positive_grading(const IntMatrix& lattice_rows);

}  // namespace tfpm
