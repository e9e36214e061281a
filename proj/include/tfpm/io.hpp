#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tfpm/exact.hpp"

// 4ti2-style text formats: first line "rows cols", then whitespace-separated
// integer rows.  Shared by .mat, .lat, .mar, .rhs, .sign, .zinhom files.

namespace tfpm {

void write_mat(std::ostream& os, const IntMatrix& m);
IntMatrix read_mat(std::istream& is);

void write_mat_file(const std::string& path, const IntMatrix& m);
IntMatrix read_mat_file(const std::string& path);

IntMatrix rows_as_matrix(const std::vector<Vec>& rows, int cols);

}  // namespace tfpm
