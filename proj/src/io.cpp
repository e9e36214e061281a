#include "tfpm/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tfpm {

void write_mat(std::ostream& os, const IntMatrix& m) {
    os << m.rows << " " << m.cols << "\n";
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (j) os << " ";
            os << m.at(i, j);
        }
        os << "\n";
    }
}

IntMatrix read_mat(std::istream& is) {
    int r, c;
    if (!(is >> r >> c) || r < 0 || c < 0) throw std::runtime_error("malformed matrix header");
    IntMatrix m(r, c);
    for (size_t k = 0; k < m.entries.size(); ++k)
        if (!(is >> m.entries[k])) throw std::runtime_error("truncated matrix body");
    return m;
}

void write_mat_file(const std::string& path, const IntMatrix& m) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    write_mat(f, m);
}

IntMatrix read_mat_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return read_mat(f);
}

IntMatrix rows_as_matrix(const std::vector<Vec>& rows, int cols) {
    return IntMatrix::from_rows(rows, cols);
}

}  // namespace tfpm
