#pragma once

#include <cstddef>
#include <vector>

#include "hob/errors.hpp"
#include "hob/rational.hpp"

namespace hob {

// Dense integer matrix, row-major, arbitrary-precision entries.
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries;  // rows * cols, row-major

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, Int(0)) {}

    Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    bool square() const { return rows == cols; }

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const IntegerMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
};

inline IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols != b.rows) throw DomainError("matrix product shape mismatch");
    IntegerMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

inline IntegerMatrix matrix_from_rows(const std::vector<std::vector<long long>>& rows) {
    IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw DomainError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = Int(std::to_string(rows[i][j]));
    }
    return m;
}

} // namespace hob
