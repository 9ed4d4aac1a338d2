#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hob/errors.hpp"
#include "hob/matrix.hpp"
#include "hob/plumbing.hpp"
#include "hob/rational.hpp"

namespace hob {

// Exact determinant by fraction-free (Bareiss) elimination. Divisions are
// exact at every step, so all intermediates stay integral.
inline Int determinant(const IntegerMatrix& m) {
    if (!m.square()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && a.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

struct SmithResult {
    IntegerMatrix d;  // diagonal, non-negative, divisibility chain
    IntegerMatrix u;  // unimodular row transform
    IntegerMatrix v;  // unimodular column transform; u * m * v = d
};

namespace detail {

inline void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

inline void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

inline void add_row_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) += f * m.at(src, j);
}

inline void add_col_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, dst) += f * m.at(i, src);
}

inline void negate_row(IntegerMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

} // namespace detail

// Smith normal form by elementary row/column operations. Pivot selection is
// the minimal nonzero absolute value in the remaining submatrix, ties broken
// by lowest row then lowest column index, so runs are reproducible.
inline SmithResult smith_normal_form(const IntegerMatrix& m) {
    SmithResult r{m, IntegerMatrix::identity(m.rows), IntegerMatrix::identity(m.cols)};
    IntegerMatrix& d = r.d;
    const std::size_t steps = std::min(m.rows, m.cols);

    for (std::size_t t = 0; t < steps; ++t) {
        while (true) {
            // Minimal |entry| pivot in d[t.., t..].
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best(0);
            for (std::size_t i = t; i < d.rows; ++i)
                for (std::size_t j = t; j < d.cols; ++j) {
                    const Int& x = d.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (!found || ax < best) {
                        found = true;
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) break;  // remaining submatrix is zero

            detail::swap_rows(d, t, pi);
            detail::swap_rows(r.u, t, pi);
            detail::swap_cols(d, t, pj);
            detail::swap_cols(r.v, t, pj);

            bool reduced = true;
            for (std::size_t i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);  // truncated; remainder < |pivot|
                if (q != 0) {
                    detail::add_row_multiple(d, i, t, -q);
                    detail::add_row_multiple(r.u, i, t, -q);
                }
                if (d.at(i, t) != 0) reduced = false;
            }
            for (std::size_t j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    detail::add_col_multiple(d, j, t, -q);
                    detail::add_col_multiple(r.v, j, t, -q);
                }
                if (d.at(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // Pivot divides its own cross; force it to divide the rest of the
            // submatrix before moving on, so the diagonal chain comes out in
            // divisibility order.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < d.rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < d.cols && divides_all; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        detail::add_row_multiple(d, t, i, Int(1));
                        detail::add_row_multiple(r.u, t, i, Int(1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (d.at(t, t) < 0) {
            detail::negate_row(d, t);
            detail::negate_row(r.u, t);
        }
    }
    return r;
}

// Finitely generated abelian group: free rank plus torsion coefficients in
// divisibility order (each >= 2, each dividing the next).
struct AbelianGroup {
    long long rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }

    bool operator==(const AbelianGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }

    std::string to_string() const {
        if (trivial()) return "0";
        std::string s;
        if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
        for (const Int& t : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + t.get_str();
        }
        return s;
    }
};

// First homology of the plumbed 3-manifold: cokernel of the linking matrix,
// plus 2*genus free summands per vertex (the 1-handles of a genus-g central
// surface). Used as the move-invariance witness throughout.
inline AbelianGroup first_homology(const PlumbingGraph& g) {
    IntegerMatrix link = linking_matrix(g);
    SmithResult snf = smith_normal_form(link);
    AbelianGroup h;
    for (std::size_t i = 0; i < std::min(snf.d.rows, snf.d.cols); ++i) {
        const Int& di = snf.d.at(i, i);
        if (di == 0)
            h.rank += 1;
        else if (di >= 2)
            h.torsion.push_back(di);
    }
    for (const PlumbingVertex& v : g.vertices) h.rank += 2 * v.genus;
    return h;
}

} // namespace hob
