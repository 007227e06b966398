#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "qalg/field.hpp"

namespace qalg {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using RowVec = Eigen::Matrix<K, 1, Eigen::Dynamic>;

using Eigen::Index;

// Reduced row echelon form. Pivots are found by a fixed left-to-right column
// scan taking the first row with a nonzero entry, so the result is a
// deterministic function of the input in the global basis order.
template <scalar_field K>
struct Echelon {
    Mat<K> rows;                // r x n, fully reduced, pivot entries are 1
    std::vector<Index> pivots;  // strictly increasing, one per row
    Index rank() const { return rows.rows(); }
};

template <scalar_field K>
Echelon<K> reduced_row_echelon(Mat<K> a) {
    const Index m = a.rows(), n = a.cols();
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < n && r < m; ++c) {
        Index pr = -1;
        for (Index i = r; i < m; ++i) {
            if (!a(i, c).is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) a.row(r).swap(a.row(pr));
        const K inv = K(1) / a(r, c);
        for (Index j = c; j < n; ++j) {
            if (!a(r, j).is_zero()) a(r, j) = a(r, j) * inv;
        }
        for (Index i = 0; i < m; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const K f = a(i, c);
            for (Index j = c; j < n; ++j) {
                if (!a(r, j).is_zero()) a(i, j) = a(i, j) - f * a(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Echelon<K> e;
    e.rows = a.topRows(r);
    e.pivots = std::move(pivots);
    return e;
}

template <scalar_field K>
Index rank_of(const Mat<K>& a) {
    return reduced_row_echelon(a).rank();
}

// Basis of { v : a v = 0 }, one kernel vector per column. Built from the
// free columns of the reduced echelon form, so each basis vector carries a 1
// at its own free coordinate and 0 at every other free coordinate.
template <scalar_field K>
Mat<K> right_kernel(const Mat<K>& a) {
    const Echelon<K> e = reduced_row_echelon(a);
    const Index n = a.cols();
    std::vector<Index> free_cols;
    {
        std::size_t pi = 0;
        for (Index c = 0; c < n; ++c) {
            if (pi < e.pivots.size() && e.pivots[pi] == c) {
                ++pi;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    Mat<K> k = Mat<K>::Zero(n, static_cast<Index>(free_cols.size()));
    for (std::size_t fc = 0; fc < free_cols.size(); ++fc) {
        const Index f = free_cols[fc];
        k(f, static_cast<Index>(fc)) = K(1);
        for (Index r = 0; r < e.rank(); ++r) {
            k(e.pivots[static_cast<std::size_t>(r)], static_cast<Index>(fc)) = -e.rows(r, f);
        }
    }
    return k;
}

// Basis of { x : x a = 0 }, one kernel vector per row.
template <scalar_field K>
Mat<K> left_kernel(const Mat<K>& a) {
    Mat<K> at = a.transpose();
    return right_kernel(at).transpose();
}

// Reduce v against the echelon rows; the residual is zero iff v lies in the
// row space.
template <scalar_field K>
RowVec<K> reduce_against(const Echelon<K>& e, RowVec<K> v) {
    for (Index r = 0; r < e.rank(); ++r) {
        const Index p = e.pivots[static_cast<std::size_t>(r)];
        if (v(p).is_zero()) continue;
        const K f = v(p);
        for (Index j = 0; j < v.cols(); ++j) {
            if (!e.rows(r, j).is_zero()) v(j) = v(j) - f * e.rows(r, j);
        }
    }
    return v;
}

template <scalar_field K>
bool is_zero_row(const RowVec<K>& v) {
    for (Index j = 0; j < v.cols(); ++j) {
        if (!v(j).is_zero()) return false;
    }
    return true;
}

template <scalar_field K>
bool is_zero_mat(const Mat<K>& a) {
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            if (!a(i, j).is_zero()) return false;
        }
    }
    return true;
}

template <scalar_field K>
bool in_row_space(const Echelon<K>& e, const RowVec<K>& v) {
    return is_zero_row(reduce_against(e, v));
}

// Coefficients expressing each row of b over the echelon rows; nullopt if
// any row falls outside the row space. Because the echelon is reduced, the
// coefficient over row r is just the entry of b at that row's pivot column.
template <scalar_field K>
std::optional<Mat<K>> express_rows(const Echelon<K>& e, const Mat<K>& b) {
    const Index m = b.rows();
    Mat<K> x = Mat<K>::Zero(m, e.rank());
    for (Index i = 0; i < m; ++i) {
        RowVec<K> v = b.row(i);
        for (Index r = 0; r < e.rank(); ++r) {
            const K c = v(e.pivots[static_cast<std::size_t>(r)]);
            x(i, r) = c;
            if (c.is_zero()) continue;
            for (Index j = 0; j < v.cols(); ++j) {
                if (!e.rows(r, j).is_zero()) v(j) = v(j) - c * e.rows(r, j);
            }
        }
        if (!is_zero_row(v)) return std::nullopt;
    }
    return x;
}

template <scalar_field K>
Mat<K> vstack(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    Mat<K> r(a.rows() + b.rows(), a.cols());
    r.topRows(a.rows()) = a;
    r.bottomRows(b.rows()) = b;
    return r;
}

}  // namespace qalg
