#pragma once

#include "matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dgkit {

/*
 * Incremental reduced row echelon form. Rows are inserted one at a time and
 * kept fully reduced with unit pivots, so every derived basis is canonical:
 * identical input sequences give bit-identical results.
 *
 * With tracking enabled, each kept row also carries its expression over the
 * inserted rows, which turns the structure into a coordinatizer for the span
 * (used wherever elements must be rewritten over a chosen basis). Tracking
 * costs O(#insertions) per row, so leave it off for large equation streams.
 */
template <class K>
class RowBasis {
  public:
    explicit RowBasis(FieldSpec fs, std::size_t cols, bool track = false)
        : fs_(fs), cols_(cols), track_(track), inserted_(0) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<K>& rref_row(std::size_t i) const { return rows_[i]; }

    // returns true if the row enlarged the span
    bool insert(std::vector<K> v) {
        std::vector<K> expr;
        if (track_) {
            expr.assign(inserted_ + 1, K(0));
            expr[inserted_] = FieldOps<K>::from_int(fs_, 1);
        }
        ++inserted_;
        reduce_tracked(v, expr);
        std::size_t p = first_nonzero(v);
        if (p == cols_)
            return false;
        K inv = v[p].inverse();
        scale_row(v, inv);
        if (track_)
            scale_row(expr, inv);
        // eliminate this pivot from existing rows to keep full RREF
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const K c = rows_[i][p];
            if (c.is_zero())
                continue;
            axpy(rows_[i], c, v);
            if (track_) {
                grow(exprs_[i]);
                axpy(exprs_[i], c, expr);
            }
        }
        // keep rows ordered by pivot column
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p)
            ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        if (track_)
            exprs_.insert(exprs_.begin() + pos, std::move(expr));
        return true;
    }

    // residual of v against the current span
    std::vector<K> reduce(std::vector<K> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const K c = v[pivots_[i]];
            if (!c.is_zero())
                axpy(v, c, rows_[i]);
        }
        return v;
    }

    bool contains(const std::vector<K>& v) const { return all_zero(reduce(v)); }

    // coefficients of v over the inserted rows; nullopt if v is not in the span
    std::optional<std::vector<K>> coords_in_inserted(std::vector<K> v) const {
        if (!track_)
            throw std::logic_error("RowBasis: coords need tracking enabled");
        std::vector<K> acc(inserted_, K(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const K c = v[pivots_[i]];
            if (c.is_zero())
                continue;
            axpy(v, c, rows_[i]);
            for (std::size_t j = 0; j < exprs_[i].size(); ++j)
                if (!exprs_[i][j].is_zero())
                    acc[j] += c * exprs_[i][j];
        }
        if (!all_zero(v))
            return std::nullopt;
        return acc;
    }

    // canonical basis of the span, as a matrix of RREF rows
    Mat<K> basis_matrix() const {
        Mat<K> m(fs_, rows_.size(), cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            m.set_row(i, rows_[i]);
        return m;
    }

    /*
     * Null space of the row span seen as a system of linear equations: all u
     * with sum_j row[j]*u[j] = 0 for every inserted row. Canonical basis from
     * the free columns of the RREF.
     */
    Mat<K> solution_space() const {
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t p : pivots_)
            is_pivot[p] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!is_pivot[j])
                free_cols.push_back(j);
        Mat<K> out(fs_, free_cols.size(), cols_);
        for (std::size_t t = 0; t < free_cols.size(); ++t) {
            std::size_t f = free_cols[t];
            out.at(t, f) = FieldOps<K>::from_int(fs_, 1);
            for (std::size_t i = 0; i < rows_.size(); ++i)
                out.at(t, pivots_[i]) = -rows_[i][f];
        }
        return out;
    }

  private:
    static std::size_t first_nonzero(const std::vector<K>& v) {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero())
                return j;
        return v.size();
    }
    static void scale_row(std::vector<K>& v, const K& s) {
        for (K& x : v)
            if (!x.is_zero())
                x = x * s;
    }
    // v -= c * w
    static void axpy(std::vector<K>& v, const K& c, const std::vector<K>& w) {
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!w[j].is_zero())
                v[j] -= c * w[j];
    }
    void grow(std::vector<K>& e) const { e.resize(inserted_, K(0)); }

    void reduce_tracked(std::vector<K>& v, std::vector<K>& expr) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const K c = v[pivots_[i]];
            if (c.is_zero())
                continue;
            axpy(v, c, rows_[i]);
            if (track_) {
                grow(expr);
                std::vector<K> other = exprs_[i];
                other.resize(inserted_, K(0));
                axpy(expr, c, other);
            }
        }
    }

    FieldSpec fs_;
    std::size_t cols_;
    bool track_;
    std::size_t inserted_;
    std::vector<std::vector<K>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<K>> exprs_;
};

template <class K>
std::size_t rank(const Mat<K>& m) {
    RowBasis<K> rb(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        rb.insert(m.row(i));
    return rb.rank();
}

/*
 * Left kernel: all row vectors v with v*m = 0, plus the rank. The kernel
 * convention matches the row-vector world: rank + dim kernel = rows.
 * Computed by eliminating [m | I] and reading off rows whose m-part died.
 */
template <class K>
std::pair<std::size_t, Mat<K>> rank_kernel(const Mat<K>& m) {
    const std::size_t n = m.rows(), c = m.cols();
    const FieldSpec fs = m.field();
    // augmented rows [m_i | e_i], reduced only on the first c columns
    std::vector<std::vector<K>> rows;
    std::vector<std::size_t> pivots;  // pivot col in [0, c) for each kept row
    std::vector<std::vector<K>> kernel_rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<K> v(c + n, K(0));
        for (std::size_t j = 0; j < c; ++j)
            v[j] = m.at(i, j);
        v[c + i] = FieldOps<K>::from_int(fs, 1);
        for (std::size_t t = 0; t < rows.size(); ++t) {
            const K coef = v[pivots[t]];
            if (coef.is_zero())
                continue;
            for (std::size_t j = 0; j < c + n; ++j)
                if (!rows[t][j].is_zero())
                    v[j] -= coef * rows[t][j];
        }
        std::size_t p = c;
        for (std::size_t j = 0; j < c; ++j)
            if (!v[j].is_zero()) {
                p = j;
                break;
            }
        if (p == c) {
            kernel_rows.push_back(std::vector<K>(v.begin() + c, v.end()));
        } else {
            const K inv = v[p].inverse();
            for (K& x : v)
                if (!x.is_zero())
                    x = x * inv;
            for (std::size_t t = 0; t < rows.size(); ++t) {
                const K coef = rows[t][p];
                if (coef.is_zero())
                    continue;
                for (std::size_t j = 0; j < c + n; ++j)
                    if (!v[j].is_zero())
                        rows[t][j] -= coef * v[j];
            }
            rows.push_back(std::move(v));
            pivots.push_back(p);
        }
    }
    // canonicalize the kernel basis
    RowBasis<K> canon(fs, n);
    for (auto& kr : kernel_rows)
        canon.insert(std::move(kr));
    return {rows.size(), canon.basis_matrix()};
}

// solution space {u : E u^T = 0} of a stack of equation rows
template <class K>
Mat<K> solution_space(const Mat<K>& equations) {
    RowBasis<K> rb(equations.field(), equations.cols());
    for (std::size_t i = 0; i < equations.rows(); ++i)
        rb.insert(equations.row(i));
    return rb.solution_space();
}

/*
 * Basis of the solution space of the stacked homogeneous system
 * X*A_i = B_i*X over an unknown rows x cols matrix X.
 */
template <class K>
std::vector<Mat<K>> solve_linear(const std::vector<std::pair<Mat<K>, Mat<K>>>& constraints,
                                 FieldSpec fs, std::size_t rows, std::size_t cols) {
    RowBasis<K> rb(fs, rows * cols);
    for (const auto& [A, B] : constraints) {
        if (A.rows() != cols || B.cols() != rows)
            throw std::invalid_argument("solve_linear: constraint shape mismatch");
        if (!FieldOps<K>::matches(A.field()) || A.field() != fs || B.field() != fs)
            throw std::domain_error("solve_linear: field mismatch");
        // (X*A - B*X)[a][b'] = 0
        for (std::size_t a = 0; a < rows; ++a)
            for (std::size_t bp = 0; bp < A.cols(); ++bp) {
                std::vector<K> eq(rows * cols, K(0));
                for (std::size_t j = 0; j < cols; ++j)
                    eq[a * cols + j] += A.at(j, bp);
                if (bp < cols)
                    for (std::size_t j = 0; j < rows; ++j)
                        eq[j * cols + bp] -= B.at(a, j);
                if (!all_zero(eq))
                    rb.insert(std::move(eq));
            }
    }
    Mat<K> sol = rb.solution_space();
    std::vector<Mat<K>> out;
    out.reserve(sol.rows());
    for (std::size_t i = 0; i < sol.rows(); ++i)
        out.push_back(Mat<K>::from_vector(fs, rows, cols, sol.row(i)));
    return out;
}

/*
 * Quotient of a row span by a sub-span. Returns representatives completing
 * the subspace to the whole space, and the projection matrix that sends
 * space-basis coordinates to quotient coordinates (vanishing exactly on the
 * subspace).
 */
template <class K>
struct Quotient {
    Mat<K> complement;  // one row per quotient basis vector, in ambient coords
    Mat<K> projection;  // (#space rows) x (quotient dim), space coords -> quotient coords
};

template <class K>
Quotient<K> quotient_basis(const Mat<K>& space, const Mat<K>& subspace) {
    space.check_field(subspace);
    if (space.cols() != subspace.cols())
        throw std::invalid_argument("quotient_basis: ambient dimension mismatch");
    const FieldSpec fs = space.field();
    RowBasis<K> span(fs, space.cols(), true);
    for (std::size_t i = 0; i < subspace.rows(); ++i)
        span.insert(subspace.row(i));
    {
        RowBasis<K> space_span(fs, space.cols());
        for (std::size_t i = 0; i < space.rows(); ++i)
            space_span.insert(space.row(i));
        for (std::size_t i = 0; i < subspace.rows(); ++i)
            if (!space_span.contains(subspace.row(i)))
                throw std::domain_error("quotient_basis: subspace not contained in space");
    }
    std::vector<std::size_t> comp_rows;
    for (std::size_t i = 0; i < space.rows(); ++i)
        if (span.insert(space.row(i)))
            comp_rows.push_back(i);
    const std::size_t q = comp_rows.size();
    Mat<K> complement(fs, q, space.cols());
    for (std::size_t t = 0; t < q; ++t)
        complement.set_row(t, space.row(comp_rows[t]));
    // express every space row over [subspace rows ; complement rows]
    Mat<K> projection(fs, space.rows(), q);
    for (std::size_t i = 0; i < space.rows(); ++i) {
        auto coords = span.coords_in_inserted(space.row(i));
        if (!coords)
            throw std::logic_error("quotient_basis: row escaped its own span");
        // inserted order: subspace rows first, then the chosen complement rows
        for (std::size_t t = 0; t < q; ++t)
            projection.at(i, t) = (*coords)[subspace.rows() + comp_rows[t]];
    }
    return {std::move(complement), std::move(projection)};
}

}  // namespace dgkit
