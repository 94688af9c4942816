#pragma once

// Test-only oracles. Everything here recomputes quantities through raw
// entrywise linear systems, independent of the Hom-space/Hom-complex
// coordinate machinery it is used to check.

#include "dgkit/complex.hpp"
#include "dgkit/space_complex.hpp"

#include <random>
#include <vector>

namespace dgkit::oracle {

// unknown layout: all entries of f^i for i over the source window, row-major
template <class K>
struct RawUnknowns {
    const BoundedComplex<K>& X;
    const BoundedComplex<K>& Y;
    int degree;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;

    RawUnknowns(const BoundedComplex<K>& X, const BoundedComplex<K>& Y, int n)
        : X(X), Y(Y), degree(n) {
        for (int i = X.lo(); i <= X.hi(); ++i) {
            offsets.push_back(total);
            total += X.dim(i) * Y.dim(i + n);
        }
    }
    std::size_t pos(int i, std::size_t r, std::size_t c) const {
        return offsets[static_cast<std::size_t>(i - X.lo())] + r * Y.dim(i + degree) + c;
    }
};

// rows expressing A-linearity of every component, on raw entries
template <class K>
void linearity_rows(const RawUnknowns<K>& u, RowBasis<K>& rb) {
    const auto& A = *u.X.algebra();
    for (int i = u.X.lo(); i <= u.X.hi(); ++i) {
        const std::size_t m = u.X.dim(i), n2 = u.Y.dim(i + u.degree);
        if (m == 0 || n2 == 0)
            continue;
        for (std::size_t b = 0; b < A.dim(); ++b) {
            const Mat<K>& rx = u.X.module(i).action(b);
            const Mat<K>& ry = u.Y.module(i + u.degree).action(b);
            // (rho_X f - f rho_Y)[r][c] = 0
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < n2; ++c) {
                    std::vector<K> eq(u.total, K(0));
                    for (std::size_t t = 0; t < m; ++t)
                        eq[u.pos(i, t, c)] += rx.at(r, t);
                    for (std::size_t t = 0; t < n2; ++t)
                        eq[u.pos(i, r, t)] -= ry.at(t, c);
                    if (!all_zero(eq))
                        rb.insert(std::move(eq));
                }
        }
    }
}

// rows expressing closedness: f d_Y + (-1)^{n+1} d_X f = 0 componentwise
template <class K>
void closedness_rows(const RawUnknowns<K>& u, RowBasis<K>& rb) {
    const FieldSpec fs = u.X.field();
    const K sign = FieldOps<K>::from_int(fs, (u.degree + 1) % 2 == 0 ? 1 : -1);
    for (int i = u.X.lo(); i <= u.X.hi() + 1; ++i) {
        // equation lives in Hom(X^i, Y^{i+n+1})
        const std::size_t m = u.X.dim(i), n2 = u.Y.dim(i + u.degree + 1);
        if (m == 0 || n2 == 0)
            continue;
        Mat<K> dY = u.Y.diff(i + u.degree);
        Mat<K> dX = u.X.diff(i);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n2; ++c) {
                std::vector<K> eq(u.total, K(0));
                if (i >= u.X.lo() && i <= u.X.hi())
                    for (std::size_t t = 0; t < u.Y.dim(i + u.degree); ++t)
                        eq[u.pos(i, r, t)] += dY.at(t, c);
                if (i + 1 >= u.X.lo() && i + 1 <= u.X.hi())
                    for (std::size_t t = 0; t < u.X.dim(i + 1); ++t)
                        eq[u.pos(i + 1, t, c)] += sign * dX.at(r, t);
                if (!all_zero(eq))
                    rb.insert(std::move(eq));
            }
    }
}

// basis of degree-n A-linear graded maps (no closedness)
template <class K>
std::vector<GradedMap<K>> raw_linear_maps(const BoundedComplex<K>& X, const BoundedComplex<K>& Y,
                                          int n) {
    RawUnknowns<K> u(X, Y, n);
    RowBasis<K> rb(X.field(), u.total);
    linearity_rows(u, rb);
    Mat<K> sol = rb.solution_space();
    std::vector<GradedMap<K>> out;
    for (std::size_t s = 0; s < sol.rows(); ++s) {
        GradedMap<K> f(X, Y, n);
        for (int i = X.lo(); i <= X.hi(); ++i) {
            Mat<K> m(X.field(), X.dim(i), Y.dim(i + n));
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m.at(r, c) = sol.at(s, u.pos(i, r, c));
            f.set_comp(i, std::move(m));
        }
        out.push_back(std::move(f));
    }
    return out;
}

// dimension of closed degree-n A-linear maps
template <class K>
std::size_t raw_closed_dim(const BoundedComplex<K>& X, const BoundedComplex<K>& Y, int n) {
    RawUnknowns<K> u(X, Y, n);
    RowBasis<K> rb(X.field(), u.total);
    linearity_rows(u, rb);
    closedness_rows(u, rb);
    return u.total - rb.rank();
}

// dimension of { d r + r d : r A-linear of degree n-1 }
template <class K>
std::size_t raw_null_homotopic_dim(const BoundedComplex<K>& X, const BoundedComplex<K>& Y,
                                   int n) {
    auto rs = raw_linear_maps(X, Y, n - 1);
    RowBasis<K> span(X.field(), RawUnknowns<K>(X, Y, n).total);
    RawUnknowns<K> u(X, Y, n);
    for (const auto& r : rs) {
        GradedMap<K> b = r.boundary();
        std::vector<K> v(u.total, K(0));
        for (int i = X.lo(); i <= X.hi(); ++i) {
            Mat<K> m = b.comp(i);
            for (std::size_t rr = 0; rr < m.rows(); ++rr)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    v[u.pos(i, rr, c)] = m.at(rr, c);
        }
        if (!all_zero(v))
            span.insert(std::move(v));
    }
    return span.rank();
}

// independently computed dim of {degree-n chain maps}/{null-homotopic}
template <class K>
std::size_t raw_homotopy_hom_dim(const BoundedComplex<K>& X, const BoundedComplex<K>& Y, int n) {
    return raw_closed_dim(X, Y, n) - raw_null_homotopic_dim(X, Y, n);
}

// ---- randomized inputs -------------------------------------------------

// random quotient module of A^copies, via an action-closed random span
template <class K>
FDModule<K> random_module(const AlgebraPtr<K>& A, std::mt19937_64& rng, std::size_t max_dim) {
    const FieldSpec fs = A->field();
    std::uniform_int_distribution<long long> coeff(-2, 2);
    const std::size_t copies = 1 + rng() % 2;
    FDModule<K> free = FDModule<K>::regular(A);
    for (std::size_t c = 1; c < copies; ++c)
        free = FDModule<K>::direct_sum(free, FDModule<K>::regular(A));
    for (int attempt = 0; attempt < 16; ++attempt) {
        RowBasis<K> span(fs, free.dim());
        std::size_t seeds = 1 + rng() % 3;
        std::vector<std::vector<K>> frontier;
        for (std::size_t s = 0; s < seeds; ++s) {
            std::vector<K> v(free.dim());
            for (auto& x : v)
                x = FieldOps<K>::from_int(fs, coeff(rng));
            if (span.insert(v))
                frontier.push_back(v);
        }
        while (!frontier.empty()) {
            std::vector<std::vector<K>> next;
            for (const auto& v : frontier)
                for (std::size_t b = 0; b < A->dim(); ++b) {
                    auto w = mul(v, free.action(b));
                    if (span.insert(w))
                        next.push_back(w);
                }
            frontier = std::move(next);
        }
        auto M = quotient_module(free, span.basis_matrix()).module;
        if (M.dim() > 0 && M.dim() <= max_dim)
            return M;
    }
    return FDModule<K>::regular(A);  // fallback, rarely hit
}

// random bounded complex: random modules, differentials solved to square to zero
template <class K>
BoundedComplex<K> random_complex(const AlgebraPtr<K>& A, std::mt19937_64& rng,
                                 std::size_t window, std::size_t max_dim) {
    const FieldSpec fs = A->field();
    std::uniform_int_distribution<long long> coeff(-1, 1);
    const int lo = -static_cast<int>(rng() % window);
    std::vector<FDModule<K>> mods;
    for (std::size_t i = 0; i < window; ++i)
        mods.push_back(random_module(A, rng, max_dim));
    std::vector<Mat<K>> diffs;
    Mat<K> prev(fs, 0, mods[0].dim());
    for (std::size_t i = 0; i + 1 < window; ++i) {
        // the A-linear maps F with prev * F = 0: solve for hom-space combos
        auto cand = hom_space(mods[i], mods[i + 1]);
        std::vector<Mat<K>> good;
        if (!cand.empty()) {
            const std::size_t rows = prev.rows() * mods[i + 1].dim();
            Mat<K> eqs(fs, rows, cand.size());
            for (std::size_t t = 0; t < cand.size(); ++t) {
                Mat<K> pm = prev * cand[t].matrix;
                for (std::size_t r = 0; r < pm.rows(); ++r)
                    for (std::size_t c = 0; c < pm.cols(); ++c)
                        eqs.at(r * pm.cols() + c, t) = pm.at(r, c);
            }
            Mat<K> sol = solution_space(eqs);
            for (std::size_t s = 0; s < sol.rows(); ++s) {
                Mat<K> f(fs, mods[i].dim(), mods[i + 1].dim());
                for (std::size_t t = 0; t < cand.size(); ++t)
                    if (!sol.at(s, t).is_zero())
                        f = f + cand[t].matrix.scaled(sol.at(s, t));
                good.push_back(std::move(f));
            }
        }
        Mat<K> d(fs, mods[i].dim(), mods[i + 1].dim());
        for (const auto& g : good)
            d = d + g.scaled(FieldOps<K>::from_int(fs, coeff(rng)));
        diffs.push_back(d);
        prev = diffs.back();
    }
    return BoundedComplex<K>(A, lo, std::move(mods), std::move(diffs));
}

}  // namespace dgkit::oracle
