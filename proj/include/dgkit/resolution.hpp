#pragma once

#include "complex.hpp"

#include <vector>

namespace dgkit {

/*
 * Jacobson radical, as rows spanning a subspace of A. Characteristic zero
 * uses the trace form of the left regular representation; quiver-presented
 * algebras use the arrow ideal. Structure-constant algebras over F_p are
 * rejected.
 */
template <class K>
Mat<K> radical(const AlgebraPtr<K>& A) {
    const FieldSpec fs = A->field();
    if (A->quiver_meta()) {
        const auto& meta = *A->quiver_meta();
        std::size_t count = 0;
        for (std::size_t len : meta.path_length)
            if (len >= 1)
                ++count;
        Mat<K> rows(fs, count, A->dim());
        std::size_t r = 0;
        for (std::size_t i = 0; i < A->dim(); ++i)
            if (meta.path_length[i] >= 1)
                rows.at(r++, i) = FieldOps<K>::from_int(fs, 1);
        return rows;
    }
    if (fs.kind != FieldKind::Rationals)
        throw UnsupportedRadical(
            "radical: structure-constant algebras over F_p need a quiver presentation");
    // kernel of (x, y) -> trace(L_{xy})
    Mat<K> gram(fs, A->dim(), A->dim());
    for (std::size_t i = 0; i < A->dim(); ++i)
        for (std::size_t j = 0; j < A->dim(); ++j) {
            const auto& prod = A->mult_table()[i][j];
            K tr(0);
            for (std::size_t k = 0; k < A->dim(); ++k) {
                if (prod[k].is_zero())
                    continue;
                const Mat<K>& L = A->left_mult(k);
                K diag(0);
                for (std::size_t t = 0; t < A->dim(); ++t)
                    diag += L.at(t, t);
                tr += prod[k] * diag;
            }
            gram.at(i, j) = tr;
        }
    auto [rk, ker] = rank_kernel(gram);
    (void)rk;
    return ker;
}

// rows spanning M * rad(A) inside M
template <class K>
Mat<K> module_radical_rows(const FDModule<K>& M) {
    Mat<K> rad = radical(M.algebra());
    RowBasis<K> span(M.field(), M.dim());
    for (std::size_t r = 0; r < rad.rows(); ++r) {
        Mat<K> act = M.action_of(rad.row(r));
        for (std::size_t i = 0; i < M.dim(); ++i)
            span.insert(act.row(i));
    }
    return span.basis_matrix();
}

// top(M) = M / M rad(A)
template <class K>
QuotientModule<K> top(const FDModule<K>& M) {
    return quotient_module(M, module_radical_rows(M));
}

template <class K>
struct ProjectiveCover {
    FDModule<K> cover;       // P
    ModuleHom<K> surjection; // P ->> M
    // generator rows: one row of P per indecomposable summand generator
    std::vector<std::vector<K>> generators;
};

// e_v A inside the regular module: basis paths with source v
template <class K>
Submodule<K> vertex_projective(const AlgebraPtr<K>& A, std::size_t v) {
    const auto& meta = *A->quiver_meta();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < A->dim(); ++i)
        if (meta.path_source[i] == v)
            idx.push_back(i);
    Mat<K> rows(A->field(), idx.size(), A->dim());
    for (std::size_t r = 0; r < idx.size(); ++r)
        rows.at(r, idx[r]) = FieldOps<K>::from_int(A->field(), 1);
    return submodule(FDModule<K>::regular(A), rows);
}

/*
 * Projective cover. For quiver-presented algebras this is the minimal cover
 * (P = direct sum of e_v A with top multiplicities); for structure-constant
 * algebras over the rationals it is A^t with t = dim top(M), which covers but
 * need not be minimal. Surjectivity is verified, not assumed.
 */
template <class K>
ProjectiveCover<K> projective_cover(const FDModule<K>& M) {
    const auto& A = M.algebra();
    const FieldSpec fs = M.field();
    if (M.dim() == 0)
        throw std::invalid_argument("projective_cover: zero module");
    auto t = top(M);

    FDModule<K> P = FDModule<K>::zero(A);
    std::vector<Mat<K>> block_rows;  // rows of the surjection per block
    std::vector<std::vector<K>> gens;

    if (A->quiver_meta()) {
        const auto& meta = *A->quiver_meta();
        // split the top by vertex: top * e_v
        for (std::size_t v = 0; v < meta.vertex_count; ++v) {
            Mat<K> ev_act = t.module.action(meta.vertex_idempotents[v]);
            // basis of the image of e_v on the top
            RowBasis<K> img(fs, t.module.dim());
            for (std::size_t i = 0; i < t.module.dim(); ++i)
                img.insert(ev_act.row(i));
            Mat<K> tb = img.basis_matrix();
            auto pv = vertex_projective(A, v);
            for (std::size_t c = 0; c < tb.rows(); ++c) {
                // lift the class to M and force it into M e_v
                std::vector<K> lift = mul(tb.row(c), t.reps);
                lift = mul(lift, M.action(meta.vertex_idempotents[v]));
                // block map e_v A -> M : (path p) -> lift * p
                Mat<K> f(fs, pv.module.dim(), M.dim());
                for (std::size_t r = 0; r < pv.module.dim(); ++r) {
                    // pv.rows row r is a unit vector at some basis path
                    std::size_t path_idx = 0;
                    for (std::size_t k = 0; k < A->dim(); ++k)
                        if (!pv.rows.at(r, k).is_zero())
                            path_idx = k;
                    f.set_row(r, mul(lift, M.action(path_idx)));
                }
                std::size_t offset = P.dim();
                P = FDModule<K>::direct_sum(P, pv.module);
                block_rows.push_back(std::move(f));
                std::vector<K> g(offset, K(0));
                // generator: the trivial path e_v inside this block
                for (std::size_t r = 0; r < pv.module.dim(); ++r) {
                    std::size_t path_idx = 0;
                    for (std::size_t k = 0; k < A->dim(); ++k)
                        if (!pv.rows.at(r, k).is_zero())
                            path_idx = k;
                    g.push_back(path_idx == meta.vertex_idempotents[v]
                                    ? FieldOps<K>::from_int(fs, 1)
                                    : K(0));
                }
                gens.push_back(std::move(g));
            }
        }
    } else {
        FDModule<K> reg = FDModule<K>::regular(A);
        for (std::size_t c = 0; c < t.module.dim(); ++c) {
            std::vector<K> lift = mul(unit_vector<K>(fs, t.module.dim(), c), t.reps);
            Mat<K> f(fs, A->dim(), M.dim());
            for (std::size_t r = 0; r < A->dim(); ++r)
                f.set_row(r, mul(lift, M.action(r)));
            std::size_t offset = P.dim();
            P = FDModule<K>::direct_sum(P, reg);
            block_rows.push_back(std::move(f));
            std::vector<K> g(offset, K(0));
            for (std::size_t k = 0; k < A->dim(); ++k)
                g.push_back(A->unit()[k]);
            gens.push_back(std::move(g));
        }
    }

    Mat<K> surj(fs, 0, M.dim());
    for (auto& b : block_rows)
        surj = Mat<K>::vstack(surj, b);
    for (auto& g : gens)
        g.resize(P.dim(), K(0));
    ModuleHom<K> h(P, M, surj);
    if (!h.is_linear())
        throw InvariantError("projective_cover: constructed map is not A-linear");
    if (rank(surj) != M.dim())
        throw InvariantError("projective_cover: constructed map is not surjective");
    return {std::move(P), std::move(h), std::move(gens)};
}

// kernel of the projective cover, with its induced action
template <class K>
FDModule<K> syzygy(const FDModule<K>& M) {
    if (M.dim() == 0)
        return M;
    auto pc = projective_cover(M);
    return kernel_submodule(pc.surjection).module;
}

template <class K>
struct Resolution {
    BoundedComplex<K> complex;     // projectives in degrees [-L, 0]
    ModuleHom<K> augmentation;     // P^0 ->> M
};

/*
 * Truncated projective resolution by iterated covers of kernels. With
 * pad_first_step, one redundant free summand is added to the degree-0 cover,
 * yielding a homotopy-equivalent non-minimal resolution.
 */
template <class K>
Resolution<K> projective_resolution(const FDModule<K>& M, std::size_t L,
                                    bool pad_first_step = false) {
    const auto& A = M.algebra();
    const FieldSpec fs = M.field();
    std::vector<FDModule<K>> mods;
    std::vector<Mat<K>> diffs;

    auto pc = projective_cover(M);
    FDModule<K> P0 = pc.cover;
    Mat<K> surj = pc.surjection.matrix;
    if (pad_first_step) {
        FDModule<K> reg = FDModule<K>::regular(A);
        P0 = FDModule<K>::direct_sum(P0, reg);
        surj = Mat<K>::vstack(surj, Mat<K>::zero(fs, reg.dim(), M.dim()));
    }
    ModuleHom<K> aug(P0, M, surj);
    mods.push_back(P0);

    Submodule<K> ker = kernel_submodule(aug);
    for (std::size_t step = 1; step <= L; ++step) {
        if (ker.module.dim() == 0) {
            mods.insert(mods.begin(), FDModule<K>::zero(A));
            diffs.insert(diffs.begin(), Mat<K>::zero(fs, 0, mods[1].dim()));
            continue;
        }
        auto cover = projective_cover(ker.module);
        // d : P_step -> P_{step-1} is cover followed by inclusion
        Mat<K> d = cover.surjection.matrix * ker.rows;
        diffs.insert(diffs.begin(), d);
        mods.insert(mods.begin(), cover.cover);
        ModuleHom<K> onto(cover.cover, ker.module, cover.surjection.matrix);
        ker = kernel_submodule(onto);
    }
    BoundedComplex<K> cx(A, -static_cast<int>(L), std::move(mods), std::move(diffs));
    return {std::move(cx), std::move(aug)};
}

// split test: M is projective iff its cover splits
template <class K>
bool is_projective_module(const FDModule<K>& M) {
    if (M.dim() == 0)
        return true;
    auto pc = projective_cover(M);
    // look for s : M -> P with s * surj = id
    auto section_space = hom_space(M, pc.cover);
    const std::size_t n = M.dim();
    // solve sum_i c_i (s_i * surj) = id as a linear system in the c_i
    Mat<K> eqs(M.field(), n * n, section_space.size());
    Mat<K> rhs(M.field(), n * n, 1);
    for (std::size_t t = 0; t < section_space.size(); ++t) {
        Mat<K> prod = section_space[t].matrix * pc.surjection.matrix;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                eqs.at(i * n + j, t) = prod.at(i, j);
    }
    Mat<K> id = Mat<K>::identity(M.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rhs.at(i * n + j, 0) = id.at(i, j);
    // consistent iff rank doesn't grow when appending the rhs column
    return rank(eqs) == rank(Mat<K>::hstack(eqs, rhs));
}

}  // namespace dgkit
