#pragma once

#include "algebra.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace dgkit {

/*
 * Finite-dimensional right module, one action matrix per algebra basis
 * element. Row convention: m * rho(b) is the action of b on the row vector m.
 */
template <class K>
class FDModule {
  public:
    FDModule() = default;
    FDModule(AlgebraPtr<K> alg, std::size_t dim, std::vector<Mat<K>> action)
        : alg_(std::move(alg)), dim_(dim), action_(std::move(action)) {
        validate();
    }

    const AlgebraPtr<K>& algebra() const { return alg_; }
    std::size_t dim() const { return dim_; }
    const Mat<K>& action(std::size_t i) const { return action_[i]; }
    const FieldSpec& field() const { return alg_->field(); }

    // action of an arbitrary algebra element given by coordinates
    Mat<K> action_of(const std::vector<K>& coords) const {
        Mat<K> m(field(), dim_, dim_);
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!coords[i].is_zero())
                m = m + action_[i].scaled(coords[i]);
        return m;
    }

    static FDModule zero(AlgebraPtr<K> alg) {
        std::vector<Mat<K>> act(alg->dim(), Mat<K>(alg->field(), 0, 0));
        return FDModule(std::move(alg), 0, std::move(act));
    }

    // the regular module A_A
    static FDModule regular(AlgebraPtr<K> alg) {
        std::vector<Mat<K>> act;
        act.reserve(alg->dim());
        for (std::size_t i = 0; i < alg->dim(); ++i)
            act.push_back(alg->right_mult(i));
        const std::size_t d = alg->dim();
        return FDModule(std::move(alg), d, std::move(act));
    }

    static FDModule direct_sum(const FDModule& a, const FDModule& b) {
        if (*a.algebra() != *b.algebra())
            throw std::domain_error("FDModule: direct sum over different algebras");
        std::vector<Mat<K>> act;
        for (std::size_t i = 0; i < a.algebra()->dim(); ++i)
            act.push_back(Mat<K>::diag_sum(a.action(i), b.action(i)));
        return FDModule(a.algebra(), a.dim() + b.dim(), std::move(act));
    }

    friend bool operator==(const FDModule& a, const FDModule& b) {
        return *a.alg_ == *b.alg_ && a.dim_ == b.dim_ && a.action_ == b.action_;
    }
    friend bool operator!=(const FDModule& a, const FDModule& b) { return !(a == b); }

  private:
    void validate() const {
        const auto& A = *alg_;
        if (action_.size() != A.dim())
            throw std::invalid_argument("FDModule: one action matrix per basis element required");
        for (const auto& m : action_)
            if (m.rows() != dim_ || m.cols() != dim_)
                throw std::invalid_argument("FDModule: action matrix shape mismatch");
        if (dim_ == 0)
            return;
        Mat<K> u = action_of(A.unit());
        if (u != Mat<K>::identity(field(), dim_))
            throw UnitViolation("FDModule: unit does not act as identity");
        for (std::size_t i = 0; i < A.dim(); ++i)
            for (std::size_t j = 0; j < A.dim(); ++j) {
                Mat<K> lhs = action_[i] * action_[j];
                Mat<K> rhs = action_of(A.mult_table()[i][j]);
                if (lhs != rhs)
                    throw InvariantError("FDModule: module law fails on (" + A.labels()[i] +
                                         ", " + A.labels()[j] + ")");
            }
    }

    AlgebraPtr<K> alg_;
    std::size_t dim_ = 0;
    std::vector<Mat<K>> action_;
};

// A-linear map between right modules, as a source-dim x target-dim matrix
template <class K>
struct ModuleHom {
    FDModule<K> source, target;
    Mat<K> matrix;

    ModuleHom() = default;
    ModuleHom(FDModule<K> src, FDModule<K> tgt, Mat<K> m)
        : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
        if (matrix.rows() != source.dim() || matrix.cols() != target.dim())
            throw std::invalid_argument("ModuleHom: matrix shape mismatch");
    }

    bool is_linear() const {
        for (std::size_t i = 0; i < source.algebra()->dim(); ++i)
            if (source.action(i) * matrix != matrix * target.action(i))
                return false;
        return true;
    }

    static ModuleHom identity(const FDModule<K>& m) {
        return ModuleHom(m, m, Mat<K>::identity(m.field(), m.dim()));
    }

    // f then g
    friend ModuleHom compose(const ModuleHom& f, const ModuleHom& g) {
        return ModuleHom(f.source, g.target, f.matrix * g.matrix);
    }
};

// basis of Hom_A(M, N), solved from the commuting constraints
template <class K>
std::vector<ModuleHom<K>> hom_space(const FDModule<K>& M, const FDModule<K>& N) {
    if (*M.algebra() != *N.algebra())
        throw std::domain_error("hom_space: modules over different algebras");
    std::vector<std::pair<Mat<K>, Mat<K>>> cs;
    for (std::size_t i = 0; i < M.algebra()->dim(); ++i)
        cs.push_back({N.action(i), M.action(i)});
    auto mats = solve_linear(cs, M.field(), M.dim(), N.dim());
    std::vector<ModuleHom<K>> out;
    out.reserve(mats.size());
    for (auto& m : mats)
        out.push_back(ModuleHom<K>(M, N, std::move(m)));
    return out;
}

/*
 * Submodule spanned by the given rows (must be action-stable); the rows are
 * canonicalized and the action is rewritten in the new coordinates. `rows`
 * maps submodule coordinates to ambient coordinates.
 */
template <class K>
struct Submodule {
    FDModule<K> module;
    Mat<K> rows;  // dim(sub) x dim(ambient)
};

template <class K>
Submodule<K> submodule(const FDModule<K>& M, const Mat<K>& span_rows) {
    RowBasis<K> rb(M.field(), M.dim(), true);
    for (std::size_t i = 0; i < span_rows.rows(); ++i)
        rb.insert(span_rows.row(i));
    Mat<K> basis = rb.basis_matrix();
    const std::size_t s = basis.rows();
    RowBasis<K> coords(M.field(), M.dim(), true);
    for (std::size_t i = 0; i < s; ++i)
        coords.insert(basis.row(i));
    std::vector<Mat<K>> act;
    for (std::size_t b = 0; b < M.algebra()->dim(); ++b) {
        Mat<K> image = basis * M.action(b);
        Mat<K> a(M.field(), s, s);
        for (std::size_t i = 0; i < s; ++i) {
            auto c = coords.coords_in_inserted(image.row(i));
            if (!c)
                throw InvariantError("submodule: span is not action-stable");
            a.set_row(i, *c);
        }
        act.push_back(std::move(a));
    }
    return {FDModule<K>(M.algebra(), s, std::move(act)), std::move(basis)};
}

/*
 * Quotient module M / span(sub_rows). `projection` maps ambient coordinates
 * to quotient coordinates; `reps` lifts quotient basis vectors to M.
 */
template <class K>
struct QuotientModule {
    FDModule<K> module;
    Mat<K> projection;  // dim(M) x dim(quotient)
    Mat<K> reps;        // dim(quotient) x dim(M)
};

template <class K>
QuotientModule<K> quotient_module(const FDModule<K>& M, const Mat<K>& sub_rows) {
    auto q = quotient_basis(Mat<K>::identity(M.field(), M.dim()), sub_rows);
    const std::size_t s = q.complement.rows();
    std::vector<Mat<K>> act;
    for (std::size_t b = 0; b < M.algebra()->dim(); ++b)
        act.push_back(q.complement * M.action(b) * q.projection);
    return {FDModule<K>(M.algebra(), s, std::move(act)), std::move(q.projection),
            std::move(q.complement)};
}

// kernel of an A-linear map, as a submodule of the source
template <class K>
Submodule<K> kernel_submodule(const ModuleHom<K>& f) {
    auto [r, ker] = rank_kernel(f.matrix);
    (void)r;
    return submodule(f.source, ker);
}

}  // namespace dgkit
