#pragma once

#include "complex.hpp"
#include "space_complex.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dgkit {

// basis of Hom_A(M, N) together with a coordinatizer over that basis
template <class K>
class HomSpace {
  public:
    HomSpace(const FDModule<K>& M, const FDModule<K>& N)
        : rows_(M.dim()), cols_(N.dim()), coords_(M.field(), M.dim() * N.dim(), true) {
        basis_ = hom_space(M, N);
        for (const auto& h : basis_)
            coords_.insert(h.matrix.vectorize());
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<ModuleHom<K>>& basis() const { return basis_; }
    const Mat<K>& matrix(std::size_t t) const { return basis_[t].matrix; }

    std::vector<K> coords_of(const Mat<K>& f) const {
        if (basis_.empty()) {
            if (!f.is_zero())
                throw std::logic_error("HomSpace: nonzero map in a zero Hom space");
            return {};
        }
        auto c = coords_.coords_in_inserted(f.vectorize());
        if (!c)
            throw std::logic_error("HomSpace: map is not A-linear (outside the span)");
        return *c;
    }

    Mat<K> combine(const FieldSpec& fs, const std::vector<K>& coords) const {
        Mat<K> out(fs, rows_, cols_);
        for (std::size_t t = 0; t < basis_.size(); ++t)
            if (!coords[t].is_zero())
                out = out + basis_[t].matrix.scaled(coords[t]);
        return out;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<ModuleHom<K>> basis_;
    RowBasis<K> coords_;
};

/*
 * The Hom complex of two bounded complexes: degree-n component is the direct
 * sum over i of Hom_A(X^i, Y^{i+n}), ordered by source degree then Hom-space
 * basis order, with differential d(f) = d_Y f + (-1)^{|f|+1} f d_X.
 */
template <class K>
class HomComplex {
  public:
    HomComplex(BoundedComplex<K> X, BoundedComplex<K> Y) : X_(std::move(X)), Y_(std::move(Y)) {
        if (*X_.algebra() != *Y_.algebra())
            throw std::domain_error("hom_complex: complexes over different algebras");
        const FieldSpec fs = X_.field();
        int lo = 0, hi = -1;
        if (!X_.empty() && !Y_.empty()) {
            lo = Y_.lo() - X_.hi();
            hi = Y_.hi() - X_.lo();
        }
        lo_ = lo;
        hi_ = hi;
        // Hom spaces for every in-window pair
        for (int i = X_.lo(); i <= X_.hi(); ++i)
            for (int j = Y_.lo(); j <= Y_.hi(); ++j)
                spaces_.emplace(std::make_pair(i, j), HomSpace<K>(X_.module(i), Y_.module(j)));

        std::vector<std::size_t> dims;
        std::vector<std::vector<std::string>> labels;
        for (int n = lo_; n <= hi_; ++n) {
            std::size_t d = 0;
            std::vector<std::string> lab;
            for (int i = X_.lo(); i <= X_.hi(); ++i) {
                const auto* hs = space(i, i + n);
                if (!hs)
                    continue;
                for (std::size_t t = 0; t < hs->dim(); ++t)
                    lab.push_back("(" + std::to_string(i) + "," + std::to_string(t) + ")");
                d += hs->dim();
            }
            dims.push_back(d);
            labels.push_back(std::move(lab));
        }
        std::vector<Mat<K>> diffs;
        for (int n = lo_; n < hi_; ++n) {
            Mat<K> D(fs, dims[static_cast<std::size_t>(n - lo_)],
                     dims[static_cast<std::size_t>(n + 1 - lo_)]);
            const K sign = FieldOps<K>::from_int(fs, (n + 1) % 2 == 0 ? 1 : -1);
            std::size_t row = 0;
            for (int i = X_.lo(); i <= X_.hi(); ++i) {
                const auto* hs = space(i, i + n);
                if (!hs)
                    continue;
                for (std::size_t t = 0; t < hs->dim(); ++t, ++row) {
                    const Mat<K>& F = hs->matrix(t);
                    // component d_Y after f, at source degree i
                    if (const auto* tgt = space(i, i + n + 1)) {
                        auto c = tgt->coords_of(F * Y_.diff(i + n));
                        write_block(D, row, n + 1, i, c);
                    }
                    // component f after d_X, at source degree i-1, with sign
                    if (const auto* tgt = space(i - 1, i + n)) {
                        Mat<K> val = (X_.diff(i - 1) * F).scaled(sign);
                        auto c = tgt->coords_of(val);
                        write_block(D, row, n + 1, i - 1, c);
                    }
                }
            }
            diffs.push_back(std::move(D));
        }
        total_.emplace(fs, lo_, std::move(dims), std::move(diffs), std::move(labels));
    }

    const SpaceComplex<K>& total() const { return *total_; }
    const BoundedComplex<K>& source() const { return X_; }
    const BoundedComplex<K>& target() const { return Y_; }

    // offset of the (source degree i) block inside the degree-n component
    std::size_t block_offset(int i, int n) const {
        std::size_t off = 0;
        for (int s = X_.lo(); s < i; ++s)
            if (const auto* hs = space(s, s + n))
                off += hs->dim();
        return off;
    }

    const HomSpace<K>* space(int i, int j) const {
        auto it = spaces_.find({i, j});
        if (it == spaces_.end())
            return nullptr;
        return &it->second;
    }

    GradedMap<K> to_map(int n, const std::vector<K>& coords) const {
        GradedMap<K> f(X_, Y_, n);
        std::size_t pos = 0;
        for (int i = X_.lo(); i <= X_.hi(); ++i) {
            const auto* hs = space(i, i + n);
            if (!hs || hs->dim() == 0)
                continue;
            std::vector<K> c(coords.begin() + pos, coords.begin() + pos + hs->dim());
            f.set_comp(i, hs->combine(X_.field(), c));
            pos += hs->dim();
        }
        return f;
    }

    std::vector<K> coords_of(const GradedMap<K>& f) const {
        const int n = f.degree();
        std::vector<K> out(total_->dim(n), K(0));
        std::size_t pos = 0;
        for (int i = X_.lo(); i <= X_.hi(); ++i) {
            const auto* hs = space(i, i + n);
            if (!hs)
                continue;
            auto c = hs->coords_of(f.comp(i));
            for (std::size_t t = 0; t < c.size(); ++t)
                out[pos + t] = c[t];
            pos += hs->dim();
        }
        return out;
    }

  private:
    void write_block(Mat<K>& D, std::size_t row, int target_degree, int i,
                     const std::vector<K>& coords) {
        std::size_t off = block_offset(i, target_degree);
        for (std::size_t t = 0; t < coords.size(); ++t)
            if (!coords[t].is_zero())
                D.at(row, off + t) += coords[t];
    }

    BoundedComplex<K> X_, Y_;
    int lo_ = 0, hi_ = -1;
    std::map<std::pair<int, int>, HomSpace<K>> spaces_;
    std::optional<SpaceComplex<K>> total_;
};

template <class K>
HomComplex<K> hom_complex(const BoundedComplex<K>& X, const BoundedComplex<K>& Y) {
    return HomComplex<K>(X, Y);
}

// Hom_{K(A)}(X, Y[n]): dimension and representative chain maps
template <class K>
struct KHomResult {
    std::size_t dim;
    std::vector<GradedMap<K>> representatives;
};

template <class K>
KHomResult<K> homotopy_hom(const BoundedComplex<K>& X, const BoundedComplex<K>& Y, int n) {
    HomComplex<K> hc(X, Y);
    Homology<K> H(hc.total(), n);
    KHomResult<K> out{H.dim(), {}};
    for (std::size_t t = 0; t < H.dim(); ++t)
        out.representatives.push_back(hc.to_map(n, H.representatives().row(t)));
    return out;
}

/*
 * Solve f = d(r) in the Hom complex for a closed graded map f. On failure,
 * the residual homology class witnesses non-nullhomotopy.
 */
template <class K>
struct NullHomotopyResult {
    std::optional<GradedMap<K>> witness;
    std::vector<K> residual_class;  // empty iff witness found
};

template <class K>
NullHomotopyResult<K> null_homotopy_witness(const GradedMap<K>& f) {
    if (!f.is_linear() || !f.is_closed())
        throw NotChainMap("null_homotopy_witness: map must be A-linear and closed");
    HomComplex<K> hc(f.source(), f.target());
    const int n = f.degree();
    std::vector<K> c = hc.coords_of(f);
    RowBasis<K> rows(f.source().field(), hc.total().dim(n), true);
    Mat<K> D = hc.total().diff(n - 1);
    for (std::size_t i = 0; i < D.rows(); ++i)
        rows.insert(D.row(i));
    auto expr = rows.coords_in_inserted(c);
    if (expr) {
        GradedMap<K> r = hc.to_map(n - 1, *expr);
        return {std::move(r), {}};
    }
    Homology<K> H(hc.total(), n);
    return {std::nullopt, H.class_of(c)};
}

/*
 * F_rho F(X): the degree-n piece is X^n (+) X^{n+1} with d(x, y) = (y, 0).
 * Projective-injective, hence contractible; the unit embeds X by
 * x -> (x, dx), the projection (x, y) -> y - dx lands in X[1], and the
 * identity contracts via r(x, y) = (0, x).
 */
template <class K>
struct FRho {
    BoundedComplex<K> total;
    GradedMap<K> unit;            // X -> F_rho F(X), chain map
    GradedMap<K> projection;      // F_rho F(X) -> X[1], chain map
    GradedMap<K> graded_section;  // X[1] -> F_rho F(X), graded splitting only
    GradedMap<K> contraction;     // id = dr + rd on F_rho F(X)
};

template <class K>
FRho<K> f_rho(const BoundedComplex<K>& X) {
    auto alg = X.algebra();
    const FieldSpec fs = X.field();
    if (X.empty()) {
        auto Z = BoundedComplex<K>::zero(alg);
        return {Z, GradedMap<K>(X, Z, 0), GradedMap<K>(Z, shift(X, 1), 0),
                GradedMap<K>(shift(X, 1), Z, 0), GradedMap<K>(Z, Z, -1)};
    }
    std::vector<FDModule<K>> mods;
    std::vector<Mat<K>> diffs;
    const int lo = X.lo() - 1, hi = X.hi();
    for (int n = lo; n <= hi; ++n) {
        mods.push_back(FDModule<K>::direct_sum(X.module(n), X.module(n + 1)));
        if (n < hi) {
            std::size_t rx = X.dim(n), ry = X.dim(n + 1);
            std::size_t cx = X.dim(n + 1), cy = X.dim(n + 2);
            Mat<K> d(fs, rx + ry, cx + cy);
            for (std::size_t i = 0; i < ry; ++i)
                d.at(rx + i, i) = FieldOps<K>::from_int(fs, 1);
            diffs.push_back(std::move(d));
        }
    }
    BoundedComplex<K> F(alg, lo, std::move(mods), std::move(diffs));

    GradedMap<K> unit(X, F, 0);
    for (int n = X.lo(); n <= X.hi(); ++n) {
        Mat<K> m(fs, X.dim(n), F.dim(n));
        Mat<K> d = X.diff(n);
        for (std::size_t i = 0; i < X.dim(n); ++i) {
            m.at(i, i) = FieldOps<K>::from_int(fs, 1);
            for (std::size_t j = 0; j < X.dim(n + 1); ++j)
                m.at(i, X.dim(n) + j) = d.at(i, j);
        }
        unit.set_comp(n, std::move(m));
    }
    BoundedComplex<K> X1 = shift(X, 1);
    GradedMap<K> proj(F, X1, 0);
    GradedMap<K> sect(X1, F, 0);
    for (int n = lo; n <= hi; ++n) {
        Mat<K> m(fs, F.dim(n), X.dim(n + 1));
        Mat<K> d = X.diff(n);
        for (std::size_t i = 0; i < X.dim(n); ++i)
            for (std::size_t j = 0; j < X.dim(n + 1); ++j)
                m.at(i, j) = -d.at(i, j);
        for (std::size_t j = 0; j < X.dim(n + 1); ++j)
            m.at(X.dim(n) + j, j) = FieldOps<K>::from_int(fs, 1);
        proj.set_comp(n, std::move(m));
        Mat<K> s(fs, X.dim(n + 1), F.dim(n));
        for (std::size_t j = 0; j < X.dim(n + 1); ++j)
            s.at(j, X.dim(n) + j) = FieldOps<K>::from_int(fs, 1);
        sect.set_comp(n, std::move(s));
    }
    GradedMap<K> r(F, F, -1);
    for (int n = lo; n <= hi; ++n) {
        Mat<K> m(fs, F.dim(n), F.dim(n - 1));
        for (std::size_t i = 0; i < X.dim(n); ++i)
            m.at(i, X.dim(n - 1) + i) = FieldOps<K>::from_int(fs, 1);
        r.set_comp(n, std::move(m));
    }
    return {std::move(F), std::move(unit), std::move(proj), std::move(sect), std::move(r)};
}

}  // namespace dgkit
