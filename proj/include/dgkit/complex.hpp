#pragma once

#include "module.hpp"

#include <vector>

namespace dgkit {

/*
 * Bounded complex of right A-modules with A-linear differentials
 * d^i : X^i -> X^{i+1}, d^{i+1} after d^i = 0. Degrees outside the window are
 * implicitly zero.
 */
template <class K>
class BoundedComplex {
  public:
    BoundedComplex(AlgebraPtr<K> alg, int lo, std::vector<FDModule<K>> modules,
                   std::vector<Mat<K>> diffs)
        : alg_(std::move(alg)),
          lo_(lo),
          modules_(std::move(modules)),
          zero_(FDModule<K>::zero(alg_)) {
        if (modules_.empty()) {
            lo_ = 0;
            hi_ = -1;
            return;
        }
        hi_ = lo_ + static_cast<int>(modules_.size()) - 1;
        if (diffs.size() + 1 != modules_.size())
            throw std::invalid_argument("BoundedComplex: need one differential per adjacent pair");
        for (std::size_t i = 0; i < diffs.size(); ++i)
            diffs_.push_back(ModuleHom<K>(modules_[i], modules_[i + 1], std::move(diffs[i])));
        validate();
    }

    // single module concentrated in one degree
    static BoundedComplex stalk(FDModule<K> m, int degree = 0) {
        auto alg = m.algebra();
        return BoundedComplex(alg, degree, {std::move(m)}, {});
    }

    static BoundedComplex zero(AlgebraPtr<K> alg) { return BoundedComplex(alg, 0, {}, {}); }

    const AlgebraPtr<K>& algebra() const { return alg_; }
    const FieldSpec& field() const { return alg_->field(); }
    bool empty() const { return modules_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    const FDModule<K>& module(int n) const {
        if (n < lo_ || n > hi_)
            return zero_;
        return modules_[static_cast<std::size_t>(n - lo_)];
    }
    std::size_t dim(int n) const { return (n < lo_ || n > hi_) ? 0 : module(n).dim(); }

    // d^n : X^n -> X^{n+1}, zero matrix outside the window
    Mat<K> diff(int n) const {
        if (n < lo_ || n >= hi_)
            return Mat<K>::zero(field(), dim(n), dim(n + 1));
        return diffs_[static_cast<std::size_t>(n - lo_)].matrix;
    }

    std::size_t total_dim() const {
        std::size_t t = 0;
        for (const auto& m : modules_)
            t += m.dim();
        return t;
    }

    friend bool operator==(const BoundedComplex& a, const BoundedComplex& b) {
        if (*a.alg_ != *b.alg_)
            return false;
        int lo = std::min(a.empty() ? 0 : a.lo_, b.empty() ? 0 : b.lo_);
        int hi = std::max(a.empty() ? -1 : a.hi_, b.empty() ? -1 : b.hi_);
        for (int n = lo; n <= hi; ++n) {
            if (a.module(n) != b.module(n))
                return false;
            if (n < hi && a.diff(n) != b.diff(n))
                return false;
        }
        return true;
    }
    friend bool operator!=(const BoundedComplex& a, const BoundedComplex& b) {
        return !(a == b);
    }

  private:
    void validate() const {
        for (const auto& d : diffs_)
            if (!d.is_linear())
                throw InvariantError("BoundedComplex: differential is not A-linear");
        for (std::size_t i = 0; i + 1 < diffs_.size(); ++i)
            if (!(diffs_[i].matrix * diffs_[i + 1].matrix).is_zero())
                throw InvariantError("BoundedComplex: d*d != 0 at degree " +
                                     std::to_string(lo_ + static_cast<int>(i)));
    }

    AlgebraPtr<K> alg_;
    int lo_ = 0, hi_ = -1;
    std::vector<FDModule<K>> modules_;
    std::vector<ModuleHom<K>> diffs_;
    FDModule<K> zero_;
};

/*
 * Homogeneous degree-n map of complexes: components f^i : X^i -> Y^{i+n},
 * each A-linear. Missing components are zero.
 */
template <class K>
class GradedMap {
  public:
    GradedMap(BoundedComplex<K> source, BoundedComplex<K> target, int degree)
        : src_(std::move(source)), tgt_(std::move(target)), deg_(degree) {
        for (int n = src_.lo(); n <= src_.hi(); ++n)
            comps_.push_back(
                Mat<K>::zero(src_.field(), src_.dim(n), tgt_.dim(n + deg_)));
    }

    const BoundedComplex<K>& source() const { return src_; }
    const BoundedComplex<K>& target() const { return tgt_; }
    int degree() const { return deg_; }

    Mat<K> comp(int n) const {
        if (src_.empty() || n < src_.lo() || n > src_.hi())
            return Mat<K>::zero(src_.field(), src_.dim(n), tgt_.dim(n + deg_));
        return comps_[static_cast<std::size_t>(n - src_.lo())];
    }
    void set_comp(int n, Mat<K> m) {
        if (m.rows() != src_.dim(n) || m.cols() != tgt_.dim(n + deg_))
            throw std::invalid_argument("GradedMap: component shape mismatch at degree " +
                                        std::to_string(n));
        if (n < src_.lo() || n > src_.hi()) {
            if (!m.is_zero())
                throw std::invalid_argument("GradedMap: nonzero component outside the window");
            return;
        }
        comps_[static_cast<std::size_t>(n - src_.lo())] = std::move(m);
    }

    bool is_linear() const {
        for (int n = src_.lo(); n <= src_.hi(); ++n) {
            ModuleHom<K> h(src_.module(n), tgt_.module(n + deg_), comp(n));
            if (!h.is_linear())
                return false;
        }
        return true;
    }

    // d_Y after f minus (-1)^deg f after d_X; zero iff f is closed
    GradedMap boundary() const {
        GradedMap out(src_, tgt_, deg_ + 1);
        const K sign = FieldOps<K>::from_int(src_.field(), (deg_ + 1) % 2 == 0 ? 1 : -1);
        for (int n = src_.lo(); n <= src_.hi(); ++n) {
            Mat<K> m = comp(n) * tgt_.diff(n + deg_) + (src_.diff(n) * comp(n + 1)).scaled(sign);
            out.set_comp(n, std::move(m));
        }
        return out;
    }
    bool is_closed() const {
        GradedMap b = boundary();
        for (int n = src_.lo(); n <= src_.hi(); ++n)
            if (!b.comp(n).is_zero())
                return false;
        return true;
    }
    bool is_chain_map() const { return deg_ == 0 && is_linear() && is_closed(); }

    bool is_zero() const {
        for (const auto& m : comps_)
            if (!m.is_zero())
                return false;
        return true;
    }

    static GradedMap identity(const BoundedComplex<K>& x) {
        GradedMap f(x, x, 0);
        for (int n = x.lo(); n <= x.hi(); ++n)
            f.set_comp(n, Mat<K>::identity(x.field(), x.dim(n)));
        return f;
    }

    // f then g
    friend GradedMap compose(const GradedMap& f, const GradedMap& g) {
        GradedMap out(f.src_, g.tgt_, f.deg_ + g.deg_);
        for (int n = f.src_.lo(); n <= f.src_.hi(); ++n)
            out.set_comp(n, f.comp(n) * g.comp(n + f.deg_));
        return out;
    }

    friend GradedMap operator+(const GradedMap& f, const GradedMap& g) {
        GradedMap out(f.src_, f.tgt_, f.deg_);
        for (int n = f.src_.lo(); n <= f.src_.hi(); ++n)
            out.set_comp(n, f.comp(n) + g.comp(n));
        return out;
    }
    friend GradedMap operator-(const GradedMap& f, const GradedMap& g) {
        GradedMap out(f.src_, f.tgt_, f.deg_);
        for (int n = f.src_.lo(); n <= f.src_.hi(); ++n)
            out.set_comp(n, f.comp(n) - g.comp(n));
        return out;
    }

  private:
    BoundedComplex<K> src_, tgt_;
    int deg_;
    std::vector<Mat<K>> comps_;  // indexed by source window
};

// X[n]: degree i holds X^{n+i}; differentials pick up the sign (-1)^n
template <class K>
BoundedComplex<K> shift(const BoundedComplex<K>& x, int n) {
    if (x.empty())
        return x;
    std::vector<FDModule<K>> mods;
    std::vector<Mat<K>> diffs;
    const K sign = FieldOps<K>::from_int(x.field(), n % 2 == 0 ? 1 : -1);
    for (int i = x.lo() - n; i <= x.hi() - n; ++i) {
        mods.push_back(x.module(i + n));
        if (i < x.hi() - n)
            diffs.push_back(x.diff(i + n).scaled(sign));
    }
    return BoundedComplex<K>(x.algebra(), x.lo() - n, std::move(mods), std::move(diffs));
}

template <class K>
struct DirectSumComplex {
    BoundedComplex<K> total;
    std::vector<GradedMap<K>> injections;
    std::vector<GradedMap<K>> projections;
};

template <class K>
DirectSumComplex<K> direct_sum(const std::vector<BoundedComplex<K>>& xs) {
    if (xs.empty())
        throw std::invalid_argument("direct_sum: empty list");
    auto alg = xs[0].algebra();
    bool all_empty = true;
    int lo = 0, hi = -1;
    for (const auto& x : xs) {
        if (*x.algebra() != *alg)
            throw std::domain_error("direct_sum: complexes over different algebras");
        if (!x.empty()) {
            lo = all_empty ? x.lo() : std::min(lo, x.lo());
            hi = all_empty ? x.hi() : std::max(hi, x.hi());
            all_empty = false;
        }
    }
    if (all_empty)
        return {BoundedComplex<K>::zero(alg), {}, {}};

    std::vector<FDModule<K>> mods;
    std::vector<Mat<K>> diffs;
    for (int n = lo; n <= hi; ++n) {
        FDModule<K> m = FDModule<K>::zero(alg);
        for (const auto& x : xs)
            m = FDModule<K>::direct_sum(m, x.module(n));
        mods.push_back(std::move(m));
        if (n < hi) {
            Mat<K> d(alg->field(), 0, 0);
            for (const auto& x : xs)
                d = Mat<K>::diag_sum(d, x.diff(n));
            diffs.push_back(std::move(d));
        }
    }
    BoundedComplex<K> total(alg, lo, std::move(mods), std::move(diffs));

    DirectSumComplex<K> out{total, {}, {}};
    for (std::size_t t = 0; t < xs.size(); ++t) {
        GradedMap<K> inj(xs[t], total, 0);
        GradedMap<K> prj(total, xs[t], 0);
        for (int n = lo; n <= hi; ++n) {
            std::size_t offset = 0;
            for (std::size_t s = 0; s < t; ++s)
                offset += xs[s].dim(n);
            Mat<K> in(alg->field(), xs[t].dim(n), total.dim(n));
            Mat<K> pr(alg->field(), total.dim(n), xs[t].dim(n));
            for (std::size_t i = 0; i < xs[t].dim(n); ++i) {
                in.at(i, offset + i) = FieldOps<K>::from_int(alg->field(), 1);
                pr.at(offset + i, i) = FieldOps<K>::from_int(alg->field(), 1);
            }
            inj.set_comp(n, std::move(in));
            prj.set_comp(n, std::move(pr));
        }
        out.injections.push_back(std::move(inj));
        out.projections.push_back(std::move(prj));
    }
    return out;
}

/*
 * Mapping cone of a chain map f : X -> Y, with the canonical triangle maps
 * g : Y -> C and h : C -> X[1], and the explicit null-homotopy of g after f.
 */
template <class K>
struct Cone {
    BoundedComplex<K> total;       // C^n = X^{n+1} (+) Y^n
    GradedMap<K> include_target;   // g : Y -> C
    GradedMap<K> project_shift;    // h : C -> X[1]
    GradedMap<K> comp_null_homotopy;  // r with g.f = dr + rd
};

template <class K>
Cone<K> cone(const GradedMap<K>& f) {
    if (f.degree() != 0 || !f.is_chain_map())
        throw NotChainMap("cone: input must be a degree-0 chain map");
    const auto& X = f.source();
    const auto& Y = f.target();
    auto alg = X.algebra();
    const FieldSpec fs = alg->field();

    int lo = 0, hi = -1;
    bool none = true;
    auto touch = [&](int a, int b) {
        if (none) {
            lo = a;
            hi = b;
            none = false;
        } else {
            lo = std::min(lo, a);
            hi = std::max(hi, b);
        }
    };
    if (!X.empty())
        touch(X.lo() - 1, X.hi() - 1);
    if (!Y.empty())
        touch(Y.lo(), Y.hi());

    std::vector<FDModule<K>> mods;
    std::vector<Mat<K>> diffs;
    for (int n = lo; n <= hi && !none; ++n) {
        mods.push_back(FDModule<K>::direct_sum(X.module(n + 1), Y.module(n)));
        if (n < hi) {
            // d(x, y) = (-x d_X, x f + y d_Y)
            std::size_t rx = X.dim(n + 1), ry = Y.dim(n);
            std::size_t cx = X.dim(n + 2), cy = Y.dim(n + 1);
            Mat<K> d(fs, rx + ry, cx + cy);
            Mat<K> dx = X.diff(n + 1), fv = f.comp(n + 1), dy = Y.diff(n);
            for (std::size_t i = 0; i < rx; ++i) {
                for (std::size_t j = 0; j < cx; ++j)
                    d.at(i, j) = -dx.at(i, j);
                for (std::size_t j = 0; j < cy; ++j)
                    d.at(i, cx + j) = fv.at(i, j);
            }
            for (std::size_t i = 0; i < ry; ++i)
                for (std::size_t j = 0; j < cy; ++j)
                    d.at(rx + i, cx + j) = dy.at(i, j);
            diffs.push_back(std::move(d));
        }
    }
    BoundedComplex<K> C = none ? BoundedComplex<K>::zero(alg)
                               : BoundedComplex<K>(alg, lo, std::move(mods), std::move(diffs));

    GradedMap<K> g(Y, C, 0);
    for (int n = Y.lo(); n <= Y.hi(); ++n) {
        Mat<K> m(fs, Y.dim(n), C.dim(n));
        std::size_t off = X.dim(n + 1);
        for (std::size_t i = 0; i < Y.dim(n); ++i)
            m.at(i, off + i) = FieldOps<K>::from_int(fs, 1);
        g.set_comp(n, std::move(m));
    }
    BoundedComplex<K> X1 = shift(X, 1);
    GradedMap<K> h(C, X1, 0);
    for (int n = C.lo(); n <= C.hi(); ++n) {
        Mat<K> m(fs, C.dim(n), X.dim(n + 1));
        for (std::size_t i = 0; i < X.dim(n + 1); ++i)
            m.at(i, i) = FieldOps<K>::from_int(fs, 1);
        h.set_comp(n, std::move(m));
    }
    // r(x) = (x, 0) in C^{n-1} = X^n (+) Y^{n-1} satisfies g.f = dr + rd
    GradedMap<K> r(X, C, -1);
    for (int n = X.lo(); n <= X.hi(); ++n) {
        Mat<K> m(fs, X.dim(n), C.dim(n - 1));
        for (std::size_t i = 0; i < X.dim(n); ++i)
            m.at(i, i) = FieldOps<K>::from_int(fs, 1);
        r.set_comp(n, std::move(m));
    }
    return {std::move(C), std::move(g), std::move(h), std::move(r)};
}

}  // namespace dgkit
