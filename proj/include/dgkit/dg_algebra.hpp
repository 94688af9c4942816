#pragma once

#include "hom_complex.hpp"
#include "space_complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgkit {

// outcome of an exhaustive structure check, with a witness on failure
struct CheckReport {
    bool pass = true;
    std::string witness;  // empty iff pass

    static CheckReport ok() { return {true, ""}; }
    static CheckReport fail(std::string w) { return {false, std::move(w)}; }
};

/*
 * Differential graded algebra on a bounded degree window. Products whose
 * degree falls outside the window are not stored; the validity window marks
 * the degrees where cohomology statements are certified (relevant when the
 * algebra comes from a truncated resolution).
 */
template <class K>
class DGAlgebra {
  public:
    DGAlgebra(SpaceComplex<K> carrier, std::map<std::pair<int, int>, Mat<K>> mult,
              std::vector<K> unit, int validity_lo, int validity_hi)
        : carrier_(std::move(carrier)),
          mult_(std::move(mult)),
          unit_(std::move(unit)),
          vlo_(validity_lo),
          vhi_(validity_hi) {
        if (unit_.size() != carrier_.dim(0))
            throw std::invalid_argument("DGAlgebra: unit must live in degree 0");
    }

    const SpaceComplex<K>& carrier() const { return carrier_; }
    const FieldSpec& field() const { return carrier_.field(); }
    int lo() const { return carrier_.lo(); }
    int hi() const { return carrier_.hi(); }
    std::size_t dim(int n) const { return carrier_.dim(n); }
    const std::vector<K>& unit() const { return unit_; }
    int validity_lo() const { return vlo_; }
    int validity_hi() const { return vhi_; }

    bool in_window(int n) const { return n >= lo() && n <= hi(); }

    const Mat<K>* mult(int p, int q) const {
        auto it = mult_.find({p, q});
        return it == mult_.end() ? nullptr : &it->second;
    }

    // coords of a*b for a in degree p, b in degree q (product inside window)
    std::vector<K> product(int p, const std::vector<K>& a, int q,
                           const std::vector<K>& b) const {
        const Mat<K>* m = mult(p, q);
        if (!m)
            return std::vector<K>(dim(p + q), K(0));
        std::vector<K> out(dim(p + q), K(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j].is_zero())
                    continue;
                const K c = a[i] * b[j];
                const std::size_t row = i * b.size() + j;
                for (std::size_t k = 0; k < out.size(); ++k) {
                    const K& v = m->at(row, k);
                    if (!v.is_zero())
                        out[k] += c * v;
                }
            }
        }
        return out;
    }

    CheckReport check_d_squared() const {
        for (int n = lo(); n + 2 <= hi(); ++n)
            if (!(carrier_.diff(n) * carrier_.diff(n + 1)).is_zero())
                return CheckReport::fail("d*d != 0 at degree " + std::to_string(n));
        return CheckReport::ok();
    }

    // d(ab) = d(a) b + (-1)^p a d(b), on all window basis pairs
    CheckReport check_leibniz() const {
        for (int p = lo(); p <= hi(); ++p)
            for (int q = lo(); q <= hi(); ++q) {
                if (p + q < lo() || p + q + 1 > hi())
                    continue;
                const K sign = FieldOps<K>::from_int(field(), p % 2 == 0 ? 1 : -1);
                for (std::size_t i = 0; i < dim(p); ++i)
                    for (std::size_t j = 0; j < dim(q); ++j) {
                        auto a = unit_vector<K>(field(), dim(p), i);
                        auto b = unit_vector<K>(field(), dim(q), j);
                        auto ab = product(p, a, q, b);
                        auto lhs = mul(ab, carrier_.diff(p + q));
                        auto da = mul(a, carrier_.diff(p));
                        auto db = mul(b, carrier_.diff(q));
                        auto rhs = product(p + 1, da, q, b);
                        auto second = product(p, a, q + 1, db);
                        for (std::size_t k = 0; k < rhs.size(); ++k)
                            rhs[k] += sign * second[k];
                        if (lhs != rhs)
                            return CheckReport::fail("leibniz fails on degrees (" +
                                                     std::to_string(p) + "," + std::to_string(q) +
                                                     ") basis (" + std::to_string(i) + "," +
                                                     std::to_string(j) + ")");
                    }
            }
        return CheckReport::ok();
    }

    CheckReport check_associativity() const {
        for (int p = lo(); p <= hi(); ++p)
            for (int q = lo(); q <= hi(); ++q)
                for (int r = lo(); r <= hi(); ++r) {
                    if (p + q < lo() || p + q > hi() || q + r < lo() || q + r > hi() ||
                        p + q + r < lo() || p + q + r > hi())
                        continue;
                    for (std::size_t i = 0; i < dim(p); ++i)
                        for (std::size_t j = 0; j < dim(q); ++j)
                            for (std::size_t k = 0; k < dim(r); ++k) {
                                auto a = unit_vector<K>(field(), dim(p), i);
                                auto b = unit_vector<K>(field(), dim(q), j);
                                auto c = unit_vector<K>(field(), dim(r), k);
                                auto lhs = product(p + q, product(p, a, q, b), r, c);
                                auto rhs = product(p, a, q + r, product(q, b, r, c));
                                if (lhs != rhs)
                                    return CheckReport::fail(
                                        "associativity fails on degrees (" + std::to_string(p) +
                                        "," + std::to_string(q) + "," + std::to_string(r) +
                                        ") basis (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + ")");
                            }
                }
        return CheckReport::ok();
    }

    CheckReport check_unit() const {
        if (carrier_.dim(0) > 0 && !all_zero(mul(unit_, carrier_.diff(0))))
            return CheckReport::fail("unit is not a cocycle");
        for (int p = lo(); p <= hi(); ++p)
            for (std::size_t i = 0; i < dim(p); ++i) {
                auto a = unit_vector<K>(field(), dim(p), i);
                if (product(0, unit_, p, a) != a)
                    return CheckReport::fail("1*a != a at degree " + std::to_string(p) +
                                             " basis " + std::to_string(i));
                if (product(p, a, 0, unit_) != a)
                    return CheckReport::fail("a*1 != a at degree " + std::to_string(p) +
                                             " basis " + std::to_string(i));
            }
        return CheckReport::ok();
    }

    CheckReport check_all() const {
        for (auto rep : {check_d_squared(), check_unit(), check_leibniz(), check_associativity()})
            if (!rep.pass)
                return rep;
        return CheckReport::ok();
    }

    // graded opposite: a *op b = (-1)^{|a||b|} b a, same carrier and d
    DGAlgebra opposite() const {
        std::map<std::pair<int, int>, Mat<K>> m;
        for (const auto& [pq, mat] : mult_) {
            auto [p, q] = pq;
            const K sign = FieldOps<K>::from_int(field(), (p * q) % 2 == 0 ? 1 : -1);
            Mat<K> t(field(), dim(p) * dim(q), dim(p + q));
            for (std::size_t i = 0; i < dim(p); ++i)
                for (std::size_t j = 0; j < dim(q); ++j) {
                    const Mat<K>& other = mult_.at({q, p});
                    for (std::size_t k = 0; k < dim(p + q); ++k)
                        t.at(i * dim(q) + j, k) = sign * other.at(j * dim(p) + i, k);
                }
            m[{p, q}] = std::move(t);
        }
        return DGAlgebra(carrier_, std::move(m), unit_, vlo_, vhi_);
    }

    // an ordinary algebra viewed as a dg algebra concentrated in degree 0
    static DGAlgebra from_algebra(const AlgebraPtr<K>& A) {
        SpaceComplex<K> sc(A->field(), 0, {A->dim()}, {}, {A->labels()});
        Mat<K> m(A->field(), A->dim() * A->dim(), A->dim());
        for (std::size_t i = 0; i < A->dim(); ++i)
            for (std::size_t j = 0; j < A->dim(); ++j)
                for (std::size_t k = 0; k < A->dim(); ++k)
                    m.at(i * A->dim() + j, k) = A->mult_table()[i][j][k];
        std::map<std::pair<int, int>, Mat<K>> mult;
        mult[{0, 0}] = std::move(m);
        return DGAlgebra(std::move(sc), std::move(mult), A->unit(), 0, 0);
    }

  private:
    SpaceComplex<K> carrier_;
    std::map<std::pair<int, int>, Mat<K>> mult_;
    std::vector<K> unit_;
    int vlo_, vhi_;
};

/*
 * Degree-0 multiplicative chain map between dg algebras. Validity is checked
 * exhaustively on basis pairs whose products stay inside both windows.
 */
template <class K>
class DGAlgebraMap {
  public:
    DGAlgebraMap(DGAlgebra<K> source, DGAlgebra<K> target, std::map<int, Mat<K>> comps)
        : src_(std::move(source)), tgt_(std::move(target)), comps_(std::move(comps)) {}

    const DGAlgebra<K>& source() const { return src_; }
    const DGAlgebra<K>& target() const { return tgt_; }

    Mat<K> comp(int n) const {
        auto it = comps_.find(n);
        if (it != comps_.end())
            return it->second;
        return Mat<K>::zero(src_.field(), src_.dim(n), tgt_.dim(n));
    }

    std::vector<K> apply(int n, const std::vector<K>& a) const { return mul(a, comp(n)); }

    CheckReport check() const {
        // phi d = d phi
        for (int n = src_.lo(); n <= src_.hi(); ++n) {
            Mat<K> lhs = comp(n) * tgt_.carrier().diff(n);
            Mat<K> rhs = src_.carrier().diff(n) * comp(n + 1);
            if (lhs != rhs)
                return CheckReport::fail("phi does not commute with d at degree " +
                                         std::to_string(n));
        }
        // phi(1) = 1
        if (src_.dim(0) > 0 && apply(0, src_.unit()) != tgt_.unit())
            return CheckReport::fail("phi(1) != 1");
        // phi(ab) = phi(a) phi(b)
        for (int p = src_.lo(); p <= src_.hi(); ++p)
            for (int q = src_.lo(); q <= src_.hi(); ++q) {
                if (p + q < src_.lo() || p + q > src_.hi() || p + q < tgt_.lo() ||
                    p + q > tgt_.hi())
                    continue;
                for (std::size_t i = 0; i < src_.dim(p); ++i)
                    for (std::size_t j = 0; j < src_.dim(q); ++j) {
                        auto a = unit_vector<K>(src_.field(), src_.dim(p), i);
                        auto b = unit_vector<K>(src_.field(), src_.dim(q), j);
                        auto lhs = apply(p + q, src_.product(p, a, q, b));
                        auto rhs = tgt_.product(p, apply(p, a), q, apply(q, b));
                        if (lhs != rhs)
                            return CheckReport::fail("phi(ab) != phi(a)phi(b) on degrees (" +
                                                     std::to_string(p) + "," +
                                                     std::to_string(q) + ") basis (" +
                                                     std::to_string(i) + "," +
                                                     std::to_string(j) + ")");
                    }
            }
        return CheckReport::ok();
    }

  private:
    DGAlgebra<K> src_, tgt_;
    std::map<int, Mat<K>> comps_;
};

// per-degree record of the induced map on cohomology
struct InducedRank {
    int degree;
    std::size_t dim_source, dim_target, rank;
    bool bijective() const { return dim_source == dim_target && rank == dim_source; }
};

template <class K>
struct QuasiIsoReport {
    bool is_quasi_iso = true;
    int window_lo = 0, window_hi = 0;
    std::vector<InducedRank> ranks;
};

/*
 * Checks whether the induced maps H^n(source) -> H^n(target) are bijections
 * for every n in the common validity window.
 */
template <class K>
QuasiIsoReport<K> is_quasi_isomorphism(const DGAlgebraMap<K>& phi) {
    const auto& S = phi.source();
    const auto& T = phi.target();
    int lo = std::max(S.validity_lo(), T.validity_lo());
    int hi = std::min(S.validity_hi(), T.validity_hi());
    if (lo > hi)
        throw WindowTooSmall("is_quasi_isomorphism: empty common validity window");
    QuasiIsoReport<K> rep;
    rep.window_lo = lo;
    rep.window_hi = hi;
    for (int n = lo; n <= hi; ++n) {
        Homology<K> hs(S.carrier(), n);
        Homology<K> ht(T.carrier(), n);
        Mat<K> induced(S.field(), hs.dim(), ht.dim());
        for (std::size_t t = 0; t < hs.dim(); ++t) {
            auto img = phi.apply(n, hs.representatives().row(t));
            induced.set_row(t, ht.class_of(img));
        }
        InducedRank r{n, hs.dim(), ht.dim(), rank(induced)};
        if (!r.bijective())
            rep.is_quasi_iso = false;
        rep.ranks.push_back(r);
    }
    return rep;
}

/*
 * Graded algebra (cohomology ring): per-degree dimensions with an induced
 * multiplication table on a validity window.
 */
template <class K>
class GradedAlgebra {
  public:
    GradedAlgebra(FieldSpec fs, int lo, std::vector<std::size_t> dims,
                  std::map<std::pair<int, int>, Mat<K>> mult, std::vector<K> unit,
                  int validity_lo, int validity_hi)
        : fs_(fs),
          lo_(lo),
          dims_(std::move(dims)),
          mult_(std::move(mult)),
          unit_(std::move(unit)),
          vlo_(validity_lo),
          vhi_(validity_hi) {}

    const FieldSpec& field() const { return fs_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    int validity_lo() const { return vlo_; }
    int validity_hi() const { return vhi_; }
    std::size_t dim(int n) const {
        return (n < lo() || n > hi()) ? 0 : dims_[static_cast<std::size_t>(n - lo_)];
    }
    const std::vector<K>& unit() const { return unit_; }

    std::vector<K> product(int p, const std::vector<K>& a, int q,
                           const std::vector<K>& b) const {
        auto it = mult_.find({p, q});
        std::vector<K> out(dim(p + q), K(0));
        if (it == mult_.end())
            return out;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j].is_zero())
                    continue;
                const K c = a[i] * b[j];
                for (std::size_t k = 0; k < out.size(); ++k) {
                    const K& v = it->second.at(i * b.size() + j, k);
                    if (!v.is_zero())
                        out[k] += c * v;
                }
            }
        }
        return out;
    }

    CheckReport check_associativity_unit() const {
        for (int p = vlo_; p <= vhi_; ++p) {
            for (std::size_t i = 0; i < dim(p); ++i) {
                auto a = unit_vector<K>(fs_, dim(p), i);
                if (product(0, unit_, p, a) != a || product(p, a, 0, unit_) != a)
                    return CheckReport::fail("unit law fails at degree " + std::to_string(p));
            }
            for (int q = vlo_; q <= vhi_; ++q)
                for (int r = vlo_; r <= vhi_; ++r) {
                    if (p + q < vlo_ || p + q > vhi_ || q + r < vlo_ || q + r > vhi_ ||
                        p + q + r < vlo_ || p + q + r > vhi_)
                        continue;
                    for (std::size_t i = 0; i < dim(p); ++i)
                        for (std::size_t j = 0; j < dim(q); ++j)
                            for (std::size_t k = 0; k < dim(r); ++k) {
                                auto a = unit_vector<K>(fs_, dim(p), i);
                                auto b = unit_vector<K>(fs_, dim(q), j);
                                auto c = unit_vector<K>(fs_, dim(r), k);
                                if (product(p + q, product(p, a, q, b), r, c) !=
                                    product(p, a, q + r, product(q, b, r, c)))
                                    return CheckReport::fail("associativity fails at (" +
                                                             std::to_string(p) + "," +
                                                             std::to_string(q) + "," +
                                                             std::to_string(r) + ")");
                            }
        }
        return CheckReport::ok();
    }

    std::vector<std::size_t> dims_in(int a, int b) const {
        std::vector<std::size_t> out;
        for (int n = a; n <= b; ++n)
            out.push_back(dim(n));
        return out;
    }

  private:
    FieldSpec fs_;
    int lo_;
    std::vector<std::size_t> dims_;
    std::map<std::pair<int, int>, Mat<K>> mult_;
    std::vector<K> unit_;
    int vlo_, vhi_;
};

/*
 * Cohomology ring of a dg algebra: H^n with multiplication induced on the
 * canonical representatives, restricted to the validity window.
 */
template <class K>
GradedAlgebra<K> cohomology_ring(const DGAlgebra<K>& L) {
    const FieldSpec fs = L.field();
    const int lo = L.validity_lo(), hi = L.validity_hi();
    std::map<int, Homology<K>> H;
    for (int n = lo; n <= hi; ++n)
        H.emplace(n, Homology<K>(L.carrier(), n));
    std::vector<std::size_t> dims;
    for (int n = lo; n <= hi; ++n)
        dims.push_back(H.at(n).dim());
    std::map<std::pair<int, int>, Mat<K>> mult;
    for (int p = lo; p <= hi; ++p)
        for (int q = lo; q <= hi; ++q) {
            if (p + q < lo || p + q > hi)
                continue;
            const auto& hp = H.at(p);
            const auto& hq = H.at(q);
            const auto& ht = H.at(p + q);
            Mat<K> m(fs, hp.dim() * hq.dim(), ht.dim());
            for (std::size_t i = 0; i < hp.dim(); ++i)
                for (std::size_t j = 0; j < hq.dim(); ++j) {
                    auto prod = L.product(p, hp.representatives().row(i), q,
                                          hq.representatives().row(j));
                    auto cls = ht.class_of(prod);
                    for (std::size_t k = 0; k < ht.dim(); ++k)
                        m.at(i * hq.dim() + j, k) = cls[k];
                }
            mult[{p, q}] = std::move(m);
        }
    std::vector<K> unit;
    if (lo <= 0 && 0 <= hi && L.dim(0) > 0)
        unit = H.at(0).class_of(L.unit());
    return GradedAlgebra<K>(fs, lo, std::move(dims), std::move(mult), std::move(unit), lo, hi);
}

/*
 * Endomorphism dg algebra of a bounded complex: carrier Hom(X, X) with
 * composition as multiplication ("a*b" applies b first) and the identity
 * chain map as unit. For honest bounded complexes the whole window is valid;
 * truncated-resolution callers pass their certified window.
 */
template <class K>
struct EndDG {
    HomComplex<K> hom;
    DGAlgebra<K> algebra;
};

template <class K>
EndDG<K> end_dg_algebra(const BoundedComplex<K>& X,
                        std::optional<std::pair<int, int>> validity = std::nullopt) {
    HomComplex<K> hc(X, X);
    const SpaceComplex<K>& tot = hc.total();
    const FieldSpec fs = X.field();
    int vlo = validity ? validity->first : (tot.empty() ? 0 : tot.lo());
    int vhi = validity ? validity->second : (tot.empty() ? 0 : tot.hi());

    std::map<std::pair<int, int>, Mat<K>> mult;
    for (int p = tot.lo(); p <= tot.hi(); ++p)
        for (int q = tot.lo(); q <= tot.hi(); ++q) {
            if (p + q < tot.lo() || p + q > tot.hi())
                continue;
            Mat<K> m(fs, tot.dim(p) * tot.dim(q), tot.dim(p + q));
            std::size_t arow = 0;
            for (int i = X.lo(); i <= X.hi(); ++i) {
                const auto* ha = hc.space(i, i + p);
                if (!ha)
                    continue;
                for (std::size_t s = 0; s < ha->dim(); ++s, ++arow) {
                    std::size_t brow = 0;
                    for (int j = X.lo(); j <= X.hi(); ++j) {
                        const auto* hb = hc.space(j, j + q);
                        if (!hb)
                            continue;
                        for (std::size_t t = 0; t < hb->dim(); ++t, ++brow) {
                            // (a*b) = a o b, nonzero only when i = j + q
                            if (i != j + q)
                                continue;
                            const auto* htgt = hc.space(j, j + p + q);
                            if (!htgt)
                                continue;
                            Mat<K> comp = hb->matrix(t) * ha->matrix(s);
                            auto cls = htgt->coords_of(comp);
                            std::size_t off = hc.block_offset(j, p + q);
                            for (std::size_t k = 0; k < cls.size(); ++k)
                                m.at(arow * tot.dim(q) + brow, off + k) = cls[k];
                        }
                    }
                }
            }
            mult[{p, q}] = std::move(m);
        }

    std::vector<K> unit = hc.coords_of(GradedMap<K>::identity(X));
    DGAlgebra<K> alg(tot, std::move(mult), std::move(unit), vlo, vhi);
    return {std::move(hc), std::move(alg)};
}

}  // namespace dgkit
