#pragma once

#include "errors.hpp"
#include "rowspace.hpp"

#include <string>
#include <vector>

namespace dgkit {

/*
 * Bounded complex of plain vector spaces (no module structure): the carrier
 * of Hom complexes, dg algebras and dg modules. Elements of the degree-n
 * component are row vectors of length dim(n); d acts on the right.
 */
template <class K>
class SpaceComplex {
  public:
    SpaceComplex(FieldSpec fs, int lo, std::vector<std::size_t> dims,
                 std::vector<Mat<K>> diffs,
                 std::vector<std::vector<std::string>> labels = {})
        : fs_(fs), lo_(lo), dims_(std::move(dims)), labels_(std::move(labels)) {
        if (dims_.empty()) {
            lo_ = 0;
            hi_ = -1;
            return;
        }
        hi_ = lo_ + static_cast<int>(dims_.size()) - 1;
        if (diffs.size() + 1 != dims_.size())
            throw std::invalid_argument("SpaceComplex: need one differential per adjacent pair");
        for (std::size_t i = 0; i < diffs.size(); ++i) {
            if (diffs[i].rows() != dims_[i] || diffs[i].cols() != dims_[i + 1])
                throw std::invalid_argument("SpaceComplex: differential shape mismatch");
            diffs_.push_back(std::move(diffs[i]));
        }
        for (std::size_t i = 0; i + 1 < diffs_.size(); ++i)
            if (!(diffs_[i] * diffs_[i + 1]).is_zero())
                throw InvariantError("SpaceComplex: d*d != 0 at degree " +
                                     std::to_string(lo_ + static_cast<int>(i)));
    }

    static SpaceComplex zero(FieldSpec fs) { return SpaceComplex(fs, 0, {}, {}); }

    const FieldSpec& field() const { return fs_; }
    bool empty() const { return dims_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::size_t dim(int n) const {
        return (n < lo_ || n > hi_) ? 0 : dims_[static_cast<std::size_t>(n - lo_)];
    }
    Mat<K> diff(int n) const {
        if (n < lo_ || n >= hi_)
            return Mat<K>::zero(fs_, dim(n), dim(n + 1));
        return diffs_[static_cast<std::size_t>(n - lo_)];
    }
    const std::vector<std::string>* labels(int n) const {
        if (labels_.empty() || n < lo_ || n > hi_)
            return nullptr;
        return &labels_[static_cast<std::size_t>(n - lo_)];
    }
    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto d : dims_)
            t += d;
        return t;
    }

  private:
    FieldSpec fs_;
    int lo_ = 0, hi_ = -1;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<Mat<K>> diffs_;
};

/*
 * H^n = ker d^n / im d^{n-1}, with chosen cycle representatives and a
 * coordinatizer for classes of arbitrary cycles. Representative choice is
 * canonical: first complement rows of the kernel basis against the image, in
 * RREF insertion order.
 */
template <class K>
class Homology {
  public:
    Homology(const SpaceComplex<K>& S, int n)
        : fs_(S.field()), comp_dim_(S.dim(n)), span_(S.field(), S.dim(n), true) {
        Mat<K> d_out = S.diff(n);
        Mat<K> d_in = S.diff(n - 1);
        auto [r, cycles] = rank_kernel(d_out);
        (void)r;
        image_rows_ = d_in.rows();
        for (std::size_t i = 0; i < d_in.rows(); ++i)
            span_.insert(d_in.row(i));
        std::vector<std::size_t> rep_rows;
        for (std::size_t i = 0; i < cycles.rows(); ++i)
            if (span_.insert(cycles.row(i)))
                rep_rows.push_back(i);
        reps_ = Mat<K>(fs_, rep_rows.size(), comp_dim_);
        for (std::size_t t = 0; t < rep_rows.size(); ++t)
            reps_.set_row(t, cycles.row(rep_rows[t]));
        rep_positions_ = rep_rows;
        cycle_count_ = cycles.rows();
    }

    std::size_t dim() const { return reps_.rows(); }
    const Mat<K>& representatives() const { return reps_; }

    // H-class coordinates of a cycle (caller guarantees v is a cycle)
    std::vector<K> class_of(const std::vector<K>& cycle) const {
        auto c = span_.coords_in_inserted(cycle);
        if (!c)
            throw std::logic_error("Homology: vector is not in cycles + boundaries");
        std::vector<K> out(dim(), K(0));
        for (std::size_t t = 0; t < dim(); ++t)
            out[t] = (*c)[image_rows_ + rep_positions_[t]];
        return out;
    }

  private:
    FieldSpec fs_;
    std::size_t comp_dim_;
    RowBasis<K> span_;  // image rows, then cycle rows (tracked)
    Mat<K> reps_;
    std::vector<std::size_t> rep_positions_;
    std::size_t image_rows_ = 0;
    std::size_t cycle_count_ = 0;
};

template <class K>
Homology<K> homology(const SpaceComplex<K>& S, int n) {
    return Homology<K>(S, n);
}

template <class K>
std::vector<std::size_t> homology_dims(const SpaceComplex<K>& S, int lo, int hi) {
    std::vector<std::size_t> out;
    for (int n = lo; n <= hi; ++n)
        out.push_back(Homology<K>(S, n).dim());
    return out;
}

}  // namespace dgkit
