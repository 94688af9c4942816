#pragma once

#include "errors.hpp"
#include "rowspace.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dgkit {

// quiver bookkeeping attached to a path-basis algebra
struct QuiverMeta {
    std::size_t vertex_count = 0;
    std::vector<std::size_t> vertex_idempotents;  // basis indices of e_v
    std::vector<std::size_t> arrow_basis;         // basis indices of the arrows
    std::vector<std::size_t> path_length;         // per basis element
    std::vector<std::size_t> path_source;         // per basis element
    std::vector<std::size_t> path_target;         // per basis element
};

/*
 * Finite-dimensional unital associative algebra, given by a basis and
 * structure constants: b_i * b_j = sum_k mult[i][j][k] b_k.
 */
template <class K>
class FDAlgebra {
  public:
    FDAlgebra(FieldSpec fs, std::vector<std::string> labels,
              std::vector<std::vector<std::vector<K>>> mult, std::vector<K> unit,
              std::optional<QuiverMeta> meta = std::nullopt)
        : fs_(fs),
          dim_(labels.size()),
          labels_(std::move(labels)),
          mult_(std::move(mult)),
          unit_(std::move(unit)),
          meta_(std::move(meta)) {
        if (mult_.size() != dim_ || unit_.size() != dim_)
            throw std::invalid_argument("FDAlgebra: table dimensions inconsistent");
        for (auto& row : mult_) {
            if (row.size() != dim_)
                throw std::invalid_argument("FDAlgebra: table dimensions inconsistent");
            for (auto& v : row)
                if (v.size() != dim_)
                    throw std::invalid_argument("FDAlgebra: table dimensions inconsistent");
        }
        build_regular_reps();
        check_unit();
        check_associativity();
    }

    const FieldSpec& field() const { return fs_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<K>& unit() const { return unit_; }
    const std::optional<QuiverMeta>& quiver_meta() const { return meta_; }
    const std::vector<std::vector<std::vector<K>>>& mult_table() const { return mult_; }

    // right regular representation: (row x) * right_mult(j) = coords of x*b_j
    const Mat<K>& right_mult(std::size_t j) const { return rmul_[j]; }
    // left regular representation: (row y) * left_mult(i) = coords of b_i*y
    const Mat<K>& left_mult(std::size_t i) const { return lmul_[i]; }

    std::vector<K> mul(const std::vector<K>& x, const std::vector<K>& y) const {
        std::vector<K> out(dim_, K(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero())
                continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero())
                    continue;
                const K c = x[i] * y[j];
                const auto& prod = mult_[i][j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!prod[k].is_zero())
                        out[k] += c * prod[k];
            }
        }
        return out;
    }

    std::string label_of(const std::vector<K>& coords) const {
        std::string s;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (coords[i].is_zero())
                continue;
            if (!s.empty())
                s += " + ";
            if (!coords[i].is_one())
                s += coords[i].str() + "*";
            s += labels_[i];
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const FDAlgebra& a, const FDAlgebra& b) {
        return a.fs_ == b.fs_ && a.labels_ == b.labels_ && a.mult_ == b.mult_ &&
               a.unit_ == b.unit_;
    }

  private:
    void build_regular_reps() {
        rmul_.reserve(dim_);
        lmul_.reserve(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Mat<K> r(fs_, dim_, dim_);
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t k = 0; k < dim_; ++k)
                    r.at(i, k) = mult_[i][j][k];
            rmul_.push_back(std::move(r));
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            Mat<K> l(fs_, dim_, dim_);
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    l.at(j, k) = mult_[i][j][k];
            lmul_.push_back(std::move(l));
        }
    }

    void check_unit() const {
        for (std::size_t i = 0; i < dim_; ++i) {
            std::vector<K> e(dim_, K(0));
            e[i] = FieldOps<K>::from_int(fs_, 1);
            if (mul(unit_, e) != e || mul(e, unit_) != e)
                throw UnitViolation("unit fails on basis element " + labels_[i]);
        }
    }

    void check_associativity() const {
        // (b_i b_j) b_k vs b_i (b_j b_k), via the regular representations
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                const auto& pij = mult_[i][j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    std::vector<K> lhs = ::dgkit::mul(pij, rmul_[k]);
                    std::vector<K> rhs = ::dgkit::mul(mult_[j][k], lmul_[i]);
                    if (lhs != rhs)
                        throw AssociativityViolation(
                            i, j, k,
                            "(" + labels_[i] + "*" + labels_[j] + ")*" + labels_[k] + " = " +
                                label_of(lhs) + " but " + labels_[i] + "*(" + labels_[j] + "*" +
                                labels_[k] + ") = " + label_of(rhs));
                }
            }
    }

    FieldSpec fs_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<K>>> mult_;
    std::vector<K> unit_;
    std::optional<QuiverMeta> meta_;
    std::vector<Mat<K>> rmul_, lmul_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const FDAlgebra<K>>;

// eagerly checked construction from raw structure constants
template <class K>
AlgebraPtr<K> build_algebra_from_structure_constants(FieldSpec fs,
                                                     std::vector<std::string> labels,
                                                     std::vector<std::vector<std::vector<K>>> mult,
                                                     std::vector<K> unit) {
    return std::make_shared<const FDAlgebra<K>>(fs, std::move(labels), std::move(mult),
                                                std::move(unit));
}

// the ground field itself, as a one-dimensional algebra
template <class K>
AlgebraPtr<K> ground_field_algebra(FieldSpec fs) {
    const K one = FieldOps<K>::from_int(fs, 1);
    return build_algebra_from_structure_constants<K>(fs, {"1"}, {{{one}}}, {one});
}

}  // namespace dgkit
