#pragma once

#include "field.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgkit {

/*
 * Dense matrix over an exact field, row-major. The system-wide convention is
 * row vectors: module elements are rows, maps act on the right (v -> v*M),
 * and "f then g" composes as F*G.
 */
template <class K>
class Mat {
  public:
    Mat() : fs_(), rows_(0), cols_(0) {}
    Mat(FieldSpec fs, std::size_t rows, std::size_t cols)
        : fs_(fs), rows_(rows), cols_(cols), e_(rows * cols) {}

    static Mat identity(FieldSpec fs, std::size_t n) {
        Mat m(fs, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = FieldOps<K>::from_int(fs, 1);
        return m;
    }
    static Mat zero(FieldSpec fs, std::size_t rows, std::size_t cols) {
        return Mat(fs, rows, cols);
    }
    static Mat from_rows(FieldSpec fs, const std::vector<std::vector<K>>& rows) {
        std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        Mat m(fs, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("Mat: ragged rows");
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const FieldSpec& field() const { return fs_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }
    void set_row(std::size_t i, const std::vector<K>& v) {
        if (v.size() != cols_)
            throw std::invalid_argument("Mat: row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j)
            at(i, j) = v[j];
    }

    // row-major flattening, used when maps become vectors of unknowns
    std::vector<K> vectorize() const { return e_; }
    static Mat from_vector(FieldSpec fs, std::size_t rows, std::size_t cols,
                           const std::vector<K>& v) {
        if (v.size() != rows * cols)
            throw std::invalid_argument("Mat: vector length mismatch");
        Mat m(fs, rows, cols);
        m.e_ = v;
        return m;
    }

    bool is_zero() const {
        for (const K& x : e_)
            if (!x.is_zero())
                return false;
        return true;
    }

    Mat transpose() const {
        Mat t(fs_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        a.check_field(b);
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Mat: product shape mismatch " + a.shape_str() + " * " +
                                        b.shape_str());
        Mat c(a.fs_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& x = a.at(i, k);
                if (x.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const K& y = b.at(k, j);
                    if (!y.is_zero())
                        c.at(i, j) += x * y;
                }
            }
        return c;
    }
    friend Mat operator+(const Mat& a, const Mat& b) {
        a.check_shape(b);
        Mat c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i)
            c.e_[i] += b.e_[i];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        a.check_shape(b);
        Mat c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i)
            c.e_[i] -= b.e_[i];
        return c;
    }
    Mat operator-() const {
        Mat c = *this;
        for (K& x : c.e_)
            x = -x;
        return c;
    }
    Mat scaled(const K& s) const {
        Mat c = *this;
        for (K& x : c.e_)
            x = x * s;
        return c;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.fs_ == b.fs_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    // [a | b] side by side
    static Mat hstack(const Mat& a, const Mat& b) {
        a.check_field(b);
        if (a.rows_ != b.rows_)
            throw std::invalid_argument("Mat: hstack row mismatch");
        Mat c(a.fs_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j)
                c.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.at(i, a.cols_ + j) = b.at(i, j);
        }
        return c;
    }
    static Mat vstack(const Mat& a, const Mat& b) {
        a.check_field(b);
        if (a.cols_ != b.cols_)
            throw std::invalid_argument("Mat: vstack col mismatch");
        Mat c(a.fs_, a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                c.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                c.at(a.rows_ + i, j) = b.at(i, j);
        return c;
    }

    // block-diagonal sum
    static Mat diag_sum(const Mat& a, const Mat& b) {
        a.check_field(b);
        Mat c(a.fs_, a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                c.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return c;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    void check_field(const Mat& b) const {
        if (fs_ != b.fs_)
            throw std::domain_error("Mat: field mismatch (" + fs_.str() + " vs " + b.fs_.str() +
                                    ")");
    }

  private:
    void check_shape(const Mat& b) const {
        check_field(b);
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("Mat: shape mismatch " + shape_str() + " vs " +
                                        b.shape_str());
    }

    FieldSpec fs_;
    std::size_t rows_, cols_;
    std::vector<K> e_;
};

template <class K>
std::vector<K> unit_vector(const FieldSpec& fs, std::size_t n, std::size_t i) {
    std::vector<K> v(n, K(0));
    v[i] = FieldOps<K>::from_int(fs, 1);
    return v;
}

// v * M for a row vector v
template <class K>
std::vector<K> mul(const std::vector<K>& v, const Mat<K>& m) {
    if (v.size() != m.rows())
        throw std::invalid_argument("mul: length mismatch");
    std::vector<K> out(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const K& y = m.at(i, j);
            if (!y.is_zero())
                out[j] += v[i] * y;
        }
    }
    return out;
}

template <class K>
bool all_zero(const std::vector<K>& v) {
    for (const K& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

}  // namespace dgkit
