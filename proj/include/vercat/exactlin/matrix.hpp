#pragma once

#include "vercat/exactlin/field.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace vercat::lin {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
public:
    using field_type = F;
    using value_type = typename F::Element;

    explicit Matrix(F field) : Matrix(std::move(field), 0, 0) {}

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero())
    {
    }

    Matrix(F field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("matrix entry count does not match shape");
    }

    static Matrix identity(F field, std::size_t n)
    {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = m.field_.one();
        return m;
    }

    static Matrix from_ints(F field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Matrix m(std::move(field), r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c)
                throw std::invalid_argument("ragged initializer");
            std::size_t j = 0;
            for (auto v : row)
                m(i, j++) = m.field_.from_int(v);
            ++i;
        }
        return m;
    }

    /// Column vector from integers.
    static Matrix column_from_ints(F field, std::initializer_list<std::int64_t> values)
    {
        Matrix m(std::move(field), values.size(), 1);
        std::size_t i = 0;
        for (auto v : values)
            m(i++, 0) = m.field_.from_int(v);
        return m;
    }

    template <class Rng>
    static Matrix random(F field, std::size_t rows, std::size_t cols, Rng& rng)
    {
        Matrix m(std::move(field), rows, cols);
        for (auto& x : m.data_)
            x = m.field_.random(rng);
        return m;
    }

    const F& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    const std::vector<value_type>& entries() const noexcept { return data_; }

    bool operator==(const Matrix& o) const
    {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [&](const auto& x) { return field_.is_zero(x); });
    }

    bool is_identity() const
    {
        if (!is_square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i == j ? !field_.is_one((*this)(i, j)) : !field_.is_zero((*this)(i, j)))
                    return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] = field_.add(data_[i], o.data_[i]);
        return *this;
    }

    Matrix& operator-=(const Matrix& o)
    {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] = field_.sub(data_[i], o.data_[i]);
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    Matrix scaled(const value_type& s) const
    {
        Matrix m = *this;
        for (auto& x : m.data_)
            x = field_.mul(x, s);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (!(a.field_ == b.field_))
            throw FieldMismatch("matrix product over different fields");
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        const F& f = a.field_;
        Matrix out(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            auto dst = out.row(i);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& aik = a(i, k);
                if (f.is_zero(aik))
                    continue;
                auto src = b.row(k);
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!f.is_zero(src[j]))
                        dst[j] = f.add(dst[j], f.mul(aik, src[j]));
            }
        }
        return out;
    }

    Matrix transpose() const
    {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }

    Matrix select_columns(std::span<const std::size_t> idx) const
    {
        Matrix m(field_, rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    Matrix select_rows(std::span<const std::size_t> idx) const
    {
        Matrix m(field_, idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            std::copy_n(row(idx[i]).begin(), cols_, m.row(i).begin());
        return m;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        if (r0 + nr > rows_ || c0 + nc > cols_)
            throw std::out_of_range("block outside matrix");
        Matrix m(field_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
            throw std::out_of_range("block outside matrix");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    /// [this | o]
    Matrix hconcat(const Matrix& o) const
    {
        if (rows_ != o.rows_)
            throw std::invalid_argument("hconcat row mismatch");
        Matrix m(field_, rows_, cols_ + o.cols_);
        m.set_block(0, 0, *this);
        m.set_block(0, cols_, o);
        return m;
    }

    /// [this ; o]
    Matrix vconcat(const Matrix& o) const
    {
        if (cols_ != o.cols_)
            throw std::invalid_argument("vconcat column mismatch");
        Matrix m(field_, rows_ + o.rows_, cols_);
        m.set_block(0, 0, *this);
        m.set_block(rows_, 0, o);
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? " " : "") << field_.to_string((*this)(i, j));
        }
        os << ']';
        return os.str();
    }

private:
    void check_same_shape(const Matrix& o) const
    {
        if (!(field_ == o.field_))
            throw FieldMismatch("matrix sum over different fields");
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix sum shape mismatch");
    }

    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

using ModMatrix = Matrix<PrimeField>;
using RatMatrix = Matrix<RationalField>;

} // namespace vercat::lin
