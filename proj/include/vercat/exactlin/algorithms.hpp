#pragma once

// Exact dense linear algebra over a field: echelon forms, kernels, images,
// quotients, Kronecker products, traces and nilpotent Jordan structure.
//
// Tensor-product basis convention (shared by every module): for A (m x n)
// and B (p x q), kronecker(A, B) has entry A(i, j) * B(k, l) at row
// i * p + k and column j * q + l, i.e. the left factor index varies slowest.

#include "vercat/exactlin/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace vercat::lin {

class NotNilpotent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotInSpan : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A partition recording the sizes of Jordan blocks, weakly decreasing.
struct JordanType {
    std::vector<std::size_t> parts;

    std::size_t size() const noexcept
    {
        std::size_t s = 0;
        for (auto x : parts)
            s += x;
        return s;
    }
    std::size_t count(std::size_t block) const noexcept
    {
        std::size_t c = 0;
        for (auto x : parts)
            c += x == block;
        return c;
    }
    bool operator==(const JordanType&) const = default;
};

template <class F>
struct RowEchelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;
};

namespace detail {

// row[dst] -= factor * row[src], starting at column `from`.
template <class F>
void subtract_row(Matrix<F>& m, std::size_t dst, std::size_t src, const typename F::Element& factor,
                  std::size_t from)
{
    const F& f = m.field();
    auto d = m.row(dst);
    auto s = m.row(src);
    for (std::size_t j = from; j < m.cols(); ++j)
        if (!f.is_zero(s[j]))
            d[j] = f.sub(d[j], f.mul(factor, s[j]));
}

template <class F>
void scale_row(Matrix<F>& m, std::size_t r, const typename F::Element& s, std::size_t from)
{
    const F& f = m.field();
    auto row = m.row(r);
    for (std::size_t j = from; j < m.cols(); ++j)
        row[j] = f.mul(row[j], s);
}

// Gaussian elimination in place. With `reduce`, produces the reduced row
// echelon form; otherwise only a row echelon form.
template <class F>
std::vector<std::size_t> eliminate(Matrix<F>& m, bool reduce)
{
    const F& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && f.is_zero(m(sel, col)))
            ++sel;
        if (sel == m.rows())
            continue;
        m.swap_rows(sel, row);
        scale_row(m, row, f.inv(m(row, col)), col);
        for (std::size_t r = reduce ? 0 : row + 1; r < m.rows(); ++r) {
            if (r == row || f.is_zero(m(r, col)))
                continue;
            auto factor = m(r, col);
            subtract_row(m, r, row, factor, col);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

/// Reduced row echelon form and pivot columns. Deterministic: the pivot row
/// is always the first nonzero entry at or below the current row.
template <class F>
RowEchelon<F> rref(Matrix<F> m)
{
    auto pivots = detail::eliminate(m, true);
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::vector<std::size_t> pivot_columns(Matrix<F> m)
{
    return detail::eliminate(m, false);
}

template <class F>
std::size_t rank(const Matrix<F>& m)
{
    return pivot_columns(m).size();
}

/// Columns span ker(M); M * kernel_basis(M) == 0.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m)
{
    const F& f = m.field();
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free.push_back(c);
    Matrix<F> k(f, m.cols(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        k(free[j], j) = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            k(pivots[i], j) = f.neg(r(i, free[j]));
    }
    return k;
}

/// A column basis of im(M), taken from the pivot columns of M itself.
template <class F>
Matrix<F> image_basis(const Matrix<F>& m)
{
    auto pivots = pivot_columns(m);
    return m.select_columns(pivots);
}

/// Rows span the left kernel: left_kernel_basis(M) * M == 0.
template <class F>
Matrix<F> left_kernel_basis(const Matrix<F>& m)
{
    return kernel_basis(m.transpose()).transpose();
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m)
{
    if (!m.is_square())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    auto [r, pivots] = rref(m.hconcat(Matrix<F>::identity(m.field(), n)));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw SingularMatrix("matrix is singular");
    return r.block(0, n, n, n);
}

template <class F>
Matrix<F> power(const Matrix<F>& m, std::size_t k)
{
    auto result = Matrix<F>::identity(m.field(), m.rows());
    auto base = m;
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

template <class F>
typename F::Element trace(const Matrix<F>& m)
{
    if (!m.is_square())
        throw std::invalid_argument("trace of a non-square matrix");
    const F& f = m.field();
    auto t = f.zero();
    for (std::size_t i = 0; i < m.rows(); ++i)
        t = f.add(t, m(i, i));
    return t;
}

template <class F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b)
{
    if (!(a.field() == b.field()))
        throw FieldMismatch("kronecker product over different fields");
    const F& f = a.field();
    Matrix<F> out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& x = a(i, j);
            if (f.is_zero(x))
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
        }
    return out;
}

/// The swap X (x) Y -> Y (x) X, dim X = dx, dim Y = dy.
template <class F>
Matrix<F> commutation_matrix(const F& f, std::size_t dx, std::size_t dy)
{
    Matrix<F> s(f, dx * dy, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t k = 0; k < dy; ++k)
            s(k * dx + i, i * dy + k) = f.one();
    return s;
}

/// Solves B X = V for a full-column-rank B. Throws NotInSpan otherwise.
template <class F>
Matrix<F> coordinates(const Matrix<F>& basis, const Matrix<F>& v)
{
    const std::size_t r = basis.cols();
    auto [red, pivots] = rref(basis.hconcat(v));
    if (pivots.size() < r || (r > 0 && pivots[r - 1] != r - 1))
        throw std::invalid_argument("coordinates: basis columns are dependent");
    if (pivots.size() > r)
        throw NotInSpan("vector outside the span of the basis");
    return red.block(0, r, r, v.cols());
}

/// L with L * B == I for a full-column-rank B (d x r); L is r x d and only
/// reads r independent rows of B.
template <class F>
Matrix<F> left_inverse(const Matrix<F>& b)
{
    auto rows = pivot_columns(b.transpose());
    if (rows.size() != b.cols())
        throw SingularMatrix("left_inverse: columns are dependent");
    auto sq_inv = inverse(b.select_rows(rows));
    Matrix<F> l(b.field(), b.cols(), b.rows());
    for (std::size_t i = 0; i < b.cols(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            l(i, rows[j]) = sq_inv(i, j);
    return l;
}

/// R with P * R == I for a full-row-rank P.
template <class F>
Matrix<F> right_inverse(const Matrix<F>& p)
{
    return left_inverse(p.transpose()).transpose();
}

/// Incrementally grown subspace with a reduced basis; membership and
/// insertion cost O(rank * dim).
template <class F>
class IncrementalSpan {
public:
    using Element = typename F::Element;

    IncrementalSpan(F field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    bool contains(std::vector<Element> v) const
    {
        reduce(v);
        return is_zero(v);
    }

    /// Inserts v if it is independent of the current span.
    bool insert(std::vector<Element> v)
    {
        reduce(v);
        std::size_t piv = 0;
        while (piv < dim_ && field_.is_zero(v[piv]))
            ++piv;
        if (piv == dim_)
            return false;
        auto s = field_.inv(v[piv]);
        for (auto& x : v)
            x = field_.mul(x, s);
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    bool insert_column(const Matrix<F>& m, std::size_t c)
    {
        std::vector<Element> v(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            v[i] = m(i, c);
        return insert(std::move(v));
    }

private:
    void reduce(std::vector<Element>& v) const
    {
        if (v.size() != dim_)
            throw std::invalid_argument("vector dimension mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto c = v[pivots_[i]];
            if (field_.is_zero(c))
                continue;
            const auto& r = rows_[i];
            for (std::size_t j = 0; j < dim_; ++j)
                if (!field_.is_zero(r[j]))
                    v[j] = field_.sub(v[j], field_.mul(c, r[j]));
        }
    }

    bool is_zero(const std::vector<Element>& v) const
    {
        for (const auto& x : v)
            if (!field_.is_zero(x))
                return false;
        return true;
    }

    F field_;
    std::size_t dim_;
    std::vector<std::vector<Element>> rows_;
    std::vector<std::size_t> pivots_;
};

template <class F>
struct QuotientBasis {
    Matrix<F> representatives; ///< ambient coordinates, one column per class
    Matrix<F> projection;      ///< quotient_dim x ambient_dim
};

/// Quotient span(V) / span(W). Representatives are chosen greedily among the
/// columns of V in order (the rref-pivot choice); the projection sends every
/// column of W to 0 and each representative to its unit vector. Throws
/// NotInSpan if some column of W lies outside span(V).
template <class F>
QuotientBasis<F> quotient_basis(const Matrix<F>& v, const Matrix<F>& w)
{
    if (!(v.field() == w.field()))
        throw FieldMismatch("quotient_basis over different fields");
    if (v.rows() != w.rows())
        throw std::invalid_argument("quotient_basis: ambient dimension mismatch");
    const F& f = v.field();
    const std::size_t d = v.rows();
    if (rank(v.hconcat(w)) != rank(v))
        throw NotInSpan("quotient_basis: W is not contained in span(V)");

    IncrementalSpan<F> span(f, d);
    std::vector<std::size_t> w_cols, rep_cols;
    for (std::size_t c = 0; c < w.cols(); ++c)
        if (span.insert_column(w, c))
            w_cols.push_back(c);
    for (std::size_t c = 0; c < v.cols(); ++c)
        if (span.insert_column(v, c))
            rep_cols.push_back(c);

    auto reps = v.select_columns(rep_cols);
    auto full = w.select_columns(w_cols).hconcat(reps);
    // Complete to a basis of the ambient space with unit vectors.
    auto unit = Matrix<F>::identity(f, d);
    std::vector<std::size_t> ext;
    for (std::size_t c = 0; c < d && span.rank() < d; ++c)
        if (span.insert_column(unit, c))
            ext.push_back(c);
    full = full.hconcat(unit.select_columns(ext));
    auto inv = inverse(full);
    return {std::move(reps), inv.block(w_cols.size(), 0, rep_cols.size(), d)};
}

/// Jordan type of a nilpotent matrix from its rank sequence: the number of
/// blocks of size exactly k is rank(N^{k-1}) - 2 rank(N^k) + rank(N^{k+1}).
/// Throws NotNilpotent when N^dim != 0.
template <class F>
JordanType nilpotent_partition(const Matrix<F>& n)
{
    if (!n.is_square())
        throw std::invalid_argument("nilpotent_partition of a non-square matrix");
    const std::size_t d = n.rows();
    std::vector<std::size_t> ranks{d};
    Matrix<F> img = n;
    while (ranks.back() > 0) {
        auto basis = image_basis(img);
        if (basis.cols() == ranks.back())
            throw NotNilpotent("matrix is not nilpotent");
        ranks.push_back(basis.cols());
        img = n * basis;
    }
    ranks.push_back(0);
    JordanType jt;
    for (std::size_t k = ranks.size() - 2; k >= 1; --k) {
        const std::size_t count = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1];
        jt.parts.insert(jt.parts.end(), count, k);
    }
    return jt;
}

/// A Jordan basis of a nilpotent operator. Chains are ordered by length,
/// shortest first; within a chain of length l with cyclic generator c the
/// columns are N^{l-1}c, ..., Nc, c, so that inverse * N * basis is block
/// diagonal with ones on the superdiagonal of each block.
template <class F>
struct JordanDecomposition {
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> offsets;
    Matrix<F> basis;
    Matrix<F> inverse;
};

template <class F>
JordanDecomposition<F> jordan_basis(const Matrix<F>& n)
{
    if (!n.is_square())
        throw std::invalid_argument("jordan_basis of a non-square matrix");
    const F& f = n.field();
    const std::size_t d = n.rows();
    if (d == 0)
        return {{}, {}, Matrix<F>(f, 0, 0), Matrix<F>(f, 0, 0)};

    std::vector<Matrix<F>> powers{Matrix<F>::identity(f, d)};
    while (!powers.back().is_zero()) {
        if (powers.size() > d)
            throw NotNilpotent("matrix is not nilpotent");
        powers.push_back(n * powers.back());
    }
    const std::size_t s = powers.size() - 1;
    std::vector<Matrix<F>> kernels;
    for (std::size_t k = 0; k <= s; ++k)
        kernels.push_back(kernel_basis(powers[k]));

    struct Chain {
        std::size_t length;
        Matrix<F> generator;
    };
    std::vector<Chain> chains;
    for (std::size_t k = s; k >= 1; --k) {
        IncrementalSpan<F> span(f, d);
        for (std::size_t c = 0; c < kernels[k - 1].cols(); ++c)
            span.insert_column(kernels[k - 1], c);
        for (const auto& ch : chains) {
            auto v = powers[ch.length - k] * ch.generator;
            span.insert_column(v, 0);
        }
        for (std::size_t c = 0; c < kernels[k].cols(); ++c)
            if (span.insert_column(kernels[k], c))
                chains.push_back({k, kernels[k].column(c)});
    }
    std::stable_sort(chains.begin(), chains.end(),
                     [](const Chain& a, const Chain& b) { return a.length < b.length; });

    JordanDecomposition<F> out{{}, {}, Matrix<F>(f, d, d), Matrix<F>(f, 0, 0)};
    std::size_t col = 0;
    for (const auto& ch : chains) {
        out.sizes.push_back(ch.length);
        out.offsets.push_back(col);
        auto v = ch.generator;
        for (std::size_t t = 0; t < ch.length; ++t) {
            out.basis.set_block(0, col + ch.length - 1 - t, v);
            v = n * v;
        }
        col += ch.length;
    }
    if (col != d)
        throw std::logic_error("jordan_basis: chains do not span the space");
    out.inverse = inverse(out.basis);
    return out;
}

} // namespace vercat::lin
