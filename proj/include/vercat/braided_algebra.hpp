#pragma once

// Truncated symmetric algebra S(X) = T(X) / (v (x) w - c(v (x) w)) for a
// finite-dimensional X with a braiding c on X (x) X, over an exact field.
//
// Degree k is built as a quotient of X (x) S^{k-1} by the image of
//   (1 (x) mu_{k-1}) ((1 - c) (x) 1) : X (x) X (x) S^{k-2} -> X (x) S^{k-1}.
// The quotient basis consists of pivot monomials x_g (x) s_j, chosen
// greedily in tensor order, so every basis element has a word in the
// generators. An optional derivation d with parity operator P (the sign
// applied when d moves past a degree-one factor) is carried to every degree:
//   d_k (x v) = d(x) v + P(x) d_{k-1}(v).

#include "vercat/budget.hpp"
#include "vercat/exactlin.hpp"

#include <fmt/format.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vercat {

template <class F>
class BraidedSymmetricAlgebra {
public:
    using Mat = lin::Matrix<F>;
    using Element = typename F::Element;
    /// One coefficient vector per degree 0..max_degree.
    using Graded = std::vector<std::vector<Element>>;

    BraidedSymmetricAlgebra(F field, Mat braiding, Mat derivation, Mat parity, std::size_t max_degree,
                            Budget budget = {})
        : field_(std::move(field)), n_(derivation.rows()), c_(std::move(braiding)), max_degree_(max_degree),
          budget_(budget)
    {
        if (c_.rows() != n_ * n_ || c_.cols() != n_ * n_ || parity.rows() != n_ || !derivation.is_square() ||
            !parity.is_square())
            throw PreconditionError("braided algebra: inconsistent structure map shapes");
        const auto id1 = Mat::identity(field_, 1);
        levels_.push_back({1, id1, id1, Mat(field_, 1, 1), id1, {{}}});
        if (max_degree_ == 0)
            return;
        const auto idn = Mat::identity(field_, n_);
        std::vector<std::vector<std::size_t>> words;
        for (std::size_t g = 0; g < n_; ++g)
            words.push_back({g});
        levels_.push_back({n_, idn, idn, std::move(derivation), std::move(parity), std::move(words)});
        for (std::size_t k = 2; k <= max_degree_; ++k)
            build(k);
    }

    const F& field() const noexcept { return field_; }
    std::size_t generators() const noexcept { return n_; }
    std::size_t max_degree() const noexcept { return max_degree_; }
    std::size_t dim(std::size_t k) const { return levels_.at(k).dim; }
    /// X (x) S^{k-1} -> S^k
    const Mat& mu(std::size_t k) const { return levels_.at(k).mu; }
    /// S^k -> X (x) S^{k-1}, a section of mu(k) picking monomials
    const Mat& sigma(std::size_t k) const { return levels_.at(k).sigma; }
    const Mat& derivation(std::size_t k) const { return levels_.at(k).d; }
    const Mat& parity(std::size_t k) const { return levels_.at(k).parity; }
    /// Generator indices of the monomial representing basis element i of S^k.
    const std::vector<std::size_t>& word(std::size_t k, std::size_t i) const { return levels_.at(k).words.at(i); }

    /// S^a (x) S^b -> S^{a+b}, a + b <= max_degree. Cached.
    const Mat& product(std::size_t a, std::size_t b)
    {
        if (a + b > max_degree_)
            throw PreconditionError(fmt::format("product of degrees {} and {} beyond truncation {}", a, b, max_degree_));
        if (auto it = products_.find({a, b}); it != products_.end())
            return it->second;
        Mat result(field_);
        const std::size_t db = dim(b);
        if (a == 0) {
            result = Mat::identity(field_, db);
        } else {
            // mu_{a,b} = mu_{a+b} (1 (x) mu_{a-1,b}) (sigma_a (x) 1)
            const std::size_t da = dim(a), dprev = dim(a - 1), dtop = dim(a + b - 1);
            budget_.require(n_ * dtop * da * db, "graded product");
            const Mat inner = product(a - 1, b);
            const auto id_b = Mat::identity(field_, db);
            Mat stacked(field_, n_ * dtop, da * db);
            for (std::size_t i = 0; i < n_; ++i) {
                auto slice = sigma(a).block(i * dprev, 0, dprev, da);
                stacked.set_block(i * dtop, 0, inner * lin::kronecker(slice, id_b));
            }
            result = mu(a + b) * stacked;
        }
        return products_.emplace(std::make_pair(a, b), std::move(result)).first->second;
    }

    Graded zero() const
    {
        Graded z;
        for (std::size_t k = 0; k <= max_degree_; ++k)
            z.emplace_back(dim(k), field_.zero());
        return z;
    }

    Graded basis_element(std::size_t k, std::size_t i) const
    {
        auto z = zero();
        z.at(k).at(i) = field_.one();
        return z;
    }

    Graded add(const Graded& a, const Graded& b) const
    {
        auto out = a;
        for (std::size_t k = 0; k < out.size(); ++k)
            for (std::size_t i = 0; i < out[k].size(); ++i)
                out[k][i] = field_.add(out[k][i], b[k][i]);
        return out;
    }

    Graded scale(const Graded& a, const Element& s) const
    {
        auto out = a;
        for (auto& deg : out)
            for (auto& x : deg)
                x = field_.mul(x, s);
        return out;
    }

    /// Product in the algebra truncated above max_degree.
    Graded multiply(const Graded& a, const Graded& b)
    {
        auto out = zero();
        for (std::size_t i = 0; i <= max_degree_; ++i) {
            if (is_zero(a[i]))
                continue;
            for (std::size_t j = 0; i + j <= max_degree_; ++j) {
                if (is_zero(b[j]))
                    continue;
                const auto& m = product(i, j);
                const std::size_t dj = dim(j);
                for (std::size_t x = 0; x < a[i].size(); ++x) {
                    if (field_.is_zero(a[i][x]))
                        continue;
                    for (std::size_t y = 0; y < dj; ++y) {
                        if (field_.is_zero(b[j][y]))
                            continue;
                        const auto coef = field_.mul(a[i][x], b[j][y]);
                        const std::size_t col = x * dj + y;
                        for (std::size_t r = 0; r < m.rows(); ++r)
                            if (!field_.is_zero(m(r, col)))
                                out[i + j][r] = field_.add(out[i + j][r], field_.mul(coef, m(r, col)));
                    }
                }
            }
        }
        return out;
    }

    Graded power(const Graded& a, std::size_t e)
    {
        auto out = zero();
        out[0][0] = field_.one();
        for (std::size_t i = 0; i < e; ++i)
            out = multiply(out, a);
        return out;
    }

    Graded apply_derivation(const Graded& a) const { return apply_levelwise(a, &Level::d); }
    Graded apply_parity(const Graded& a) const { return apply_levelwise(a, &Level::parity); }

    bool is_zero(const std::vector<Element>& v) const
    {
        for (const auto& x : v)
            if (!field_.is_zero(x))
                return false;
        return true;
    }

    bool is_zero(const Graded& a) const
    {
        for (const auto& v : a)
            if (!is_zero(v))
                return false;
        return true;
    }

    /// Monomial of a basis element, e.g. "x^2y", using the given generator names.
    std::string monomial_name(std::size_t k, std::size_t i, const std::vector<std::string>& names) const
    {
        if (k == 0)
            return "1";
        std::string out;
        const auto& w = word(k, i);
        for (std::size_t s = 0; s < w.size();) {
            std::size_t e = s;
            while (e < w.size() && w[e] == w[s])
                ++e;
            out += names.at(w[s]);
            if (e - s > 1)
                out += fmt::format("^{}", e - s);
            s = e;
        }
        return out;
    }

private:
    struct Level {
        std::size_t dim;
        Mat mu;
        Mat sigma;
        Mat d;
        Mat parity;
        std::vector<std::vector<std::size_t>> words;
    };

    Graded apply_levelwise(const Graded& a, Mat Level::*which) const
    {
        auto out = zero();
        for (std::size_t k = 0; k <= max_degree_; ++k) {
            const Mat& m = levels_[k].*which;
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (!field_.is_zero(m(r, c)) && !field_.is_zero(a[k][c]))
                        out[k][r] = field_.add(out[k][r], field_.mul(m(r, c), a[k][c]));
        }
        return out;
    }

    void build(std::size_t k)
    {
        const Level& one = levels_[1];
        const Level& prev = levels_[k - 1];
        const Level& prev2 = levels_[k - 2];
        const std::size_t rows = n_ * prev.dim, cols = n_ * n_ * prev2.dim;
        budget_.require(rows * cols, fmt::format("relations in degree {}", k));
        const auto idn = Mat::identity(field_, n_);
        const auto rel = lin::kronecker(idn, prev.mu) *
                         lin::kronecker(Mat::identity(field_, n_ * n_) - c_, Mat::identity(field_, prev2.dim));
        auto q = lin::quotient_basis(Mat::identity(field_, rows), rel);
        const auto lifted_d = lin::kronecker(one.d, Mat::identity(field_, prev.dim)) + lin::kronecker(one.parity, prev.d);
        const auto lifted_p = lin::kronecker(one.parity, prev.parity);
        Level lv{q.projection.rows(), q.projection, q.representatives, Mat(field_), Mat(field_), {}};
        lv.d = lv.mu * lifted_d * lv.sigma;
        lv.parity = lv.mu * lifted_p * lv.sigma;
        if (!(lv.d * lv.mu == lv.mu * lifted_d) || !(lv.parity * lv.mu == lv.mu * lifted_p))
            throw PreconditionError(fmt::format("derivation does not preserve the relations in degree {}", k));
        for (std::size_t i = 0; i < lv.dim; ++i) {
            std::size_t unit = rows;
            for (std::size_t r = 0; r < rows; ++r)
                if (!field_.is_zero(lv.sigma(r, i)))
                    unit = r;
            auto w = std::vector<std::size_t>{unit / prev.dim};
            const auto& rest = prev.words[unit % prev.dim];
            w.insert(w.end(), rest.begin(), rest.end());
            lv.words.push_back(std::move(w));
        }
        levels_.push_back(std::move(lv));
    }

    F field_;
    std::size_t n_;
    Mat c_;
    std::size_t max_degree_;
    Budget budget_;
    std::vector<Level> levels_;
    std::map<std::pair<std::size_t, std::size_t>, Mat> products_;
};

} // namespace vercat
