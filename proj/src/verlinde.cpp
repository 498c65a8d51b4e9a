#include "vercat/verlinde.hpp"

#include "vercat/ver_symmetric_algebra.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace vercat::ver {

namespace {

void require_same_prime(const VerObject& a, const VerObject& b)
{
    if (a.p() != b.p())
        throw lin::FieldMismatch(fmt::format("objects of Ver_{} and Ver_{}", a.p(), b.p()));
}

// trace(f u) without forming the product.
std::uint64_t trace_of_product(const lin::PrimeField& f, const ModMatrix& a, const ModMatrix& b)
{
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto x = a(i, j);
            if (x != 0)
                t = f.add(t, f.mul(x, b(j, i)));
        }
    return t;
}

ModMatrix pairing_matrix(const lin::PrimeField& f, const std::vector<ModMatrix>& fs,
                         const std::vector<ModMatrix>& us)
{
    ModMatrix g(f, fs.size(), us.size());
    for (std::size_t r = 0; r < fs.size(); ++r)
        for (std::size_t l = 0; l < us.size(); ++l)
            g(r, l) = trace_of_product(f, fs[r], us[l]);
    return g;
}

ModMatrix combine(const lin::PrimeField& f, const std::vector<ModMatrix>& basis, const ModMatrix& coeffs,
                  std::size_t col, std::size_t rows, std::size_t cols)
{
    ModMatrix out(f, rows, cols);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const auto c = coeffs(r, col);
        if (c != 0)
            out += basis[r].scaled(c);
    }
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return static_cast<std::uint64_t>(r);
}

} // namespace

VerObject::VerObject(std::uint64_t p, std::vector<std::uint64_t> mult) : p_(p), mult_(std::move(mult))
{
    if (!lin::is_prime(p))
        throw PreconditionError(fmt::format("{} is not prime", p));
    if (mult_.size() != p - 1)
        throw PreconditionError(fmt::format("Ver_{} object needs {} multiplicities, got {}", p, p - 1,
                                            mult_.size()));
}

VerObject VerObject::zero(std::uint64_t p)
{
    if (!lin::is_prime(p))
        throw PreconditionError(fmt::format("{} is not prime", p));
    return VerObject(p, std::vector<std::uint64_t>(p - 1, 0));
}

VerObject VerObject::unit(std::uint64_t p)
{
    return simple(p, 1);
}

VerObject VerObject::simple(std::uint64_t p, std::size_t i)
{
    auto x = zero(p);
    if (i < 1 || i >= p)
        throw PreconditionError(fmt::format("L{} is not a simple object of Ver_{}", i, p));
    x.mult_[i - 1] = 1;
    return x;
}

bool VerObject::is_zero() const noexcept
{
    return std::all_of(mult_.begin(), mult_.end(), [](auto m) { return m == 0; });
}

bool VerObject::is_unit() const noexcept
{
    if (mult_.empty() || mult_[0] != 1)
        return false;
    return std::all_of(mult_.begin() + 1, mult_.end(), [](auto m) { return m == 0; });
}

std::uint64_t VerObject::total_dimension() const noexcept
{
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < mult_.size(); ++i)
        d += mult_[i] * (i + 1);
    return d;
}

std::vector<std::size_t> VerObject::block_sizes() const
{
    std::vector<std::size_t> parts;
    for (std::size_t i = 0; i < mult_.size(); ++i)
        parts.insert(parts.end(), mult_[i], i + 1);
    return parts;
}

VerObject& VerObject::operator+=(const VerObject& o)
{
    require_same_prime(*this, o);
    for (std::size_t i = 0; i < mult_.size(); ++i)
        mult_[i] += o.mult_[i];
    return *this;
}

VerObject VerObject::scaled(std::uint64_t k) const
{
    VerObject x = *this;
    for (auto& m : x.mult_)
        m *= k;
    return x;
}

std::string VerObject::to_string() const
{
    if (is_zero())
        return "0";
    if (is_unit())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (mult_[i] > 1)
            out += fmt::format("{}*", mult_[i]);
        out += fmt::format("L{}", i + 1);
    }
    return out;
}

ZpModule representative(const VerObject& x)
{
    return repzp::jordan_module(x.p(), x.block_sizes());
}

VerObject fusion_simple(std::uint64_t p, std::size_t r, std::size_t s)
{
    if (r < 1 || r >= p || s < 1 || s >= p)
        throw PreconditionError(fmt::format("fusion of L{} and L{} outside Ver_{}", r, s, p));
    const std::size_t top = std::min({r, s, p - r, p - s});
    const std::size_t base = r > s ? r - s : s - r;
    std::vector<std::uint64_t> m(p - 1, 0);
    for (std::size_t i = 1; i <= top; ++i)
        ++m[base + 2 * i - 2];
    return VerObject(p, std::move(m));
}

VerObject fusion(const VerObject& a, const VerObject& b)
{
    require_same_prime(a, b);
    auto out = VerObject::zero(a.p());
    for (std::size_t r = 1; r < a.p(); ++r)
        for (std::size_t s = 1; s < a.p(); ++s) {
            const auto k = a.multiplicity(r) * b.multiplicity(s);
            if (k)
                out += fusion_simple(a.p(), r, s).scaled(k);
        }
    return out;
}

VerObject fusion_by_jordan(const VerObject& a, const VerObject& b)
{
    require_same_prime(a, b);
    return quotient(repzp::tensor(representative(a), representative(b)));
}

VerObject quotient(const lin::JordanType& type, std::uint64_t p)
{
    std::vector<std::uint64_t> m(p - 1, 0);
    for (auto k : type.parts)
        if (k < p)
            ++m[k - 1];
    return VerObject(p, std::move(m));
}

VerObject quotient(const ZpModule& m)
{
    return quotient(repzp::jordan_type(m), m.p());
}

std::size_t negligible_blocks(const VerObject& a, const VerObject& b)
{
    require_same_prime(a, b);
    return repzp::jordan_type(repzp::tensor(representative(a), representative(b))).count(a.p());
}

std::vector<ModMatrix> negligible_radical(const ZpModule& a, const ZpModule& b)
{
    const auto& f = a.field();
    auto fs = repzp::hom_space(a, b).basis;
    auto us = repzp::hom_space(b, a).basis;
    auto k = lin::kernel_basis(pairing_matrix(f, fs, us).transpose());
    std::vector<ModMatrix> out;
    for (std::size_t c = 0; c < k.cols(); ++c)
        out.push_back(combine(f, fs, k, c, b.dim(), a.dim()));
    return out;
}

VerHom ver_hom(const ZpModule& a, const ZpModule& b)
{
    const auto& f = a.field();
    auto fs = repzp::hom_space(a, b).basis;
    auto us = repzp::hom_space(b, a).basis;
    auto k = lin::kernel_basis(pairing_matrix(f, fs, us).transpose());
    auto q = lin::quotient_basis(ModMatrix::identity(f, fs.size()), k);
    VerHom h{a, b, {}, {}, fs, q.projection};
    for (std::size_t c = 0; c < k.cols(); ++c)
        h.radical.push_back(combine(f, fs, k, c, b.dim(), a.dim()));
    for (std::size_t c = 0; c < q.representatives.cols(); ++c)
        h.classes.push_back(combine(f, fs, q.representatives, c, b.dim(), a.dim()));
    return h;
}

std::vector<std::uint64_t> VerHom::class_of(const ModMatrix& f) const
{
    const auto& fld = source.field();
    const std::size_t n = f.rows() * f.cols();
    if (f.rows() != target.dim() || f.cols() != source.dim())
        throw PreconditionError("class_of: map has the wrong shape");
    ModMatrix basis(fld, n, hom_basis.size());
    for (std::size_t r = 0; r < hom_basis.size(); ++r)
        for (std::size_t i = 0; i < n; ++i)
            basis(i, r) = hom_basis[r].entries()[i];
    ModMatrix v(fld, n, 1, f.entries());
    auto coords = lin::coordinates(basis, v);
    auto c = projection * coords;
    std::vector<std::uint64_t> out(c.rows());
    for (std::size_t i = 0; i < c.rows(); ++i)
        out[i] = c(i, 0);
    return out;
}

bool is_negligible(const ZpModule& a, const ZpModule& b, const ModMatrix& f)
{
    for (const auto& u : repzp::hom_space(b, a).basis)
        if (trace_of_product(a.field(), f, u) != 0)
            return false;
    return true;
}

VerObject ver_sym_power(const VerObject& x, std::size_t m, const Budget& budget)
{
    VerSymmetricAlgebra s(x, budget);
    return s.degree(m);
}

VerObject ver_sym_power_by_trace_pairing(const VerObject& x, std::size_t m, const Budget& budget)
{
    const std::uint64_t p = x.p();
    if (m == 0)
        return VerObject::unit(p);
    if (m == 1)
        return x;
    const auto t = repzp::tensor_power(representative(x), m, budget);
    const std::size_t d = t.dim();
    const std::size_t n = x.total_dimension();
    const auto& f = t.field();

    // Row permutations realizing the adjacent swaps on T.
    std::vector<std::vector<std::size_t>> swaps;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        std::vector<std::size_t> perm(d);
        std::size_t right = 1;
        for (std::size_t k = i + 2; k < m; ++k)
            right *= n;
        for (std::size_t idx = 0; idx < d; ++idx) {
            const std::size_t r = idx % right;
            const std::size_t b = (idx / right) % n;
            const std::size_t a = (idx / right / n) % n;
            const std::size_t l = idx / right / n / n;
            perm[idx] = ((l * n + b) * n + a) * right + r;
        }
        swaps.push_back(std::move(perm));
    }

    std::vector<std::uint64_t> mult(p - 1, 0);
    for (std::size_t j = 1; j < p; ++j) {
        const auto block = repzp::jordan_module(p, {j});
        auto phis = repzp::hom_space(t, block).basis;
        auto us = repzp::hom_space(block, t).basis;
        std::vector<ModMatrix> relations;
        for (const auto& u : us)
            for (const auto& perm : swaps) {
                ModMatrix r = u;
                for (std::size_t idx = 0; idx < d; ++idx)
                    for (std::size_t c = 0; c < j; ++c)
                        r(perm[idx], c) = f.sub(r(perm[idx], c), u(idx, c));
                relations.push_back(std::move(r));
            }
        const auto g = lin::rank(pairing_matrix(f, phis, us));
        const auto c = lin::rank(pairing_matrix(f, phis, relations));
        mult[j - 1] = g - c;
    }
    return VerObject(p, std::move(mult));
}

VerObject MultSeries::total() const
{
    auto y = VerObject::zero(p);
    for (const auto& d : degrees)
        y += d;
    return y;
}

MultSeries sym_alg_series(const VerObject& x, std::size_t max_degree, const Budget& budget)
{
    VerSymmetricAlgebra s(x, budget);
    MultSeries out{x.p(), {}, false};
    const bool has_trivial = x.multiplicity(1) > 0;
    for (std::size_t m = 0; m <= max_degree; ++m) {
        auto obj = s.degree(m);
        const bool zero = obj.is_zero();
        out.degrees.push_back(std::move(obj));
        if (zero && !has_trivial) {
            out.finite = true;
            while (out.degrees.size() <= max_degree)
                out.degrees.push_back(VerObject::zero(x.p()));
            break;
        }
    }
    return out;
}

MultSeries series_product(const MultSeries& s, const MultSeries& t)
{
    if (s.p != t.p)
        throw lin::FieldMismatch(fmt::format("series over Ver_{} and Ver_{}", s.p, t.p));
    const std::size_t top = std::min(s.max_degree(), t.max_degree());
    MultSeries out{s.p, {}, s.finite && t.finite};
    if (s.degrees.empty() || t.degrees.empty())
        return out;
    for (std::size_t m = 0; m <= top; ++m) {
        auto acc = VerObject::zero(s.p);
        for (std::size_t a = 0; a <= m; ++a)
            acc += fusion(s.degrees[a], t.degrees[m - a]);
        out.degrees.push_back(std::move(acc));
    }
    return out;
}

MultSeries polynomial_series(std::uint64_t p, std::uint64_t n, std::size_t max_degree)
{
    MultSeries out{p, {}, n == 0};
    for (std::size_t m = 0; m <= max_degree; ++m) {
        const auto c = m == 0 ? 1 : (n == 0 ? 0 : binomial(n + m - 1, m));
        out.degrees.push_back(VerObject::unit(p).scaled(c));
    }
    return out;
}

FactorCheck poly_factor_check(const MultSeries& s, std::uint64_t n)
{
    FactorCheck out;
    if (s.degrees.empty()) {
        out.reason = "empty series";
        return out;
    }
    const std::uint64_t p = s.p;
    std::vector<std::vector<std::int64_t>> y;
    for (std::size_t m = 0; m < s.degrees.size(); ++m) {
        std::vector<std::int64_t> cur(p - 1);
        for (std::size_t i = 0; i + 1 < p; ++i)
            cur[i] = static_cast<std::int64_t>(s.degrees[m].mult()[i]);
        for (std::size_t k = 1; k <= m; ++k) {
            const auto c = static_cast<std::int64_t>(n == 0 ? 0 : binomial(n + k - 1, k));
            for (std::size_t i = 0; i + 1 < p; ++i)
                cur[i] -= c * y[m - k][i];
        }
        for (std::size_t i = 0; i + 1 < p; ++i)
            if (cur[i] < 0) {
                out.reason = fmt::format("negative multiplicity {} of L{} in degree {}", cur[i], i + 1, m);
                return out;
            }
        y.push_back(cur);
        std::vector<std::uint64_t> u(cur.begin(), cur.end());
        out.quotient_series.emplace_back(p, std::move(u));
    }
    if (!out.quotient_series.back().is_zero() || out.quotient_series.size() < 2) {
        out.reason = "quotient series does not vanish in the top degree";
        return out;
    }
    auto total = VerObject::zero(p);
    for (const auto& d : out.quotient_series)
        total += d;
    out.y = total;
    out.passes = true;
    return out;
}

} // namespace vercat::ver
