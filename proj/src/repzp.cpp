#include "vercat/repzp.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace vercat::repzp {

namespace {

void require_same_prime(const ZpModule& a, const ZpModule& b)
{
    if (a.p() != b.p())
        throw lin::FieldMismatch("modules over different primes: " + std::to_string(a.p()) + " and " +
                                 std::to_string(b.p()));
}

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base)
            return cap + 1;
        r *= base;
    }
    return r;
}

} // namespace

ZpModule::ZpModule(std::uint64_t p, ModMatrix g) : p_(p), g_(std::move(g))
{
    if (g_.field().characteristic() != p)
        throw PreconditionError("action matrix is not over GF(" + std::to_string(p) + ")");
    if (!g_.is_square())
        throw PreconditionError("action matrix must be square");
    if (!lin::power(g_, p).is_identity())
        throw PreconditionError("action matrix does not satisfy g^p = 1");
}

ZpModule ZpModule::unchecked(std::uint64_t p, ModMatrix g)
{
    return ZpModule(p, std::move(g), NoCheck{});
}

ModMatrix ZpModule::nilpotent() const
{
    return g_ - ModMatrix::identity(g_.field(), dim());
}

ModMatrix jordan_block_nilpotent(const PrimeField& f, std::size_t n)
{
    ModMatrix m(f, n, n);
    for (std::size_t q = 1; q < n; ++q)
        m(q - 1, q) = f.one();
    return m;
}

ZpModule jordan_module(std::uint64_t p, const std::vector<std::size_t>& parts)
{
    PrimeField f(p);
    std::size_t d = 0;
    for (auto k : parts) {
        if (k < 1 || k > p)
            throw PreconditionError("Jordan block size " + std::to_string(k) + " outside [1, " +
                                    std::to_string(p) + "]");
        d += k;
    }
    ModMatrix g = ModMatrix::identity(f, d);
    std::size_t off = 0;
    for (auto k : parts) {
        for (std::size_t q = 1; q < k; ++q)
            g(off + q - 1, off + q) = f.one();
        off += k;
    }
    return ZpModule::unchecked(p, std::move(g));
}

JordanType jordan_type(const ZpModule& m)
{
    return lin::nilpotent_partition(m.nilpotent());
}

ZpModule tensor(const ZpModule& a, const ZpModule& b)
{
    require_same_prime(a, b);
    return ZpModule::unchecked(a.p(), lin::kronecker(a.g(), b.g()));
}

ZpModule direct_sum(const ZpModule& a, const ZpModule& b)
{
    require_same_prime(a, b);
    ModMatrix g(a.field(), a.dim() + b.dim(), a.dim() + b.dim());
    g.set_block(0, 0, a.g());
    g.set_block(a.dim(), a.dim(), b.g());
    return ZpModule::unchecked(a.p(), std::move(g));
}

ZpModule dual(const ZpModule& a)
{
    return ZpModule::unchecked(a.p(), lin::inverse(a.g()).transpose());
}

ZpModule tensor_power(const ZpModule& a, std::size_t m, const Budget& budget)
{
    const std::size_t d = checked_pow(a.dim(), m, budget.max_entries);
    budget.require(checked_pow(d, 2, budget.max_entries), "tensor power");
    ModMatrix g = ModMatrix::identity(a.field(), 1);
    for (std::size_t i = 0; i < m; ++i)
        g = lin::kronecker(g, a.g());
    return ZpModule::unchecked(a.p(), std::move(g));
}

ModMatrix swap_matrix(const PrimeField& f, std::size_t dim_x, std::size_t dim_y)
{
    return lin::commutation_matrix(f, dim_x, dim_y);
}

ModMatrix adjacent_swap(const PrimeField& f, std::size_t n, std::size_t m, std::size_t i)
{
    if (i + 1 >= m)
        throw std::out_of_range("adjacent_swap position out of range");
    std::size_t left = 1, right = 1;
    for (std::size_t k = 0; k < i; ++k)
        left *= n;
    for (std::size_t k = i + 2; k < m; ++k)
        right *= n;
    const std::size_t total = left * n * n * right;
    ModMatrix s(f, total, total);
    for (std::size_t l = 0; l < left; ++l)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t r = 0; r < right; ++r)
                    s(((l * n + b) * n + a) * right + r, ((l * n + a) * n + b) * right + r) = f.one();
    return s;
}

HomSpace hom_space(const ZpModule& a, const ZpModule& b)
{
    require_same_prime(a, b);
    const auto& f = a.field();
    auto ja = lin::jordan_basis(a.nilpotent());
    auto jb = lin::jordan_basis(b.nilpotent());
    HomSpace hs{a, b, {}};
    // Between standard blocks J_x -> J_y the intertwiners are spanned by the
    // maps sending the generator e_{x-1} to e_s, s < min(x, y); such a map
    // sends e_{x-1-t} to e_{s-t}.
    for (std::size_t u = 0; u < ja.sizes.size(); ++u)
        for (std::size_t v = 0; v < jb.sizes.size(); ++v) {
            const std::size_t x = ja.sizes[u], y = jb.sizes[v];
            for (std::size_t s = 0; s < std::min(x, y); ++s) {
                ModMatrix t(f, b.dim(), a.dim());
                for (std::size_t k = 0; k <= s; ++k) {
                    const std::size_t row = jb.offsets[v] + s - k;
                    const std::size_t col = ja.offsets[u] + x - 1 - k;
                    for (std::size_t i = 0; i < b.dim(); ++i) {
                        const auto bi = jb.basis(i, row);
                        if (f.is_zero(bi))
                            continue;
                        for (std::size_t j = 0; j < a.dim(); ++j)
                            t(i, j) = f.add(t(i, j), f.mul(bi, ja.inverse(col, j)));
                    }
                }
                hs.basis.push_back(std::move(t));
            }
        }
    return hs;
}

HomSpace hom_space_by_linear_system(const ZpModule& a, const ZpModule& b, const Budget& budget)
{
    require_same_prime(a, b);
    const auto& f = a.field();
    const std::size_t da = a.dim(), db = b.dim();
    budget.require(da * db * da * db, "hom space linear system");
    // Row-major vec(T): T(i, j) is unknown i * da + j.
    auto system = lin::kronecker(ModMatrix::identity(f, db), a.g().transpose()) -
                  lin::kronecker(b.g(), ModMatrix::identity(f, da));
    auto k = lin::kernel_basis(system);
    HomSpace hs{a, b, {}};
    for (std::size_t c = 0; c < k.cols(); ++c) {
        ModMatrix t(f, db, da);
        for (std::size_t i = 0; i < db; ++i)
            for (std::size_t j = 0; j < da; ++j)
                t(i, j) = k(i * da + j, c);
        hs.basis.push_back(std::move(t));
    }
    return hs;
}

bool is_intertwiner(const ZpModule& a, const ZpModule& b, const ModMatrix& t)
{
    if (t.rows() != b.dim() || t.cols() != a.dim())
        return false;
    return t * a.g() == b.g() * t;
}

SymPower sym_power(const ZpModule& x, std::size_t m, const Budget& budget)
{
    const auto& f = x.field();
    const std::size_t n = x.dim();
    using Mono = std::vector<std::uint32_t>;
    const std::size_t tensor_dim = checked_pow(n, m, budget.max_entries);
    budget.require(tensor_dim, "tensor power");

    // Sorted tuples in lexicographic order.
    std::vector<Mono> monos;
    Mono cur;
    auto gen = [&](auto&& self, std::uint32_t lo) -> void {
        if (cur.size() == m) {
            monos.push_back(cur);
            return;
        }
        for (std::uint32_t i = lo; i < n; ++i) {
            cur.push_back(i);
            self(self, i);
            cur.pop_back();
        }
    };
    gen(gen, 0);
    std::map<Mono, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i)
        index.emplace(monos[i], i);

    budget.require(monos.size() * tensor_dim, "symmetric power projection");

    ModMatrix proj(f, monos.size(), tensor_dim);
    Mono digits(m);
    for (std::size_t t = 0; t < tensor_dim; ++t) {
        std::size_t r = t;
        for (std::size_t k = m; k-- > 0;) {
            digits[k] = static_cast<std::uint32_t>(r % n);
            r /= n;
        }
        Mono sorted = digits;
        std::sort(sorted.begin(), sorted.end());
        proj(index.at(sorted), t) = f.one();
    }

    // g acts on monomials multiplicatively: g(x_{t_1} ... x_{t_m}) is the
    // product of the columns g x_{t_k}.
    ModMatrix gs(f, monos.size(), monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c) {
        std::map<Mono, std::uint64_t> poly{{Mono{}, f.one()}};
        for (auto tk : monos[c]) {
            std::map<Mono, std::uint64_t> next;
            for (const auto& [mono, coef] : poly)
                for (std::uint32_t j = 0; j < n; ++j) {
                    const auto gj = x.g()(j, tk);
                    if (f.is_zero(gj))
                        continue;
                    Mono nm = mono;
                    nm.insert(std::upper_bound(nm.begin(), nm.end(), j), j);
                    auto& slot = next[nm];
                    slot = f.add(slot, f.mul(coef, gj));
                }
            poly = std::move(next);
        }
        for (const auto& [mono, coef] : poly)
            gs(index.at(mono), c) = coef;
    }
    return {ZpModule::unchecked(x.p(), std::move(gs)), std::move(proj), std::move(monos)};
}

ModMatrix fixed_points(const ZpModule& m)
{
    return lin::kernel_basis(m.nilpotent());
}

} // namespace vercat::repzp
