#include "vercat/invariants.hpp"

#include "vercat/repzp.hpp"

#include <fmt/format.h>

#include <random>

namespace vercat::inv {

namespace {

using Vec = std::vector<std::uint64_t>;

ModMatrix as_column(const lin::PrimeField& f, const Vec& v)
{
    ModMatrix m(f, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

Vec column_entries(const ModMatrix& m, std::size_t c = 0)
{
    Vec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        out[i] = m(i, c);
    return out;
}

// Socle positions of the J_i blocks of R_m: coordinates of M_i(R_m).
std::vector<std::size_t> socles(ver::VerSymmetricAlgebra& s, std::size_t m, std::size_t i)
{
    return s.block_offsets(m, i);
}

ModMatrix restrict_rows(const ModMatrix& m, const std::vector<std::size_t>& rows)
{
    return m.select_rows(rows);
}

ModMatrix random_invertible(const lin::PrimeField& f, std::size_t n, std::mt19937_64& rng)
{
    for (;;) {
        auto g = ModMatrix::random(f, n, n, rng);
        if (lin::rank(g) == n)
            return g;
    }
}

} // namespace

InvariantAlgebra InvariantAlgebra::build(const VerObject& x, std::size_t max_degree, const Budget& budget)
{
    auto sym = std::make_shared<ver::VerSymmetricAlgebra>(x, budget);
    sym->extend_to(max_degree);
    InvariantAlgebra out(x, sym->field());
    out.sym_ = sym;
    std::vector<std::vector<std::size_t>> pos;
    for (std::size_t m = 0; m <= max_degree; ++m) {
        pos.push_back(socles(*sym, m, 1));
        out.dims_.push_back(pos.back().size());
    }
    for (std::size_t a = 0; a <= max_degree; ++a)
        for (std::size_t b = 0; a + b <= max_degree; ++b) {
            const auto& prod = sym->product(a, b);
            std::vector<std::size_t> cols;
            const std::size_t db = sym->dim(b);
            for (auto u : pos[a])
                for (auto v : pos[b])
                    cols.push_back(u * db + v);
            out.tables_.emplace(std::make_pair(a, b), restrict_rows(prod.select_columns(cols), pos[a + b]));
        }
    return out;
}

Vec InvariantAlgebra::multiply(std::size_t a, const Vec& u, std::size_t b, const Vec& v) const
{
    const auto& t = product_table(a, b);
    const auto uv = lin::kronecker(as_column(field_, u), as_column(field_, v));
    return column_entries(t * uv);
}

Vec InvariantAlgebra::power(std::size_t a, const Vec& u, std::size_t e) const
{
    if (e * a > max_degree())
        throw PreconditionError(fmt::format("power of degree {} beyond truncation {}", e * a, max_degree()));
    Vec out{field_.one()};
    for (std::size_t i = 0; i < e; ++i)
        out = multiply(i * a, out, a, u);
    return out;
}

InvariantAlgebra InvariantAlgebra::with_basis_change(std::uint64_t seed) const
{
    std::mt19937_64 rng(seed);
    std::vector<ModMatrix> g, ginv;
    for (std::size_t m = 0; m <= max_degree(); ++m) {
        g.push_back(m == 0 ? ModMatrix::identity(field_, dims_[m]) : random_invertible(field_, dims_[m], rng));
        ginv.push_back(lin::inverse(g.back()));
    }
    InvariantAlgebra out(*this);
    // new basis vectors are the columns of g
    for (auto& [key, t] : out.tables_)
        t = ginv[key.first + key.second] * t * lin::kronecker(g[key.first], g[key.second]);
    return out;
}

std::vector<GeneratorCount> generator_degrees(const InvariantAlgebra& a)
{
    std::vector<GeneratorCount> out{{0, a.dim(0)}};
    for (std::size_t m = 1; m <= a.max_degree(); ++m) {
        ModMatrix span(a.field(), a.dim(m), 0);
        for (std::size_t i = 1; i < m; ++i)
            span = span.hconcat(a.product_table(i, m - i));
        out.push_back({m, a.dim(m) - lin::rank(span)});
    }
    return out;
}

ModuleFiniteness module_finiteness_check(const VerObject& x, std::size_t max_degree, const Budget& budget)
{
    auto alg = InvariantAlgebra::build(x, max_degree, budget);
    auto& s = alg.symmetric_algebra();
    const auto& f = alg.field();
    const std::size_t p = x.p();
    ModuleFiniteness out;
    out.window_start = max_degree + 1 - (max_degree + 2) / 3;
    // chosen[m][i]: socle vectors in R_m of the selected L_i-type elements
    std::vector<std::vector<ModMatrix>> chosen(max_degree + 1);
    for (std::size_t m = 0; m <= max_degree; ++m) {
        const std::size_t dm = s.dim(m);
        for (std::size_t i = 1; i < p; ++i) {
            const auto pos = socles(s, m, i);
            ModMatrix span(f, pos.size(), 0);
            for (std::size_t a = 1; a <= m; ++a) {
                const auto& sel = chosen[m - a][i - 1];
                if (sel.cols() == 0 || alg.dim(a) == 0)
                    continue;
                const auto inv_pos = socles(s, a, 1);
                ModMatrix invs(f, s.dim(a), inv_pos.size());
                for (std::size_t k = 0; k < inv_pos.size(); ++k)
                    invs(inv_pos[k], k) = f.one();
                span = span.hconcat(restrict_rows(s.product(a, m - a) * lin::kronecker(invs, sel), pos));
            }
            ModMatrix picks(f, dm, 0);
            lin::IncrementalSpan<lin::PrimeField> basis(f, pos.size());
            for (std::size_t c = 0; c < span.cols(); ++c)
                basis.insert_column(span, c);
            for (std::size_t k = 0; k < pos.size(); ++k) {
                Vec unit(pos.size(), 0);
                unit[k] = f.one();
                if (basis.insert(unit)) {
                    ModMatrix e(f, dm, 1);
                    e(pos[k], 0) = f.one();
                    picks = picks.hconcat(e);
                }
            }
            if (picks.cols() > 0)
                out.selections.push_back({m, i, picks.cols()});
            chosen[m].push_back(std::move(picks));
        }
    }
    out.stabilized = true;
    for (const auto& g : out.selections)
        if (g.degree >= out.window_start)
            out.stabilized = false;
    return out;
}

CheckOutcome isotypic_stability_check(const VerObject& x, std::size_t max_degree, std::size_t trials,
                                      std::uint64_t seed, const Budget& budget)
{
    auto alg = InvariantAlgebra::build(x, max_degree, budget);
    auto& s = alg.symmetric_algebra();
    const auto& f = alg.field();
    const std::uint64_t p = x.p();
    CheckOutcome out;
    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + t);
        const std::size_t a = rng() % (max_degree + 1);
        const std::size_t m = rng() % (max_degree - a + 1);
        std::vector<std::size_t> types;
        for (std::size_t i = 1; i < p; ++i)
            if (!s.block_offsets(m, i).empty())
                types.push_back(i);
        if (alg.dim(a) == 0 || types.empty())
            continue;
        const std::size_t i = types[rng() % types.size()];
        ++out.trials;

        // random invariant of degree a, as a vector of R_a
        const auto inv_pos = socles(s, a, 1);
        Vec coords(inv_pos.size());
        for (auto& c : coords)
            c = rng() % p;
        ModMatrix sv(f, s.dim(a), 1);
        for (std::size_t k = 0; k < inv_pos.size(); ++k)
            sv(inv_pos[k], 0) = coords[k];

        // random intertwiner J_i -> R_m along the J_i chains
        const auto chains = s.block_offsets(m, i);
        Vec acoef(chains.size());
        ModMatrix phi(f, s.dim(m), i);
        for (std::size_t k = 0; k < chains.size(); ++k) {
            acoef[k] = rng() % p;
            for (std::size_t q = 0; q < i; ++q)
                phi(chains[k] + q, q) = acoef[k];
        }

        const auto prod = s.product(a, m) * lin::kronecker(sv, phi);
        const auto target = s.module(a + m);
        const auto ji = repzp::jordan_module(p, {i});
        auto fail = [&](const std::string& why) {
            if (out.passed)
                out.detail = fmt::format("trial {} (degrees {}, {}, type L{}): {}", t, a, m, i, why);
            out.passed = false;
        };
        if (!(target.nilpotent() * prod == prod * ji.nilpotent()))
            fail("product is not an intertwiner");
        const auto& blocks = s.blocks(a + m);
        std::size_t off = 0;
        for (auto b : blocks) {
            if (b != i) {
                std::vector<std::size_t> rows(b);
                for (std::size_t q = 0; q < b; ++q)
                    rows[q] = off + q;
                if (!ver::is_negligible(ji, repzp::jordan_module(p, {b}), prod.select_rows(rows)))
                    fail(fmt::format("component into J{} is not negligible", b));
            }
            off += b;
        }
        if (i == 1) {
            const auto expect = alg.multiply(a, coords, m, acoef);
            if (column_entries(restrict_rows(prod, socles(s, a + m, 1))) != expect)
                fail("invariant projection does not commute with the product");
        }
    }
    return out;
}

CheckOutcome frobenius_check(const InvariantAlgebra& a, std::size_t trials, std::uint64_t seed)
{
    const std::uint64_t p = a.p();
    const auto& f = a.field();
    const std::size_t top = a.max_degree() / p;
    bool useful = false;
    for (std::size_t d = 1; d <= top; ++d)
        useful = useful || a.dim(d) > 0;
    if (!useful)
        throw PreconditionError(
            fmt::format("no invariant of positive degree at most {} / {} to raise to the p-th power", a.max_degree(), p));

    using Graded = std::vector<Vec>;
    const std::size_t dmax = a.max_degree();
    auto zero = [&]() {
        Graded g;
        for (std::size_t m = 0; m <= dmax; ++m)
            g.emplace_back(a.dim(m), 0);
        return g;
    };
    auto add = [&](const Graded& u, const Graded& v) {
        auto w = u;
        for (std::size_t m = 0; m <= dmax; ++m)
            for (std::size_t k = 0; k < w[m].size(); ++k)
                w[m][k] = f.add(w[m][k], v[m][k]);
        return w;
    };
    auto mul = [&](const Graded& u, const Graded& v) {
        auto w = zero();
        for (std::size_t i = 0; i <= dmax; ++i)
            for (std::size_t j = 0; i + j <= dmax; ++j) {
                if (u[i].empty() || v[j].empty())
                    continue;
                auto r = a.multiply(i, u[i], j, v[j]);
                for (std::size_t k = 0; k < r.size(); ++k)
                    w[i + j][k] = f.add(w[i + j][k], r[k]);
            }
        return w;
    };
    auto pow = [&](const Graded& u) {
        auto w = zero();
        w[0][0] = f.one();
        for (std::uint64_t e = 0; e < p; ++e)
            w = mul(w, u);
        return w;
    };

    CheckOutcome out;
    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + t);
        auto sample = [&]() {
            auto g = zero();
            for (std::size_t m = 0; m <= top; ++m)
                for (auto& c : g[m])
                    c = rng() % p;
            return g;
        };
        const auto u = sample(), v = sample();
        ++out.trials;
        const auto up = pow(u), vp = pow(v);
        if (pow(add(u, v)) != add(up, vp) && out.passed) {
            out.passed = false;
            out.detail = fmt::format("trial {}: p-th power is not additive", t);
        }
        if (pow(mul(u, v)) != mul(up, vp) && out.passed) {
            out.passed = false;
            out.detail = fmt::format("trial {}: p-th power is not multiplicative", t);
        }
    }

    const auto& x = a.generator();
    auto& s = a.symmetric_algebra();
    for (std::size_t i = 2; i < p; ++i) {
        if (x.multiplicity(i) == 0)
            continue;
        if (!ver::ver_sym_power(VerObject::simple(p, i), p).is_zero() && out.passed) {
            out.passed = false;
            out.detail = fmt::format("S^{}(L{}) is nonzero", p, i);
        }
        double size = 1;
        for (std::uint64_t e = 0; e < p; ++e)
            size *= double(i);
        if (size > 256 || dmax < p)
            continue;
        // the p-fold product restricted to the first J_i block of R(X)
        const auto& blocks = s.blocks(1);
        std::size_t off = 0;
        for (std::size_t k = 0; blocks[k] != i; ++k)
            off += blocks[k];
        ModMatrix incl(f, s.dim(1), i);
        for (std::size_t q = 0; q < i; ++q)
            incl(off + q, q) = f.one();
        ModMatrix phi = incl;
        for (std::size_t k = 2; k <= p; ++k)
            phi = s.product(1, k - 1) * lin::kronecker(incl, phi);
        const auto src = repzp::tensor_power(repzp::jordan_module(p, {i}), p);
        if (!ver::is_negligible(src, s.module(p), phi) && out.passed) {
            out.passed = false;
            out.detail = fmt::format("p-fold product on J{} is not negligible", i);
        }
    }
    return out;
}

} // namespace vercat::inv
