#include "vercat/ver_symmetric_algebra.hpp"

#include <fmt/format.h>

namespace vercat::ver {

namespace {

std::vector<std::size_t> offsets_of(const std::vector<std::size_t>& blocks)
{
    std::vector<std::size_t> off;
    std::size_t o = 0;
    for (auto b : blocks) {
        off.push_back(o);
        o += b;
    }
    return off;
}

} // namespace

VerSymmetricAlgebra::VerSymmetricAlgebra(VerObject x, Budget budget)
    : x_(std::move(x)), budget_(budget), field_(x_.p())
{
    const auto id1 = ModMatrix::identity(field_, 1);
    levels_.push_back(Level{{1}, {0}, 1, id1, id1});
    // R (x) R_0 = R.
    const auto idn = ModMatrix::identity(field_, x_.total_dimension());
    levels_.push_back(Level{x_.block_sizes(), offsets_of(x_.block_sizes()), x_.total_dimension(), idn, idn});
}

const VerSymmetricAlgebra::Piece& VerSymmetricAlgebra::piece(std::size_t a, std::size_t b)
{
    auto& slot = pieces_[{a, b}];
    if (!slot) {
        auto na = repzp::jordan_block_nilpotent(field_, a);
        auto nb = repzp::jordan_block_nilpotent(field_, b);
        auto ia = ModMatrix::identity(field_, a);
        auto ib = ModMatrix::identity(field_, b);
        // (1 + Na) (x) (1 + Nb) - 1
        auto n = lin::kronecker(na, ib) + lin::kronecker(ia, nb) + lin::kronecker(na, nb);
        slot = std::make_unique<Piece>(lin::jordan_basis(n));
    }
    return *slot;
}

void VerSymmetricAlgebra::extend_to(std::size_t k)
{
    while (computed_degree() < k)
        build_next();
}

void VerSymmetricAlgebra::build_next()
{
    const std::size_t k = levels_.size();
    const std::uint64_t p = x_.p();
    const Level& one = levels_[1];
    const Level& prev = levels_[k - 1];
    const Level& prev2 = levels_[k - 2];
    const std::size_t n = one.dim, d1 = prev.dim, d2 = prev2.dim;
    const std::size_t dim_a = n * d1;
    const auto& f = field_;

    // Chains of A = R (x) R_{k-1}, grouped by length; position t in
    // chains[j] is coordinate t of M_j(A).
    struct ChainRef {
        std::size_t alpha, beta, chain;
    };
    std::vector<std::vector<ChainRef>> chains(p);
    for (std::size_t a = 0; a < one.blocks.size(); ++a)
        for (std::size_t b = 0; b < prev.blocks.size(); ++b) {
            const auto& pc = piece(one.blocks[a], prev.blocks[b]);
            for (std::size_t c = 0; c < pc.sizes.size(); ++c)
                if (pc.sizes[c] < p)
                    chains[pc.sizes[c]].push_back({a, b, c});
        }
    auto global = [&](const ChainRef& ch, std::size_t local) {
        const std::size_t sb = prev.blocks[ch.beta];
        return (one.offsets[ch.alpha] + local / sb) * d1 + prev.offsets[ch.beta] + local % sb;
    };

    std::vector<lin::IncrementalSpan<lin::PrimeField>> spans;
    std::vector<std::vector<std::vector<std::uint64_t>>> images(p);
    for (std::size_t j = 0; j < p; ++j)
        spans.emplace_back(f, chains[j].size());

    // Relations: socles of the chains of B = R (x) R (x) R_{k-2}, pushed
    // through (1 (x) mu_{k-1}) ((1 - tau) (x) 1). Block pairs (a, b) and
    // (b, a) of R (x) R give the same image, so only a <= b is visited.
    const ModMatrix mu_t = prev.mu.transpose();
    std::vector<std::uint64_t> vec_a(dim_a);
    struct Entry {
        std::size_t i1, i2, l;
        std::uint64_t v;
    };
    std::vector<Entry> entries;
    for (std::size_t a = 0; a < one.blocks.size(); ++a)
        for (std::size_t b = a; b < one.blocks.size(); ++b) {
            const std::size_t ra = one.blocks[a], rb = one.blocks[b];
            const auto& cp = piece(ra, rb);
            for (std::size_t c = 0; c < cp.sizes.size(); ++c) {
                const std::size_t len = cp.sizes[c];
                if (len >= p)
                    continue;
                for (std::size_t g = 0; g < prev2.blocks.size(); ++g) {
                    const std::size_t t = prev2.blocks[g];
                    const auto& ep = piece(len, t);
                    for (std::size_t e = 0; e < ep.sizes.size(); ++e) {
                        const std::size_t j = ep.sizes[e];
                        if (j >= p || spans[j].rank() == spans[j].dim())
                            continue;
                        entries.clear();
                        for (std::size_t u = 0; u < len; ++u)
                            for (std::size_t z = 0; z < t; ++z) {
                                const auto ce = ep.basis(u * t + z, ep.offsets[e]);
                                if (ce == 0)
                                    continue;
                                for (std::size_t x = 0; x < ra; ++x)
                                    for (std::size_t y = 0; y < rb; ++y) {
                                        const auto cc = cp.basis(x * rb + y, cp.offsets[c] + u);
                                        if (cc == 0)
                                            continue;
                                        const auto v = f.mul(ce, cc);
                                        const std::size_t i1 = one.offsets[a] + x;
                                        const std::size_t i2 = one.offsets[b] + y;
                                        const std::size_t l = prev2.offsets[g] + z;
                                        entries.push_back({i1, i2, l, v});
                                        entries.push_back({i2, i1, l, f.neg(v)});
                                    }
                            }
                        std::fill(vec_a.begin(), vec_a.end(), 0);
                        for (const auto& en : entries) {
                            auto col = mu_t.row(en.i2 * d2 + en.l);
                            for (std::size_t r = 0; r < d1; ++r)
                                if (col[r] != 0)
                                    vec_a[en.i1 * d1 + r] = f.add(vec_a[en.i1 * d1 + r], f.mul(en.v, col[r]));
                        }
                        // Coordinates in M_j(A): socle coefficients of the
                        // length-j chains.
                        std::vector<std::uint64_t> coords(chains[j].size());
                        for (std::size_t s = 0; s < chains[j].size(); ++s) {
                            const auto& ch = chains[j][s];
                            const auto& pc = piece(one.blocks[ch.alpha], prev.blocks[ch.beta]);
                            const std::size_t row = pc.offsets[ch.chain];
                            std::uint64_t acc = 0;
                            for (std::size_t loc = 0; loc < pc.basis.rows(); ++loc) {
                                const auto w = vec_a[global(ch, loc)];
                                if (w != 0)
                                    acc = f.add(acc, f.mul(pc.inverse(row, loc), w));
                            }
                            coords[s] = acc;
                        }
                        if (spans[j].insert(coords))
                            images[j].push_back(std::move(coords));
                    }
                }
            }
        }

    Level next{{}, {}, 0, ModMatrix(f), ModMatrix(f)};
    std::vector<lin::QuotientBasis<lin::PrimeField>> quotients;
    quotients.reserve(p);
    for (std::size_t j = 0; j < p; ++j) {
        const std::size_t mj = chains[j].size();
        ModMatrix img(f, mj, images[j].size());
        for (std::size_t c = 0; c < images[j].size(); ++c)
            for (std::size_t r = 0; r < mj; ++r)
                img(r, c) = images[j][c][r];
        quotients.push_back(lin::quotient_basis(ModMatrix::identity(f, mj), img));
        if (j > 0)
            next.blocks.insert(next.blocks.end(), quotients.back().projection.rows(), j);
    }
    next.offsets = offsets_of(next.blocks);
    next.dim = 0;
    for (auto b : next.blocks)
        next.dim += b;
    budget_.require(next.dim * dim_a, fmt::format("lift of the multiplication into degree {}", k));

    next.mu = ModMatrix(f, next.dim, dim_a);
    next.sigma = ModMatrix(f, dim_a, next.dim);
    std::size_t off = 0;
    for (std::size_t j = 1; j < p; ++j) {
        const auto& q = quotients[j];
        for (std::size_t s = 0; s < q.projection.rows(); ++s, off += j)
            for (std::size_t t = 0; t < chains[j].size(); ++t) {
                const auto& ch = chains[j][t];
                const auto& pc = piece(one.blocks[ch.alpha], prev.blocks[ch.beta]);
                const auto pm = q.projection(s, t);
                const auto sg = q.representatives(t, s);
                for (std::size_t e = 0; e < j; ++e) {
                    const std::size_t cpos = pc.offsets[ch.chain] + e;
                    for (std::size_t loc = 0; loc < pc.basis.rows(); ++loc) {
                        const std::size_t gi = global(ch, loc);
                        if (pm != 0)
                            next.mu(off + e, gi) = f.add(next.mu(off + e, gi), f.mul(pm, pc.inverse(cpos, loc)));
                        if (sg != 0)
                            next.sigma(gi, off + e) = f.add(next.sigma(gi, off + e), f.mul(sg, pc.basis(loc, cpos)));
                    }
                }
            }
    }
    levels_.push_back(std::move(next));
}

VerObject VerSymmetricAlgebra::degree(std::size_t k)
{
    std::vector<std::uint64_t> mult(p() - 1, 0);
    for (auto b : blocks(k))
        ++mult[b - 1];
    return VerObject(p(), std::move(mult));
}

const std::vector<std::size_t>& VerSymmetricAlgebra::blocks(std::size_t k)
{
    extend_to(k);
    return levels_[k].blocks;
}

std::size_t VerSymmetricAlgebra::dim(std::size_t k)
{
    extend_to(k);
    return levels_[k].dim;
}

std::vector<std::size_t> VerSymmetricAlgebra::block_offsets(std::size_t k, std::size_t j)
{
    extend_to(k);
    std::vector<std::size_t> out;
    const auto& lv = levels_[k];
    for (std::size_t i = 0; i < lv.blocks.size(); ++i)
        if (lv.blocks[i] == j)
            out.push_back(lv.offsets[i]);
    return out;
}

ZpModule VerSymmetricAlgebra::module(std::size_t k)
{
    return repzp::jordan_module(p(), blocks(k));
}

const ModMatrix& VerSymmetricAlgebra::mu(std::size_t k)
{
    extend_to(k);
    return levels_[k].mu;
}

const ModMatrix& VerSymmetricAlgebra::sigma(std::size_t k)
{
    extend_to(k);
    return levels_[k].sigma;
}

const ModMatrix& VerSymmetricAlgebra::product(std::size_t a, std::size_t b)
{
    if (auto it = products_.find({a, b}); it != products_.end())
        return it->second;
    extend_to(a + b);
    const std::size_t db = dim(b);
    ModMatrix result(field_);
    if (a == 0) {
        result = ModMatrix::identity(field_, db);
    } else {
        // mu_{a,b} = mu_{a+b} (1 (x) mu_{a-1,b}) (sigma_a (x) 1)
        const std::size_t n = dim(1), da = dim(a), dprev = dim(a - 1), dtop = dim(a + b - 1);
        budget_.require(n * dtop * da * db, fmt::format("product of degrees {} and {}", a, b));
        const ModMatrix inner = product(a - 1, b);
        const ModMatrix& sg = sigma(a);
        const auto id_b = ModMatrix::identity(field_, db);
        ModMatrix stacked(field_, n * dtop, da * db);
        for (std::size_t i = 0; i < n; ++i) {
            auto slice = sg.block(i * dprev, 0, dprev, da);
            stacked.set_block(i * dtop, 0, inner * lin::kronecker(slice, id_b));
        }
        result = mu(a + b) * stacked;
    }
    return products_.emplace(std::make_pair(a, b), std::move(result)).first->second;
}

} // namespace vercat::ver
