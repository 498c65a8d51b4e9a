#include "commands.hpp"

#include "vercat/invariants.hpp"
#include "vercat/svec2.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <random>

namespace vercat::cli {

using lin::ModMatrix;
using ver::VerObject;

namespace {

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = lo; p <= hi; ++p)
        if (lin::is_prime(p))
            out.push_back(p);
    return out;
}

std::vector<std::uint64_t> primes_in(std::initializer_list<std::uint64_t> ps, std::uint64_t p_max)
{
    std::vector<std::uint64_t> out;
    for (auto p : ps)
        if (p <= p_max)
            out.push_back(p);
    return out;
}

std::string terms_string(const std::vector<std::uint64_t>& mult)
{
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] > 0)
            terms.push_back(mult[i] == 1 ? fmt::format("L{}", i + 1) : fmt::format("{}*L{}", mult[i], i + 1));
    return terms.empty() ? "0" : fmt::format("{}", fmt::join(terms, " + "));
}

// The closed fusion formula, or the corrupted one used as a negative control.
std::vector<std::uint64_t> formula_terms(std::uint64_t p, std::size_t r, std::size_t s, bool mutant)
{
    if (!mutant) {
        auto m = ver::fusion_simple(p, r, s).mult();
        m.resize(2 * p, 0);
        return m;
    }
    const std::size_t top = std::min({r, s, p - s});
    const std::size_t base = r > s ? r - s : s - r;
    std::vector<std::uint64_t> m(2 * p, 0);
    for (std::size_t i = 1; i <= top; ++i)
        ++m[base + 2 * i - 2];
    return m;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

double power_of(std::size_t base, std::size_t e)
{
    double out = 1;
    for (std::size_t i = 0; i < e; ++i)
        out *= double(base);
    return out;
}

ModMatrix random_invertible(const lin::PrimeField& f, std::size_t n, std::mt19937_64& rng)
{
    for (;;) {
        auto g = ModMatrix::random(f, n, n, rng);
        if (lin::rank(g) == n)
            return g;
    }
}

repzp::ZpModule random_zp_module(std::uint64_t p, std::size_t max_dim, std::mt19937_64& rng)
{
    std::vector<std::size_t> parts;
    std::size_t dim = 1 + rng() % max_dim, used = 0;
    while (used < dim) {
        const std::size_t part = 1 + rng() % std::min<std::size_t>(p, dim - used);
        parts.push_back(part);
        used += part;
    }
    const auto m = repzp::jordan_module(p, parts);
    const auto h = random_invertible(m.field(), m.dim(), rng);
    return repzp::ZpModule::unchecked(p, h * m.g() * lin::inverse(h));
}

svec2::DModule random_dmodule(std::size_t max_dim, std::mt19937_64& rng)
{
    const std::size_t n = 1 + rng() % max_dim;
    const std::size_t ws = rng() % (n / 2 + 1);
    auto base = ws == 0 ? svec2::trivial(n) : svec2::w_module();
    for (std::size_t i = 1; i < ws; ++i)
        base = svec2::direct_sum(base, svec2::w_module());
    if (ws > 0 && n > 2 * ws)
        base = svec2::direct_sum(base, svec2::trivial(n - 2 * ws));
    const auto h = random_invertible(svec2::gf2(), n, rng);
    return svec2::DModule(h * base.d() * lin::inverse(h));
}

VerObject random_object(std::uint64_t p, std::mt19937_64& rng)
{
    for (;;) {
        std::vector<std::uint64_t> m(p - 1, 0);
        std::uint64_t dim = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] = rng() % 2;
            dim += m[i] * (i + 1);
        }
        if (dim > 0 && dim <= 4)
            return VerObject(p, m);
    }
}

void suite_fusion(Context&, Report& rep, const VerifyOptions& o)
{
    const bool mutant = o.mutant == "drop-p-minus-r";
    const auto primes = primes_between(3, o.p_max);
    std::size_t instances = 0;
    std::string first;
    for (auto p : primes) {
        std::size_t bad = 0, here = 0;
        std::string first_here;
        for (std::size_t r = 1; r < p; ++r)
            for (std::size_t s = 1; s < p; ++s) {
                ++here;
                const auto formula = formula_terms(p, r, s, mutant);
                auto oracle = ver::fusion_by_jordan(VerObject::simple(p, r), VerObject::simple(p, s)).mult();
                oracle.resize(2 * p, 0);
                if (formula == oracle)
                    continue;
                ++bad;
                if (first_here.empty())
                    first_here = fmt::format("p={} r={} s={}: formula {}, oracle {}", p, r, s, terms_string(formula),
                                             terms_string(oracle));
            }
        instances += here;
        if (first.empty())
            first = first_here;
        rep.checks.push_back({fmt::format("fusion formula equals Jordan oracle, p = {}", p), bad == 0,
                              bad == 0 ? fmt::format("{} instances", here)
                                       : fmt::format("{} of {} instances differ; first counterexample {}", bad, here,
                                                     first_here)});
    }
    rep.results["fusion"] = {{"primes", primes}, {"instances", instances}, {"mutant", o.mutant}};
    rep.lines.push_back(fmt::format("fusion: {} instances over primes {}", instances, fmt::join(primes, ", ")));
    if (!first.empty())
        rep.lines.push_back("first counterexample: " + first);
}

void suite_sympow(Context& ctx, Report& rep, const VerifyOptions& o)
{
    // vanishing of S^{p-n+1}(L_n)
    for (auto p : primes_in({3, 5, 7, 11}, o.p_max)) {
        const std::size_t n_max = p == 11 ? 5 : p - 1;
        std::string bad;
        for (std::size_t n = 2; n <= n_max; ++n) {
            const auto s = cached_sym_power(ctx, VerObject::simple(p, n), p - n + 1);
            if (!s.is_zero() && bad.empty())
                bad = fmt::format("S^{}(L{}) = {}", p - n + 1, n, s.to_string());
        }
        rep.checks.push_back({fmt::format("S^(p-n+1)(L_n) = 0, p = {}", p), bad.empty(),
                              bad.empty() ? fmt::format("n = 2..{}", n_max) : bad});
    }
    // dimension of S^m(J_n)
    for (auto p : primes_in({3, 5, 7}, o.p_max)) {
        std::string bad;
        std::size_t count = 0;
        for (std::size_t n = 1; n <= p; ++n)
            for (std::size_t m = 0; m <= 4; ++m) {
                const auto d = repzp::sym_power(repzp::jordan_module(p, {n}), m, ctx.budget).module.dim();
                ++count;
                if (d != binomial(n + m - 1, n - 1) && bad.empty())
                    bad = fmt::format("dim S^{}(J{}) = {}, expected {}", m, n, d, binomial(n + m - 1, n - 1));
            }
        rep.checks.push_back({fmt::format("dim S^m(J_n) = binom(n+m-1, n-1), p = {}", p), bad.empty(),
                              bad.empty() ? fmt::format("{} instances, n <= p, m <= 4", count) : bad});
    }
    // polynomial factorization of the series
    const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> factored{
        {5, {1, 1, 0, 0}}, {7, {2, 0, 1, 0, 0, 0}}, {3, {1, 1}}};
    for (const auto& [p, mult] : factored) {
        if (p > o.p_max)
            continue;
        const VerObject x(p, mult);
        const auto fc = ver::poly_factor_check(cached_series(ctx, x, 10), x.multiplicity(1));
        rep.checks.push_back({fmt::format("S(X) = k[x_1..x_n] (x) Y, X = {}, p = {}, D = 10", x.to_string(), p),
                              fc.passes,
                              fc.passes ? fmt::format("Y = {}, dim {}", fc.y->to_string(), fc.y->total_dimension())
                                        : fc.reason});
    }
    // S(X + Y) = S(X) S(Y)
    std::size_t trial = 0;
    for (auto p : primes_in({3, 5}, o.p_max)) {
        std::string bad;
        for (std::size_t i = 0; i < 5; ++i, ++trial) {
            std::mt19937_64 rng(ctx.seed + trial);
            const auto x = random_object(p, rng), y = random_object(p, rng);
            const auto lhs = cached_series(ctx, x + y, 6);
            const auto rhs = ver::series_product(cached_series(ctx, x, 6), cached_series(ctx, y, 6));
            if (lhs.degrees != rhs.degrees && bad.empty())
                bad = fmt::format("X = {}, Y = {}", x.to_string(), y.to_string());
        }
        rep.checks.push_back({fmt::format("S(X + Y) = S(X) S(Y), p = {}, D = 6", p), bad.empty(),
                              bad.empty() ? "5 random pairs" : "differs for " + bad});
    }
    // semisimplicity of the quotient
    for (auto p : primes_in({3, 5, 7, 11}, o.p_max)) {
        std::string bad;
        for (std::size_t i = 1; i < p; ++i)
            for (std::size_t j = 1; j < p; ++j) {
                const auto d = ver::ver_hom(repzp::jordan_module(p, {i}), repzp::jordan_module(p, {j})).dim();
                if (d != (i == j ? 1u : 0u) && bad.empty())
                    bad = fmt::format("dim Hom(J{}, J{}) = {}", i, j, d);
            }
        const auto jp = repzp::jordan_module(p, {p});
        if (ver::ver_hom(jp, jp).dim() != 0 && bad.empty())
            bad = fmt::format("End(J{}) is not negligible", p);
        rep.checks.push_back({fmt::format("Hom_Ver(J_i, J_j) = delta_ij and End(J_p) negligible, p = {}", p),
                              bad.empty(), bad});
    }
}

void suite_invariants(Context& ctx, Report& rep, const VerifyOptions& o)
{
    if (o.p_max >= 5) {
        const VerObject x(5, {1, 1, 0, 0});
        const std::size_t d = 10;
        const auto alg = inv::InvariantAlgebra::build(x, d, ctx.budget);
        std::string bad;
        for (std::size_t m = 0; m <= d; ++m) {
            const auto expect = cached_sym_power(ctx, x, m).multiplicity(1);
            if (alg.dim(m) != expect && bad.empty())
                bad = fmt::format("degree {}: {} invariants, L1 multiplicity {}", m, alg.dim(m), expect);
        }
        rep.checks.push_back({"invariant dimensions equal L1 multiplicities, X = 1 + L2, p = 5", bad.empty(), bad});

        const auto g = inv::generator_degrees(alg);
        const std::size_t window = d + 1 - (d + 2) / 3;
        std::vector<std::size_t> counts;
        bool quiet = true;
        for (const auto& c : g) {
            counts.push_back(c.count);
            if (c.degree >= window && c.count > 0)
                quiet = false;
        }
        rep.checks.push_back({"invariant generators eventually zero, X = 1 + L2, p = 5, D = 10", quiet,
                              fmt::format("new generators by degree: {}", fmt::join(counts, ", "))});

        const auto mf = inv::module_finiteness_check(x, d, ctx.budget);
        std::vector<std::string> sel;
        for (const auto& s : mf.selections)
            sel.push_back(fmt::format("{}*L{}@{}", s.count, s.simple, s.degree));
        rep.checks.push_back({"module generators stabilize, X = 1 + L2, p = 5, D = 10", mf.stabilized,
                              fmt::format("selections {}; window {}..{}; evidence up to truncation",
                                          fmt::join(sel, ", "), mf.window_start, d)});

        const auto trials = ctx.trials_or(100);
        const auto iso = inv::isotypic_stability_check(x, d, trials, ctx.seed, ctx.budget);
        rep.checks.push_back({"multiplication by invariants preserves isotypic type, X = 1 + L2, p = 5", iso.passed,
                              iso.passed ? fmt::format("{} trials", iso.trials) : iso.detail});

        const auto fr = inv::frobenius_check(alg, ctx.trials_or(50), ctx.seed);
        rep.checks.push_back({"Frobenius on invariants, X = 1 + L2, p = 5, D = 10", fr.passed,
                              fr.passed ? fmt::format("{} trials", fr.trials) : fr.detail});
    }
    const std::vector<std::tuple<std::uint64_t, std::vector<std::uint64_t>, std::size_t>> grid{
        {2, {1}, 4}, {3, {1, 1}, 9}, {7, {2, 0, 1, 0, 0, 0}, 7}};
    for (const auto& [p, mult, d] : grid) {
        if (p > o.p_max)
            continue;
        const VerObject x(p, mult);
        const auto fr = inv::frobenius_check(inv::InvariantAlgebra::build(x, d, ctx.budget), ctx.trials_or(50), ctx.seed);
        rep.checks.push_back({fmt::format("Frobenius on invariants, X = {}, p = {}, D = {}", x.to_string(), p, d),
                              fr.passed, fr.passed ? fmt::format("{} trials", fr.trials) : fr.detail});
    }
}

void suite_svec2(Context& ctx, Report& rep, const VerifyOptions&)
{
    const auto f = svec2::gf2();
    const auto w = svec2::w_module();
    {
        const svec2::DModule u(ModMatrix(f, 1, 1), {"y"});
        const auto r = svec2::injectivity_check(u, w, ModMatrix::column_from_ints(f, {0, 1}), 5, ctx.budget);
        const bool ok = r.first_failure == std::optional<std::size_t>{2} && r.witness == "y^2";
        svec2::DGradedAlgebra s(w, 2, ctx.budget);
        rep.checks.push_back({"S(<y>) -> S(W) fails to be injective first in degree 2", ok,
                              r.first_failure ? fmt::format("degree {}, kernel {}", *r.first_failure, r.witness)
                                              : std::string("injective up to degree 5")});
        rep.checks.push_back({"dim S^2(W) = 2", s.dim(2) == 2,
                              fmt::format("basis {}", fmt::join(s.basis_names(2), ", "))});
    }
    const auto trials = ctx.trials_or(200);
    for (const auto& [name, x] : {std::pair{std::string("W"), w},
                                  std::pair{std::string("W + 1"), svec2::direct_sum(w, svec2::trivial(1))}}) {
        const auto r = svec2::fourth_power_checks(x, 8, trials, ctx.seed, ctx.budget);
        for (const auto& id : r.identities)
            rep.checks.push_back({fmt::format("S({}), D = 8: {}", name, id.name), id.passed(),
                                  id.passed() ? fmt::format("{} trials", id.trials)
                                              : fmt::format("{} failures; {}", id.failures, id.counterexample)});
    }
    {
        std::mt19937_64 rng(ctx.seed);
        std::size_t bad = 0;
        for (int i = 0; i < 100; ++i) {
            const auto x = random_dmodule(4, rng), y = random_dmodule(4, rng);
            bad += !(svec2::braiding(y, x) * svec2::braiding(x, y)).is_identity();
        }
        rep.checks.push_back({"sVec_2 braiding squares to the identity", bad == 0,
                              fmt::format("100 random pairs, {} failures", bad)});
    }
    {
        std::mt19937_64 rng(ctx.seed + 1);
        std::size_t bad = 0;
        for (int i = 0; i < 100; ++i) {
            const std::uint64_t p = i % 2 ? 5 : 3;
            const auto x = random_zp_module(p, 4, rng), y = random_zp_module(p, 4, rng);
            const auto c = repzp::swap_matrix(x.field(), x.dim(), y.dim());
            const auto back = repzp::swap_matrix(x.field(), y.dim(), x.dim());
            const bool ok = (back * c).is_identity() && c * repzp::tensor(x, y).g() == repzp::tensor(y, x).g() * c;
            bad += !ok;
        }
        rep.checks.push_back({"Rep(Z/p) swap is a symmetric braiding", bad == 0,
                              fmt::format("100 random pairs over p = 3, 5, {} failures", bad)});
    }
    {
        std::size_t bad = 0, count = 0;
        for (std::size_t ws = 0; ws <= 1; ++ws)
            for (std::size_t t = 0; 2 * ws + t <= 3; ++t) {
                if (ws + t == 0)
                    continue;
                auto x = ws ? (t ? svec2::direct_sum(w, svec2::trivial(t)) : w) : svec2::trivial(t);
                svec2::DGradedAlgebra s(x, 5, ctx.budget);
                ++count;
                bad += !svec2::d_commutative(s);
            }
        rep.checks.push_back({"ab + ba = d(a) d(b) on basis pairs, all modules of dim <= 3, D = 5", bad == 0,
                              fmt::format("{} modules", count)});
    }
}

void suite_char0(Context&, Report& rep, const VerifyOptions& o)
{
    const auto rows = inv::char0_counterexample(o.max_degree);
    bool ok = true;
    std::vector<std::string> gens;
    for (const auto& r : rows) {
        if (r.degree >= 3) {
            ok = ok && r.new_generators == 1 && r.invariant_dim == 1;
            gens.push_back(fmt::format("{}", fmt::join(r.basis, " + ")));
        }
        rep.table.rows.push_back({std::to_string(r.degree), std::to_string(r.invariant_dim),
                                  std::to_string(r.new_generators), fmt::format("{}", fmt::join(r.basis, "; "))});
    }
    rep.table.header = {"degree", "invariant_dim", "new_generators", "basis"};
    std::string extra = rows.size() > 2 && rows[2].new_generators > 0
                            ? fmt::format("; degree 2 also contributes {}", fmt::join(rows[2].basis, ", "))
                            : "";
    rep.checks.push_back({fmt::format("char 0: one new invariant generator in every degree 3..{} "
                                      "(EXPECTED-NONTERMINATION)",
                                      o.max_degree),
                          ok, fmt::format("generators {}{}", fmt::join(gens, ", "), extra), "demo"});
}

void suite_sympow_comparison(Context& ctx, Report& rep, const VerifyOptions& o)
{
    rep.table.header = {"p", "object", "degree", "quotient_of_sym_power", "ver_sym_power"};
    for (auto p : primes_in({3, 5}, o.p_max)) {
        std::size_t agree = 0, total = 0;
        for (std::size_t n = 1; n < p; ++n)
            for (std::size_t m = 0; m <= p + 1; ++m) {
                if (power_of(n, m) * double(binomial(n + m - 1, m)) > double(ctx.budget.max_entries))
                    continue;
                const auto x = VerObject::simple(p, n);
                const auto q = ver::quotient(repzp::sym_power(ver::representative(x), m, ctx.budget).module);
                const auto v = cached_sym_power(ctx, x, m);
                ++total;
                if (q == v) {
                    ++agree;
                    continue;
                }
                rep.table.rows.push_back(
                    {std::to_string(p), x.to_string(), std::to_string(m), q.to_string(), v.to_string()});
            }
        rep.checks.push_back({fmt::format("quotient of the Rep(Z/p) symmetric power vs S^m in Ver_p, p = {}", p),
                              true, fmt::format("agree on {} of {} instances", agree, total), "experiment"});
    }
}

} // namespace

Report cmd_verify(Context& ctx, const VerifyOptions& o)
{
    Report rep;
    rep.command = "verify";
    rep.parameters = {{"suite", o.suite}, {"p_max", o.p_max}, {"max_degree", o.max_degree}};
    if (!o.mutant.empty())
        rep.parameters["mutant"] = o.mutant;
    rep.seed = ctx.seed;
    if (o.p_max < 3)
        throw PreconditionError("--p-max must be at least 3");
    if (o.max_degree < 3)
        throw PreconditionError("--max-degree must be at least 3");
    const bool all = o.suite == "all";
    if (all || o.suite == "fusion")
        suite_fusion(ctx, rep, o);
    if (all || o.suite == "sympow")
        suite_sympow(ctx, rep, o);
    if (all || o.suite == "invariants")
        suite_invariants(ctx, rep, o);
    if (all || o.suite == "svec2")
        suite_svec2(ctx, rep, o);
    if (all || o.suite == "char0")
        suite_char0(ctx, rep, o);
    if (o.suite == "sympow-comparison")
        suite_sympow_comparison(ctx, rep, o);
    return rep;
}

} // namespace vercat::cli
