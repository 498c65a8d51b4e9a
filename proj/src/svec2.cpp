#include "vercat/svec2.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace vercat::svec2 {

namespace {

std::string base_name(const std::string& s)
{
    auto end = s.find_last_not_of("0123456789");
    return end == std::string::npos ? s : s.substr(0, end + 1);
}

std::string with_suffix(const std::string& s, std::size_t k)
{
    return k == 1 ? s : base_name(s) + std::to_string(k);
}

} // namespace

PrimeField gf2()
{
    return PrimeField(2);
}

DModule::DModule(ModMatrix d, std::vector<std::string> names) : d_(std::move(d)), names_(std::move(names))
{
    if (d_.field().characteristic() != 2)
        throw PreconditionError("sVec_2 modules live over GF(2)");
    if (!d_.is_square())
        throw PreconditionError("d must be square");
    if (!(d_ * d_).is_zero())
        throw PreconditionError("d does not square to zero");
    if (names_.empty())
        for (std::size_t i = 0; i < dim(); ++i)
            names_.push_back("e" + std::to_string(i));
    if (names_.size() != dim())
        throw PreconditionError("one name per basis vector is required");
}

DModule trivial(std::size_t n)
{
    DModule out(ModMatrix(gf2(), 0, 0));
    for (std::size_t i = 0; i < n; ++i)
        out = direct_sum(out, DModule(ModMatrix(gf2(), 1, 1), {"z"}));
    return out;
}

DModule w_module()
{
    return DModule(ModMatrix::from_ints(gf2(), {{0, 0}, {1, 0}}), {"x", "y"});
}

DModule direct_sum(const DModule& a, const DModule& b)
{
    ModMatrix d(gf2(), a.dim() + b.dim(), a.dim() + b.dim());
    d.set_block(0, 0, a.d());
    d.set_block(a.dim(), a.dim(), b.d());
    std::set<std::string> used(a.names().begin(), a.names().end());
    // One suffix for the whole summand, so a second W becomes x2, y2.
    std::size_t k = 1;
    for (;; ++k) {
        bool ok = true;
        for (const auto& n : b.names())
            ok = ok && !used.count(with_suffix(n, k));
        if (ok)
            break;
    }
    auto names = a.names();
    for (const auto& n : b.names())
        names.push_back(with_suffix(n, k));
    return DModule(d, names);
}

DModule tensor(const DModule& a, const DModule& b)
{
    const auto f = gf2();
    auto d = lin::kronecker(a.d(), ModMatrix::identity(f, b.dim())) +
             lin::kronecker(ModMatrix::identity(f, a.dim()), b.d());
    std::vector<std::string> names;
    for (const auto& x : a.names())
        for (const auto& y : b.names())
            names.push_back(x + "*" + y);
    return DModule(d, names);
}

ModMatrix braiding(const DModule& x, const DModule& y)
{
    const auto f = gf2();
    // swap o (1 (x) 1 + d (x) d)
    auto r = ModMatrix::identity(f, x.dim() * y.dim()) + lin::kronecker(x.d(), y.d());
    return lin::commutation_matrix(f, x.dim(), y.dim()) * r;
}

bool is_intertwiner(const DModule& x, const DModule& y, const ModMatrix& f)
{
    return f.rows() == y.dim() && f.cols() == x.dim() && f * x.d() == y.d() * f;
}

DGradedAlgebra::DGradedAlgebra(DModule x, std::size_t max_degree, Budget budget)
    : x_(std::move(x)),
      engine_(gf2(), braiding(x_, x_), x_.d(), ModMatrix::identity(gf2(), x_.dim()), max_degree, budget)
{
}

std::string DGradedAlgebra::basis_name(std::size_t k, std::size_t i) const
{
    return engine_.monomial_name(k, i, x_.names());
}

std::vector<std::string> DGradedAlgebra::basis_names(std::size_t k) const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim(k); ++i)
        out.push_back(basis_name(k, i));
    return out;
}

std::string DGradedAlgebra::format(const Element& a) const
{
    std::string out;
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t i = 0; i < a[k].size(); ++i)
            if (a[k][i] != 0) {
                if (!out.empty())
                    out += " + ";
                out += basis_name(k, i);
            }
    return out.empty() ? "0" : out;
}

std::vector<ModMatrix> invariants_d(const DGradedAlgebra& a)
{
    std::vector<ModMatrix> out;
    for (std::size_t k = 0; k <= a.max_degree(); ++k)
        out.push_back(lin::kernel_basis(a.engine().derivation(k)));
    return out;
}

InjectivityResult injectivity_check(const DModule& u, const DModule& w, const ModMatrix& inclusion,
                                    std::size_t max_degree, const Budget& budget)
{
    if (!is_intertwiner(u, w, inclusion))
        throw PreconditionError("inclusion does not commute with d");
    if (lin::rank(inclusion) != u.dim())
        throw PreconditionError("inclusion is not injective");
    const auto f = gf2();
    DGradedAlgebra su(u, max_degree, budget), sw(w, max_degree, budget);
    InjectivityResult res;
    // S^m(i) = mu^W_m (i (x) S^{m-1}(i)) sigma^U_m
    ModMatrix map = ModMatrix::identity(f, 1);
    for (std::size_t m = 0; m <= max_degree; ++m) {
        if (m == 1)
            map = inclusion;
        else if (m > 1)
            map = sw.engine().mu(m) * lin::kronecker(inclusion, map) * su.engine().sigma(m);
        res.source_dims.push_back(su.dim(m));
        res.image_dims.push_back(lin::rank(map));
        if (res.injective && res.image_dims.back() < res.source_dims.back()) {
            res.injective = false;
            res.first_failure = m;
            auto k = lin::kernel_basis(map);
            auto e = su.engine().zero();
            for (std::size_t i = 0; i < k.rows(); ++i)
                e[m][i] = k(i, 0);
            res.witness = su.format(e);
        }
    }
    return res;
}

bool FourthPowerReport::passed() const noexcept
{
    return std::all_of(identities.begin(), identities.end(), [](const auto& r) { return r.passed(); });
}

bool d_commutative(DGradedAlgebra& a)
{
    auto& e = a.engine();
    for (std::size_t i = 0; i <= a.max_degree(); ++i)
        for (std::size_t j = 0; i + j <= a.max_degree(); ++j)
            for (std::size_t x = 0; x < a.dim(i); ++x)
                for (std::size_t y = 0; y < a.dim(j); ++y) {
                    auto u = e.basis_element(i, x), v = e.basis_element(j, y);
                    auto lhs = a.add(a.multiply(u, v), a.multiply(v, u));
                    if (lhs != a.multiply(a.d(u), a.d(v)))
                        return false;
                }
    return true;
}

FourthPowerReport fourth_power_checks(const DModule& x, std::size_t max_degree, std::size_t trials,
                                      std::uint64_t seed, const Budget& budget)
{
    if (max_degree < 4)
        throw PreconditionError("fourth-power checks need truncation degree at least 4");
    DGradedAlgebra alg(x, max_degree, budget);
    FourthPowerReport rep;
    rep.max_sample_degree = max_degree / 4;
    const std::size_t hi = rep.max_sample_degree;

    const std::vector<std::string> names = {
        "d(a^4) = 0",
        "a^4 central",
        "(ab)^4 = a^4 b^4",
        "(a_1 + ... + a_n)^4 = sum a_i^4",
        "(ab)^2 = a^2 b^2 + ab d(a) d(b)",
        "d(a)^2 = 0",
        "ab + ba = d(a) d(b)",
        "A^4 closed under products and commutative",
    };
    for (const auto& n : names)
        rep.identities.push_back({n, 0, 0, {}});

    auto record = [&](std::size_t idx, bool ok, const std::string& detail) {
        auto& r = rep.identities[idx];
        ++r.trials;
        if (!ok) {
            ++r.failures;
            if (r.counterexample.empty())
                r.counterexample = detail;
        }
    };

    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + t);
        // Even trials sample homogeneous elements, odd trials mixed degrees.
        auto sample = [&]() {
            if (t % 2 == 0) {
                const std::size_t k = rng() % (hi + 1);
                return alg.random_element(k, k, rng);
            }
            return alg.random_element(0, hi, rng);
        };
        auto a = sample();
        auto b = sample();
        const auto desc = "a = " + alg.format(a) + ", b = " + alg.format(b);
        auto a4 = alg.power(a, 4);
        auto b4 = alg.power(b, 4);
        auto ab = alg.multiply(a, b);
        auto da = alg.d(a), db = alg.d(b);

        record(0, alg.engine().is_zero(alg.d(a4)), desc);
        record(1, alg.multiply(a4, b) == alg.multiply(b, a4), desc);
        record(2, alg.power(ab, 4) == alg.multiply(a4, b4), desc);

        const std::size_t n = 2 + rng() % 3;
        auto sum = a, sum4 = a4;
        std::string many = desc;
        sum = alg.add(sum, b);
        sum4 = alg.add(sum4, b4);
        for (std::size_t i = 2; i < n; ++i) {
            auto c = sample();
            many += ", " + alg.format(c);
            sum = alg.add(sum, c);
            sum4 = alg.add(sum4, alg.power(c, 4));
        }
        record(3, alg.power(sum, 4) == sum4, many);

        auto rhs = alg.add(alg.multiply(alg.power(a, 2), alg.power(b, 2)), alg.multiply(ab, alg.multiply(da, db)));
        record(4, alg.power(ab, 2) == rhs, desc);
        record(5, alg.engine().is_zero(alg.power(da, 2)), desc);
        record(6, alg.add(ab, alg.multiply(b, a)) == alg.multiply(da, db), desc);
        auto p = alg.multiply(a4, b4);
        record(7, p == alg.multiply(b4, a4) && p == alg.power(ab, 4), desc);
    }
    return rep;
}

} // namespace vercat::svec2
