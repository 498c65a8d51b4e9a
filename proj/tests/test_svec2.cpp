#include "vercat/svec2.hpp"

#include <doctest.h>

#include <random>

using namespace vercat;
using namespace vercat::svec2;
using lin::ModMatrix;

namespace {

ModMatrix vec(std::initializer_list<long> v)
{
    return ModMatrix::column_from_ints(gf2(), v);
}

// All modules of dim <= 3 up to isomorphism: sums of copies of 1 and W.
std::vector<DModule> grid()
{
    std::vector<DModule> out;
    for (std::size_t w = 0; w <= 1; ++w)
        for (std::size_t t = 0; t + 2 * w <= 3; ++t) {
            if (w == 0 && t == 0)
                continue;
            DModule m = trivial(t);
            if (w == 1)
                m = direct_sum(w_module(), m);
            out.push_back(m);
        }
    return out;
}

DModule random_module(std::size_t n, std::mt19937_64& rng)
{
    // a random conjugate of a sum of W's and 1's
    const std::size_t ws = rng() % (n / 2 + 1);
    DModule base = trivial(n - 2 * ws);
    for (std::size_t i = 0; i < ws; ++i)
        base = direct_sum(w_module(), base);
    for (;;) {
        auto g = ModMatrix::random(gf2(), n, n, rng);
        if (lin::rank(g) == n)
            return DModule(g * base.d() * lin::inverse(g));
    }
}

// dim X^{(x)m} / sum_i im(1 - c_i), relations at every adjacent position.
std::size_t dense_sym_dim(const DModule& x, std::size_t m)
{
    const auto f = gf2();
    const std::size_t n = x.dim();
    if (m == 0)
        return 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i)
        total *= n;
    if (m == 1)
        return n;
    const auto c = braiding(x, x);
    ModMatrix rel(f, total, 0);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        std::size_t left = 1, right = 1;
        for (std::size_t k = 0; k < i; ++k)
            left *= n;
        for (std::size_t k = i + 2; k < m; ++k)
            right *= n;
        auto ci = lin::kronecker(lin::kronecker(ModMatrix::identity(f, left), c), ModMatrix::identity(f, right));
        rel = rel.hconcat(ModMatrix::identity(f, total) - ci);
    }
    return total - lin::rank(rel);
}

} // namespace

TEST_CASE("braiding examples")
{
    const auto f = gf2();
    const auto w = w_module();
    const auto c = braiding(w, w);
    // basis of W (x) W: xx, xy, yx, yy
    CHECK(c * vec({1, 0, 0, 0}) == vec({1, 0, 0, 1}));
    CHECK(c * vec({0, 1, 0, 0}) == vec({0, 0, 1, 0}));
    const auto t = trivial(2);
    CHECK(braiding(t, t) == lin::commutation_matrix(f, 2, 2));
}

TEST_CASE("braiding is symmetric and natural")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = random_module(1 + rng() % 4, rng);
        auto y = random_module(1 + rng() % 4, rng);
        CHECK((braiding(y, x) * braiding(x, y)).is_identity());
    }
    int found = 0;
    for (int trial = 0; found < 100 && trial < 5000; ++trial) {
        auto x = random_module(1 + rng() % 3, rng), y = random_module(1 + rng() % 3, rng);
        auto x2 = random_module(1 + rng() % 3, rng), y2 = random_module(1 + rng() % 3, rng);
        auto fm = ModMatrix::random(gf2(), x2.dim(), x.dim(), rng);
        auto gm = ModMatrix::random(gf2(), y2.dim(), y.dim(), rng);
        if (!is_intertwiner(x, x2, fm) || !is_intertwiner(y, y2, gm))
            continue;
        ++found;
        CHECK(lin::kronecker(gm, fm) * braiding(x, y) == braiding(x2, y2) * lin::kronecker(fm, gm));
    }
    CHECK(found == 100);
}

TEST_CASE("tensor products")
{
    const auto w = w_module();
    const auto one = trivial(1);
    CHECK(tensor(w, one).d() == w.d());
    CHECK(tensor(one, w).d() == w.d());
    CHECK(lin::rank(tensor(w, w).d()) == 2);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        auto t = tensor(random_module(1 + rng() % 4, rng), random_module(1 + rng() % 4, rng));
        CHECK((t.d() * t.d()).is_zero());
    }
    CHECK_THROWS_AS(DModule(ModMatrix::from_ints(gf2(), {{1, 1}, {0, 1}})), PreconditionError);
}

TEST_CASE("symmetric algebra of W")
{
    DGradedAlgebra s(w_module(), 6);
    CHECK(s.dim(0) == 1);
    CHECK(s.dim(1) == 2);
    CHECK(s.dim(2) == 2);
    CHECK(s.basis_names(2) == std::vector<std::string>{"x^2", "xy"});
    auto y = s.engine().basis_element(1, 1);
    CHECK(s.engine().is_zero(s.multiply(y, y)));
    auto x = s.engine().basis_element(1, 0);
    CHECK(s.format(s.multiply(x, y)) == "xy");
    CHECK(s.format(s.multiply(y, x)) == "xy");
    auto x4 = s.power(x, 4);
    CHECK(s.format(x4) == "x^4");
    CHECK(s.engine().is_zero(s.d(x4)));
    CHECK(s.format(s.d(s.multiply(x, x))) == "0");
}

TEST_CASE("trivial d gives classical symmetric algebras")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        DGradedAlgebra s(trivial(n), 5);
        std::size_t binom = 1; // C(n + m - 1, m)
        for (std::size_t m = 0; m <= 5; ++m) {
            if (m > 0)
                binom = binom * (n + m - 1) / m;
            CHECK(s.dim(m) == binom);
        }
    }
}

TEST_CASE("degree dimensions agree with the dense quotient")
{
    for (const auto& x : grid())
        for (std::size_t m = 0; m <= 4; ++m) {
            DGradedAlgebra s(x, 4);
            CHECK(s.dim(m) == dense_sym_dim(x, m));
        }
    auto ww = direct_sum(w_module(), w_module());
    DGradedAlgebra s(ww, 4);
    for (std::size_t m = 0; m <= 4; ++m)
        CHECK(s.dim(m) == dense_sym_dim(ww, m));
}

TEST_CASE("golden dimension tables")
{
    auto dims = [](const DModule& x, std::size_t d) {
        DGradedAlgebra s(x, d);
        std::vector<std::size_t> out;
        for (std::size_t m = 0; m <= d; ++m)
            out.push_back(s.dim(m));
        return out;
    };
    CHECK(dims(w_module(), 8) == std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2, 2, 2});
    CHECK(dims(direct_sum(w_module(), trivial(1)), 6) == std::vector<std::size_t>{1, 3, 5, 7, 9, 11, 13});
    CHECK(dims(direct_sum(w_module(), w_module()), 5) == std::vector<std::size_t>{1, 4, 8, 12, 16, 20});
}

TEST_CASE("injectivity")
{
    const auto w = w_module();
    auto self = injectivity_check(w, w, ModMatrix::identity(gf2(), 2), 6);
    CHECK(self.injective);
    CHECK_FALSE(self.first_failure.has_value());

    DModule u(ModMatrix(gf2(), 1, 1), {"y"});
    auto r = injectivity_check(u, w, vec({0, 1}), 6);
    CHECK_FALSE(r.injective);
    REQUIRE(r.first_failure.has_value());
    CHECK(*r.first_failure == 2);
    CHECK(r.witness == "y^2");
    CHECK(r.source_dims[1] == r.image_dims[1]);

    auto big = direct_sum(w, trivial(1));
    auto r2 = injectivity_check(u, big, vec({0, 1, 0}), 5);
    REQUIRE(r2.first_failure.has_value());
    CHECK(*r2.first_failure == 2);

    CHECK_THROWS_AS(injectivity_check(u, w, vec({1, 0}), 3), PreconditionError);
    CHECK_THROWS_AS(injectivity_check(w, w, ModMatrix(gf2(), 2, 2), 3), PreconditionError);
}

TEST_CASE("fourth-power identities")
{
    auto rep = fourth_power_checks(w_module(), 8, 200, 7);
    CHECK(rep.max_sample_degree == 2);
    for (const auto& id : rep.identities) {
        INFO(id.name << " " << id.counterexample);
        CHECK(id.trials == 200);
        CHECK(id.passed());
    }
    CHECK(fourth_power_checks(direct_sum(w_module(), trivial(1)), 8, 100, 3).passed());
    for (const auto& x : grid())
        CHECK(fourth_power_checks(x, 4, 40, 1).passed());
    CHECK_THROWS_AS(fourth_power_checks(w_module(), 3, 1, 0), PreconditionError);
}

TEST_CASE("d-commutativity and derivation laws")
{
    for (const auto& x : grid()) {
        DGradedAlgebra s(x, 5);
        CHECK(d_commutative(s));
        auto& e = s.engine();
        for (std::size_t k = 0; k <= 5; ++k)
            CHECK((e.derivation(k) * e.derivation(k)).is_zero());
        std::mt19937_64 rng(3);
        for (int t = 0; t < 30; ++t) {
            auto a = s.random_element(0, 2, rng), b = s.random_element(0, 2, rng);
            CHECK(s.d(s.multiply(a, b)) == s.add(s.multiply(s.d(a), b), s.multiply(a, s.d(b))));
        }
    }
}

TEST_CASE("invariants of d")
{
    DGradedAlgebra s(w_module(), 8);
    auto inv = invariants_d(s);
    CHECK(inv[0].cols() == 1);
    CHECK(inv[1].cols() == 1); // y
    CHECK(inv[2].cols() == 2); // x^2 and xy
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        auto a = s.random_element(0, 2, rng);
        CHECK(s.engine().is_zero(s.d(s.power(a, 4))));
    }
    // products of invariants stay invariant
    auto& e = s.engine();
    for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t j = 0; i + j <= 4; ++j)
            for (std::size_t a = 0; a < inv[i].cols(); ++a)
                for (std::size_t b = 0; b < inv[j].cols(); ++b) {
                    auto u = e.zero(), v = e.zero();
                    for (std::size_t r = 0; r < s.dim(i); ++r)
                        u[i][r] = inv[i](r, a);
                    for (std::size_t r = 0; r < s.dim(j); ++r)
                        v[j][r] = inv[j](r, b);
                    CHECK(e.is_zero(s.d(s.multiply(u, v))));
                }
}
