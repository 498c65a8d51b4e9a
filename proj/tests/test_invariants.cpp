#include "vercat/invariants.hpp"

#include <doctest.h>

#include <random>

using namespace vercat;
using namespace vercat::inv;
using ver::VerObject;

namespace {

VerObject obj(std::uint64_t p, std::vector<std::size_t> m)
{
    m.resize(p - 1, 0);
    return VerObject(p, m);
}

std::vector<std::size_t> counts(const std::vector<GeneratorCount>& g)
{
    std::vector<std::size_t> out;
    for (const auto& x : g)
        out.push_back(x.count);
    return out;
}

} // namespace

TEST_CASE("invariant dimensions match symmetric powers")
{
    const std::vector<VerObject> cases{obj(5, {1}), obj(5, {0, 1}), obj(5, {1, 1}), obj(3, {0, 2}),
                                       obj(7, {0, 0, 1}), obj(7, {1, 0, 0, 0, 1}), obj(2, {2})};
    for (const auto& x : cases) {
        auto a = InvariantAlgebra::build(x, 6);
        CHECK(a.dim(0) == 1);
        for (std::size_t m = 0; m <= 6; ++m) {
            INFO(x.to_string() << " degree " << m);
            double size = 1;
            for (std::size_t k = 0; k < m; ++k)
                size *= double(x.total_dimension());
            // the literal oracle works on the full tensor power
            const auto expect = size <= 250 ? ver::ver_sym_power_by_trace_pairing(x, m) : ver::ver_sym_power(x, m);
            CHECK(a.dim(m) == expect.multiplicity(1));
        }
    }
    auto l2 = InvariantAlgebra::build(obj(5, {0, 1}), 6);
    CHECK(l2.dims() == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0});
    auto two = InvariantAlgebra::build(obj(3, {0, 2}), 4);
    CHECK(two.dim(2) == 1);
}

TEST_CASE("X = 1 gives a truncated polynomial ring")
{
    auto a = InvariantAlgebra::build(obj(5, {1}), 8);
    for (std::size_t m = 0; m <= 8; ++m)
        CHECK(a.dim(m) == 1);
    for (std::size_t i = 0; i <= 8; ++i)
        for (std::size_t j = 0; i + j <= 8; ++j)
            CHECK_FALSE(a.product_table(i, j).is_zero());
    CHECK(counts(generator_degrees(a)) == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("invariant product is commutative and associative")
{
    for (const auto& x : {obj(5, {1, 1}), obj(3, {1, 2}), obj(5, {2, 0, 1})}) {
        auto a = InvariantAlgebra::build(x, 6);
        const auto& f = a.field();
        auto unit = [&](std::size_t m, std::size_t k) {
            std::vector<std::uint64_t> v(a.dim(m), 0);
            v[k] = f.one();
            return v;
        };
        for (std::size_t i = 0; i <= 6; ++i)
            for (std::size_t j = 0; i + j <= 6; ++j)
                for (std::size_t u = 0; u < a.dim(i); ++u)
                    for (std::size_t v = 0; v < a.dim(j); ++v) {
                        CHECK(a.multiply(i, unit(i, u), j, unit(j, v)) == a.multiply(j, unit(j, v), i, unit(i, u)));
                        for (std::size_t k = 0; i + j + k <= 6; ++k)
                            for (std::size_t w = 0; w < a.dim(k); ++w) {
                                auto l = a.multiply(i + j, a.multiply(i, unit(i, u), j, unit(j, v)), k, unit(k, w));
                                auto r = a.multiply(i, unit(i, u), j + k, a.multiply(j, unit(j, v), k, unit(k, w)));
                                CHECK(l == r);
                            }
                    }
    }
}

TEST_CASE("generator degrees")
{
    auto l2 = InvariantAlgebra::build(obj(5, {0, 1}), 6);
    CHECK(counts(generator_degrees(l2)) == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0});

    auto a = InvariantAlgebra::build(obj(5, {1, 1}), 10);
    auto g = counts(generator_degrees(a));
    std::size_t last = 0;
    for (std::size_t m = 1; m < g.size(); ++m)
        if (g[m] > 0)
            last = m;
    CHECK(last < 10);
    CHECK(g[1] == 1);

    for (const auto& x : {obj(5, {1, 1}), obj(3, {1, 2}), obj(7, {0, 1, 1})}) {
        auto b = InvariantAlgebra::build(x, 8);
        for (std::uint64_t seed : {1, 2, 3})
            CHECK(counts(generator_degrees(b.with_basis_change(seed))) == counts(generator_degrees(b)));
    }
}

TEST_CASE("module finiteness")
{
    auto one = module_finiteness_check(obj(5, {1}), 6);
    REQUIRE(one.selections.size() == 1);
    CHECK(one.selections[0].degree == 0);
    CHECK(one.selections[0].simple == 1);
    CHECK(one.stabilized);

    auto l2 = module_finiteness_check(obj(5, {0, 1}), 6);
    CHECK(l2.stabilized);
    std::size_t total = 0;
    for (const auto& s : l2.selections) {
        CHECK(s.degree <= 3);
        CHECK(s.simple == s.degree + 1);
        total += s.count;
    }
    CHECK(total == 4);

    auto mixed = module_finiteness_check(obj(5, {1, 1}), 10);
    CHECK(mixed.stabilized);
    CHECK(mixed.window_start == 7);
    CHECK_FALSE(mixed.selections.empty());
}

TEST_CASE("isotypic stability")
{
    auto r = isotypic_stability_check(obj(5, {1, 1}), 6, 100, 42);
    INFO(r.detail);
    CHECK(r.passed);
    CHECK(r.trials > 50);
    for (const auto& x : {obj(3, {1, 2}), obj(7, {1, 0, 1}), obj(5, {0, 2})}) {
        auto s = isotypic_stability_check(x, 5, 40, 1);
        INFO(x.to_string() << " " << s.detail);
        CHECK(s.passed);
    }
}

TEST_CASE("frobenius")
{
    auto a = InvariantAlgebra::build(obj(3, {1, 1}), 9);
    auto r = frobenius_check(a, 50, 3);
    INFO(r.detail);
    CHECK(r.passed);
    CHECK(r.trials == 50);
    CHECK(ver::ver_sym_power(VerObject::simple(3, 2), 3).is_zero());

    CHECK(frobenius_check(InvariantAlgebra::build(obj(2, {1}), 4), 20, 1).passed);
    CHECK(frobenius_check(InvariantAlgebra::build(obj(5, {1, 1}), 10), 20, 5).passed);
    CHECK(frobenius_check(InvariantAlgebra::build(obj(3, {0, 2}), 6), 20, 5).passed);
    CHECK(frobenius_check(a.with_basis_change(4), 20, 9).passed);
    CHECK_THROWS_AS(frobenius_check(InvariantAlgebra::build(obj(5, {0, 1}), 6), 5, 0), PreconditionError);
}

TEST_CASE("characteristic zero counterexample")
{
    auto rows = char0_counterexample(8);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].invariant_dim == 1);
    CHECK(rows[0].basis == std::vector<std::string>{"1"});
    CHECK(rows[1].invariant_dim == 0);
    CHECK(rows[3].invariant_dim == 1);
    CHECK(rows[3].new_generators == 1);
    CHECK(rows[3].basis == std::vector<std::string>{"xyz"});
    for (std::size_t m = 3; m <= 8; ++m) {
        CHECK(rows[m].invariant_dim == 1);
        CHECK(rows[m].new_generators == 1);
    }
    CHECK(rows[5].basis == std::vector<std::string>{"x^3yz"});
    // yz is killed by D as well
    CHECK(rows[2].basis == std::vector<std::string>{"yz"});
    CHECK(rows[2].new_generators == 1);
    CHECK_THROWS_AS(char0_counterexample(2), PreconditionError);
}
