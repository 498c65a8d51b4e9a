#pragma once

// Finite-dimensional representations of Z/pZ over GF(p). A module is the
// action matrix g of the generator; g - 1 is nilpotent, and the Jordan type
// of g - 1 classifies the module up to isomorphism. The indecomposables are
// the Jordan blocks J_1, ..., J_p.
//
// Basis convention for the block J_n: g = I + N with N e_q = e_{q-1}, so e_0
// spans the fixed line and e_{n-1} generates the block.

#include "vercat/budget.hpp"
#include "vercat/exactlin.hpp"

#include <cstdint>
#include <vector>

namespace vercat::repzp {

using lin::JordanType;
using lin::ModMatrix;
using lin::PrimeField;

class ZpModule {
public:
    /// Validates that g is square and g^p = 1.
    ZpModule(std::uint64_t p, ModMatrix g);

    /// Skips validation; for actions that are unipotent by construction
    /// (tensor products, sums, duals of valid modules).
    static ZpModule unchecked(std::uint64_t p, ModMatrix g);

    std::uint64_t p() const noexcept { return p_; }
    std::size_t dim() const noexcept { return g_.rows(); }
    const PrimeField& field() const noexcept { return g_.field(); }
    const ModMatrix& g() const noexcept { return g_; }
    /// g - 1
    ModMatrix nilpotent() const;

private:
    struct NoCheck {};
    ZpModule(std::uint64_t p, ModMatrix g, NoCheck) : p_(p), g_(std::move(g)) {}

    std::uint64_t p_;
    ModMatrix g_;
};

/// The standard nilpotent Jordan block of size n over GF(p).
ModMatrix jordan_block_nilpotent(const PrimeField& f, std::size_t n);

/// Direct sum of standard blocks, in the given order.
ZpModule jordan_module(std::uint64_t p, const std::vector<std::size_t>& parts);
JordanType jordan_type(const ZpModule& m);

ZpModule tensor(const ZpModule& a, const ZpModule& b);
ZpModule direct_sum(const ZpModule& a, const ZpModule& b);
/// Action (g^{-1})^T on the dual space.
ZpModule dual(const ZpModule& a);
ZpModule tensor_power(const ZpModule& a, std::size_t m, const Budget& budget = {});

/// Swap X (x) Y -> Y (x) X in the lexicographic tensor basis.
ModMatrix swap_matrix(const PrimeField& f, std::size_t dim_x, std::size_t dim_y);
/// The swap of tensor positions i, i+1 (0-based) on X^{(x)m}, dim X = n.
ModMatrix adjacent_swap(const PrimeField& f, std::size_t n, std::size_t m, std::size_t i);

struct HomSpace {
    ZpModule source;
    ZpModule target;
    std::vector<ModMatrix> basis; ///< each maps source -> target

    std::size_t dim() const noexcept { return basis.size(); }
};

/// All intertwiners T with T g_source = g_target T. Built from Jordan bases
/// of both sides, so the cost is governed by the module dimensions rather
/// than by the size of the linear system.
HomSpace hom_space(const ZpModule& a, const ZpModule& b);

/// Solves T g_A = g_B T directly as a linear system in dim A * dim B
/// unknowns. Slow; kept as a reference implementation.
HomSpace hom_space_by_linear_system(const ZpModule& a, const ZpModule& b, const Budget& budget = {});

bool is_intertwiner(const ZpModule& a, const ZpModule& b, const ModMatrix& t);

struct SymPower {
    ZpModule module;
    ModMatrix projection; ///< dim S^m x dim X^m
    /// Basis of S^m as weakly increasing index tuples (monomials).
    std::vector<std::vector<std::uint32_t>> monomials;
};

/// S^m(X) = X^{(x)m} / sum_i im(1 - tau_i). The swap relations identify
/// basis tensors that differ by a permutation, so the quotient has the sorted
/// index tuples as a basis; the induced action is computed by expanding
/// products of columns of g. Budget: the projection must fit in max_entries.
SymPower sym_power(const ZpModule& x, std::size_t m, const Budget& budget = {});

/// ker(g - 1).
ModMatrix fixed_points(const ZpModule& m);

} // namespace vercat::repzp
