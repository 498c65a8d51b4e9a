#pragma once

// Invariant algebras of symmetric algebras in Ver_p.
//
// The invariants of degree m are Hom_Ver(1, S^m(X)). With S^m(X) carried as
// the standard module R_m (see VerSymmetricAlgebra), this is the span of the
// J_1 blocks of R_m, and more generally the L_i-multiplicity space is the
// span of the socles of the J_i blocks. Products are read off the lifted
// multiplication R_a (x) R_b -> R_{a+b}.

#include "vercat/budget.hpp"
#include "vercat/ver_symmetric_algebra.hpp"
#include "vercat/verlinde.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace vercat::inv {

using lin::ModMatrix;
using ver::VerObject;

class InvariantAlgebra {
public:
    static InvariantAlgebra build(const VerObject& x, std::size_t max_degree, const Budget& budget = {});

    std::uint64_t p() const noexcept { return x_.p(); }
    const VerObject& generator() const noexcept { return x_; }
    std::size_t max_degree() const noexcept { return dims_.size() - 1; }
    std::size_t dim(std::size_t m) const { return dims_.at(m); }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    const lin::PrimeField& field() const noexcept { return field_; }

    /// Structure constants: dim(a+b) x (dim(a) * dim(b)), a + b <= max_degree.
    const ModMatrix& product_table(std::size_t a, std::size_t b) const { return tables_.at({a, b}); }
    /// Product of coordinate vectors of degrees a and b.
    std::vector<std::uint64_t> multiply(std::size_t a, const std::vector<std::uint64_t>& u, std::size_t b,
                                        const std::vector<std::uint64_t>& v) const;
    /// u^e for u of degree a (e * a <= max_degree).
    std::vector<std::uint64_t> power(std::size_t a, const std::vector<std::uint64_t>& u, std::size_t e) const;

    /// The same algebra in randomly changed bases of every positive degree.
    InvariantAlgebra with_basis_change(std::uint64_t seed) const;

    /// The underlying symmetric algebra (shared, not copied).
    ver::VerSymmetricAlgebra& symmetric_algebra() const { return *sym_; }

private:
    InvariantAlgebra(VerObject x, lin::PrimeField f) : x_(std::move(x)), field_(std::move(f)) {}

    VerObject x_;
    lin::PrimeField field_;
    std::vector<std::size_t> dims_;
    std::map<std::pair<std::size_t, std::size_t>, ModMatrix> tables_;
    std::shared_ptr<ver::VerSymmetricAlgebra> sym_;
};

struct GeneratorCount {
    std::size_t degree;
    std::size_t count;
};

/// New generators per degree: dim A_m minus the rank of all products of
/// lower positive degrees. Degree 0 reports the unit.
std::vector<GeneratorCount> generator_degrees(const InvariantAlgebra& a);

struct ModuleGenerator {
    std::size_t degree;
    std::size_t simple; ///< i of L_i
    std::size_t count;
};

struct ModuleFiniteness {
    std::vector<ModuleGenerator> selections;
    /// Degrees >= window_start must contain no selection for stabilized.
    std::size_t window_start = 0;
    bool stabilized = false;
};

/// Greedy choice of homogeneous isotypic elements of S(X) that are not in
/// the A^inv-span of earlier choices. Evidence up to the truncation only.
ModuleFiniteness module_finiteness_check(const VerObject& x, std::size_t max_degree, const Budget& budget = {});

struct CheckOutcome {
    bool passed = true;
    std::size_t trials = 0;
    std::string detail;
};

/// Random trials: multiplying an isotypic element of type L_i by an invariant
/// gives an intertwiner whose components into blocks of other sizes are
/// negligible, and the invariant projection commutes with multiplication by
/// invariants. Trial t uses seed + t.
CheckOutcome isotypic_stability_check(const VerObject& x, std::size_t max_degree, std::size_t trials,
                                      std::uint64_t seed, const Budget& budget = {});

/// Checks that u -> u^p is a ring map on random invariants. For every L_i
/// in X with i >= 2 it also checks that S^p(L_i) = 0, and when i^p is small
/// that the p-fold product on the block J_i of R(X) is negligible.
/// Throws PreconditionError if no invariant of positive degree a has p*a <= D.
CheckOutcome frobenius_check(const InvariantAlgebra& a, std::size_t trials, std::uint64_t seed);

struct Char0Degree {
    std::size_t degree;
    std::size_t invariant_dim;
    std::size_t new_generators;
    std::vector<std::string> basis; ///< monomials spanning the invariants
};

/// A = Q[x] (x) Lambda(y, z) with the odd derivation D(x) = y: invariants are
/// ker D on the even part. Reports each degree 0..max_degree.
std::vector<Char0Degree> char0_counterexample(std::size_t max_degree);

} // namespace vercat::inv
