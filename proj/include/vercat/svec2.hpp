#pragma once

// The characteristic-2 category sVec_2 = Rep(k[d]/(d^2)), k = GF(2), with
// R-matrix 1 (x) 1 + d (x) d. Its braiding is
//   c(v (x) w) = w (x) v + d(w) (x) d(v),
// and commutative algebras satisfy ab + ba = d(a) d(b). The indecomposables
// are the unit 1 (d = 0) and the two-dimensional W = <x, y>, d(x) = y.

#include "vercat/braided_algebra.hpp"
#include "vercat/budget.hpp"
#include "vercat/exactlin.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vercat::svec2 {

using lin::ModMatrix;
using lin::PrimeField;

PrimeField gf2();

class DModule {
public:
    /// Validates d^2 = 0 over GF(2). Names default to e0, e1, ...
    explicit DModule(ModMatrix d, std::vector<std::string> names = {});

    std::size_t dim() const noexcept { return d_.rows(); }
    const ModMatrix& d() const noexcept { return d_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

private:
    ModMatrix d_;
    std::vector<std::string> names_;
};

/// n copies of the unit, named z, z2, ...
DModule trivial(std::size_t n = 1);
/// W = <x, y> with d(x) = y.
DModule w_module();
/// Direct sum; repeated generator names get numeric suffixes.
DModule direct_sum(const DModule& a, const DModule& b);
/// d = d (x) 1 + 1 (x) d.
DModule tensor(const DModule& a, const DModule& b);

/// Matrix of c_{X,Y}: X (x) Y -> Y (x) X.
ModMatrix braiding(const DModule& x, const DModule& y);

/// True iff f (X -> Y) commutes with d.
bool is_intertwiner(const DModule& x, const DModule& y, const ModMatrix& f);

using Engine = BraidedSymmetricAlgebra<PrimeField>;
using Element = Engine::Graded;

/// Truncated S(X) with its induced derivation.
class DGradedAlgebra {
public:
    DGradedAlgebra(DModule x, std::size_t max_degree, Budget budget = {});

    const DModule& generator() const noexcept { return x_; }
    std::size_t max_degree() const noexcept { return engine_.max_degree(); }
    std::size_t dim(std::size_t k) const { return engine_.dim(k); }
    Engine& engine() noexcept { return engine_; }
    const Engine& engine() const noexcept { return engine_; }

    std::string basis_name(std::size_t k, std::size_t i) const;
    std::vector<std::string> basis_names(std::size_t k) const;

    Element multiply(const Element& a, const Element& b) { return engine_.multiply(a, b); }
    Element add(const Element& a, const Element& b) const { return engine_.add(a, b); }
    Element d(const Element& a) const { return engine_.apply_derivation(a); }
    Element power(const Element& a, std::size_t e) { return engine_.power(a, e); }
    /// Element written in basis monomials, e.g. "x^2 + xy", or "0".
    std::string format(const Element& a) const;

    /// Uniform coefficients on the basis of degrees lo..hi.
    template <class Rng>
    Element random_element(std::size_t lo, std::size_t hi, Rng& rng) const
    {
        auto e = engine_.zero();
        for (std::size_t k = lo; k <= hi && k <= max_degree(); ++k)
            for (auto& x : e[k])
                x = rng() & 1;
        return e;
    }

private:
    DModule x_;
    Engine engine_;
};

/// Per degree, a column basis of ker(d) on S^k.
std::vector<ModMatrix> invariants_d(const DGradedAlgebra& a);

struct InjectivityResult {
    bool injective = true;
    std::optional<std::size_t> first_failure;
    std::vector<std::size_t> source_dims;
    std::vector<std::size_t> image_dims;
    /// A kernel element at the first failing degree, in monomials of S(U).
    std::string witness;
};

/// Compares dim S^m(U) with the rank of S^m(i): S^m(U) -> S^m(W), m <= D.
InjectivityResult injectivity_check(const DModule& u, const DModule& w, const ModMatrix& inclusion,
                                    std::size_t max_degree, const Budget& budget = {});

struct IdentityResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string counterexample;

    bool passed() const noexcept { return failures == 0; }
};

struct FourthPowerReport {
    std::size_t max_sample_degree = 0;
    std::vector<IdentityResult> identities;

    bool passed() const noexcept;
};

/// Random-trial checks of the fourth-power identities in S(X) truncated at D:
/// d(a^4) = 0, a^4 b = b a^4, (ab)^4 = a^4 b^4, (a+b)^4 = a^4 + b^4,
/// (ab)^2 = a^2 b^2 + ab d(a) d(b), d(a)^2 = 0, plus d-commutativity and the
/// closure of A^4 under sums and products. Trial t uses seed + t.
/// Samples have degree <= D / 4; throws PreconditionError if D < 4.
FourthPowerReport fourth_power_checks(const DModule& x, std::size_t max_degree, std::size_t trials,
                                      std::uint64_t seed, const Budget& budget = {});

/// ab + ba = d(a) d(b) on every pair of basis elements within the truncation.
bool d_commutative(DGradedAlgebra& a);

} // namespace vercat::svec2
