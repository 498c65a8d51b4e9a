#pragma once

// The Verlinde category Ver_p: Rep(Z/pZ) modulo negligible morphisms. Its
// simples are L_1 = 1, ..., L_{p-1}, the images of the Jordan blocks
// J_1, ..., J_{p-1}; the block J_p becomes zero.
//
// The categorical trace in Rep(Z/pZ) is the matrix trace (the pivotal
// structure of a finite group with the swap braiding is trivial), so a map
// f: A -> B is negligible iff trace(f u) = 0 for every u: B -> A.

#include "vercat/budget.hpp"
#include "vercat/repzp.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vercat::ver {

using lin::ModMatrix;
using repzp::ZpModule;

/// A semisimple object of Ver_p, as multiplicities of L_1, ..., L_{p-1}.
class VerObject {
public:
    VerObject(std::uint64_t p, std::vector<std::uint64_t> mult);

    static VerObject zero(std::uint64_t p);
    static VerObject unit(std::uint64_t p);
    /// L_i, 1 <= i <= p - 1.
    static VerObject simple(std::uint64_t p, std::size_t i);

    std::uint64_t p() const noexcept { return p_; }
    const std::vector<std::uint64_t>& mult() const noexcept { return mult_; }
    /// Multiplicity of L_i (1-based).
    std::uint64_t multiplicity(std::size_t i) const { return mult_.at(i - 1); }

    bool is_zero() const noexcept;
    bool is_unit() const noexcept;
    /// sum_i mult_i * i, the dimension of the J_p-free representative.
    std::uint64_t total_dimension() const noexcept;
    /// Block sizes of the representative R(X), smallest first.
    std::vector<std::size_t> block_sizes() const;

    VerObject& operator+=(const VerObject& o);
    friend VerObject operator+(VerObject a, const VerObject& b) { return a += b; }
    VerObject scaled(std::uint64_t k) const;

    bool operator==(const VerObject&) const = default;

    /// "0", "1" for the unit, otherwise terms like "L1 + 2*L3".
    std::string to_string() const;

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> mult_;
};

/// The J_p-free representative: one standard block J_i per copy of L_i,
/// in ascending block size.
ZpModule representative(const VerObject& x);

/// Closed-form fusion rule L_r (x) L_s = sum_{i=1}^{min(r,s,p-r,p-s)} L_{|r-s|+2i-1}.
VerObject fusion_simple(std::uint64_t p, std::size_t r, std::size_t s);
/// Bilinear extension of fusion_simple.
VerObject fusion(const VerObject& a, const VerObject& b);
/// Same product through Rep(Z/pZ): decompose R(a) (x) R(b) and drop J_p blocks.
VerObject fusion_by_jordan(const VerObject& a, const VerObject& b);

/// Sends J_i to L_i for i < p and J_p to 0.
VerObject quotient(const ZpModule& m);
VerObject quotient(const lin::JordanType& type, std::uint64_t p);

/// Number of blocks of size p in the Jordan type of R(a) (x) R(b) (the part
/// discarded by the quotient).
std::size_t negligible_blocks(const VerObject& a, const VerObject& b);

/// Basis of N(A, B): the radical of the trace pairing
/// Hom(A, B) x Hom(B, A) -> GF(p), (f, u) -> trace(f u).
std::vector<ModMatrix> negligible_radical(const ZpModule& a, const ZpModule& b);

/// Hom_{Ver}(A, B) = Hom(A, B) / N(A, B) with chosen lifts.
struct VerHom {
    ZpModule source;
    ZpModule target;
    std::vector<ModMatrix> radical;
    std::vector<ModMatrix> classes; ///< lifts of a basis of the quotient
    std::vector<ModMatrix> hom_basis;
    ModMatrix projection; ///< hom-basis coordinates -> class coordinates

    std::size_t dim() const noexcept { return classes.size(); }
    /// Coordinates of an intertwiner modulo the radical, in the class basis.
    std::vector<std::uint64_t> class_of(const ModMatrix& f) const;
};

VerHom ver_hom(const ZpModule& a, const ZpModule& b);

/// True iff trace(f u) = 0 for all u in Hom(B, A).
bool is_negligible(const ZpModule& a, const ZpModule& b, const ModMatrix& f);

/// S^m(X) computed inside Ver_p (see VerSymmetricAlgebra).
VerObject ver_sym_power(const VerObject& x, std::size_t m, const Budget& budget = {});

/// S^m(X) by the trace pairing on T = R(X)^{(x)m}: the multiplicity of L_j is
/// the dimension of the kernel of Hom_Ver(T, J_j) -> Hom_Ver(T^{m-1}, J_j),
/// phi -> phi o (1 - tau_i). Exponential in m; used as a cross-check.
VerObject ver_sym_power_by_trace_pairing(const VerObject& x, std::size_t m, const Budget& budget = {});

struct MultSeries {
    std::uint64_t p = 0;
    std::vector<VerObject> degrees;
    /// Set when the series is certified to vanish beyond the computed degrees.
    bool finite = false;

    std::size_t max_degree() const noexcept { return degrees.empty() ? 0 : degrees.size() - 1; }
    /// Sum of all degrees.
    VerObject total() const;
};

/// Degrees 0..max_degree of S(X). If X has no trivial summand, the first
/// zero degree certifies that all higher degrees vanish (S^{a+1} is a
/// quotient of X (x) S^a); the remaining degrees are filled with 0 and the
/// series is flagged finite.
MultSeries sym_alg_series(const VerObject& x, std::size_t max_degree, const Budget& budget = {});

/// Degreewise Cauchy product in the fusion ring, truncated to the shorter series.
MultSeries series_product(const MultSeries& s, const MultSeries& t);

/// The series of k[x_1..x_n]: binom(n+m-1, m) copies of 1 in degree m.
MultSeries polynomial_series(std::uint64_t p, std::uint64_t n, std::size_t max_degree);

struct FactorCheck {
    bool passes = false;
    std::vector<VerObject> quotient_series; ///< deconvolved degrees (up to a failure)
    std::optional<VerObject> y;             ///< sum of the quotient series
    std::string reason;
};

/// Deconvolves s by the series of k[x_1..x_n] degree by degree and checks
/// that the result is nonnegative and vanishes in the top degree.
FactorCheck poly_factor_check(const MultSeries& s, std::uint64_t n);

} // namespace vercat::ver
