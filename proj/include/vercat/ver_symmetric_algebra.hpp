#pragma once

// Symmetric powers of an object X of Ver_p, computed degree by degree.
//
// Each S^k(X) is carried as a J_p-free module R_k in standard block form
// together with lifts of the structure maps:
//   mu_k    : R (x) R_{k-1} -> R_k   (multiplication by degree-one elements)
//   sigma_k : R_k -> R (x) R_{k-1}   with mu_k sigma_k = 1 exactly,
// where R = R(X). S^k is the cokernel in Ver_p of
//   (1 (x) mu_{k-1}) ((1 - tau) (x) 1) : R (x) R (x) R_{k-2} -> R (x) R_{k-1}.
// Cokernels are read through the multiplicity functors
//   M_j(A) = (ker N cap im N^{j-1}) / (ker N cap im N^j),   j < p,
// which kill negligible maps and satisfy dim M_j(A) = [A : J_j]. The tensor
// products are decomposed one pair of Jordan blocks at a time, so no
// intermediate object is ever larger than R (x) R (x) R_{k-2}.

#include "vercat/verlinde.hpp"

#include <deque>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace vercat::ver {

class VerSymmetricAlgebra {
public:
    explicit VerSymmetricAlgebra(VerObject x, Budget budget = {});

    const VerObject& generator() const noexcept { return x_; }
    std::uint64_t p() const noexcept { return x_.p(); }
    const lin::PrimeField& field() const noexcept { return field_; }

    /// Computes all degrees up to k.
    void extend_to(std::size_t k);
    std::size_t computed_degree() const noexcept { return levels_.size() - 1; }

    /// S^k(X); extends as needed.
    VerObject degree(std::size_t k);
    /// Block sizes of R_k, ascending.
    const std::vector<std::size_t>& blocks(std::size_t k);
    std::size_t dim(std::size_t k);
    /// Offsets in R_k of the blocks of size j, in order.
    std::vector<std::size_t> block_offsets(std::size_t k, std::size_t j);
    ZpModule module(std::size_t k);

    const ModMatrix& mu(std::size_t k);
    const ModMatrix& sigma(std::size_t k);

    /// Lift of the multiplication S^a (x) S^b -> S^{a+b}, as a map
    /// R_a (x) R_b -> R_{a+b}. Cached.
    const ModMatrix& product(std::size_t a, std::size_t b);

private:
    struct Level {
        std::vector<std::size_t> blocks;
        std::vector<std::size_t> offsets;
        std::size_t dim = 0;
        ModMatrix mu;
        ModMatrix sigma;
    };

    using Piece = lin::JordanDecomposition<lin::PrimeField>;
    const Piece& piece(std::size_t a, std::size_t b);
    void build_next();

    VerObject x_;
    Budget budget_;
    lin::PrimeField field_;
    std::deque<Level> levels_;
    std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<Piece>> pieces_;
    std::map<std::pair<std::size_t, std::size_t>, ModMatrix> products_;
};

} // namespace vercat::ver
