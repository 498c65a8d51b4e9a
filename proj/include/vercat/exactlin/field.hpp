#pragma once

// Exact scalar fields: GF(p) for a prime p < 2^64, and the rationals.
//
// A field object is a small value carrying its characteristic. Elements are
// plain values (least nonnegative residues, or arbitrary-precision
// fractions); all arithmetic goes through the field object.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace vercat::lin {

class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Returns true iff n is prime. Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t characteristic() const noexcept { return p_; }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }

    Element from_int(std::int64_t v) const noexcept
    {
        const auto m = static_cast<__int128>(v) % static_cast<__int128>(p_);
        return static_cast<Element>(m < 0 ? m + p_ : m);
    }

    Element add(Element a, Element b) const noexcept
    {
        return a >= p_ - b ? a - (p_ - b) : a + b;
    }
    Element sub(Element a, Element b) const noexcept
    {
        return a >= b ? a - b : a + (p_ - b);
    }
    Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const noexcept
    {
        if (small_)
            return a * b % p_;
        return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
    }
    /// Inverse by extended Euclid. Throws std::domain_error on zero.
    Element inv(Element a) const;

    bool is_zero(Element a) const noexcept { return a == 0; }
    bool is_one(Element a) const noexcept { return a == 1; }

    std::string to_string(Element a) const { return std::to_string(a); }

    template <class Rng>
    Element random(Rng& rng) const
    {
        return std::uniform_int_distribution<Element>(0, p_ - 1)(rng);
    }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

private:
    std::uint64_t p_;
    bool small_;
};

class RationalField {
public:
    using Element = boost::multiprecision::cpp_rational;

    std::uint64_t characteristic() const noexcept { return 0; }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(std::int64_t v) const { return Element(v); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const
    {
        if (a == 0)
            throw std::domain_error("inverse of zero");
        return Element(1) / a;
    }

    bool is_zero(const Element& a) const { return a == 0; }
    bool is_one(const Element& a) const { return a == 1; }

    std::string to_string(const Element& a) const { return a.str(); }

    /// Small integers in [-5, 5]; enough to exercise cancellation.
    template <class Rng>
    Element random(Rng& rng) const
    {
        return Element(std::uniform_int_distribution<int>(-5, 5)(rng));
    }

    bool operator==(const RationalField&) const noexcept { return true; }
};

} // namespace vercat::lin
