#include "vercat/exactlin/field.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <tuple>
#include <utility>

namespace vercat::lin {

bool is_prime(std::uint64_t n) noexcept
{
    // Fixed seed: the answer for a given n never depends on the run.
    std::mt19937_64 gen(0x5eed);
    return boost::multiprecision::miller_rabin_test(boost::multiprecision::cpp_int(n), 32, gen);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), small_(p <= 0xFFFFFFFFull)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const
{
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero");
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = a % p_;
    while (new_r != 0) {
        const __int128 q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0)
        t += p_;
    return static_cast<Element>(t);
}

} // namespace vercat::lin
