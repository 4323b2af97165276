#ifndef SIGMA_DIVISOR_HPP
#define SIGMA_DIVISOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sigma/context.hpp"
#include "sigma/enclosure.hpp"

namespace sigma {

/// A positive integer with its complete prime factorization, primes
/// strictly increasing, exponents >= 1.
struct FactoredInteger {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;
};

/// Trial division by sieved primes.
FactoredInteger factor(Context& ctx, std::uint64_t n);

/// sigma_{-r}(p^alpha) = 1 + p^{-r} + ... + p^{-r alpha}, Horner-style.
/// Requires r.lo > 0 (finite sum, so r = 1 is legal here).
Enclosure sigma_prime_power(std::uint64_t p, int alpha, const Enclosure& r);

/// Same sum given a precomputed enclosure of x = p^{-r}; lets bulk callers
/// cache the power.
Enclosure sigma_prime_power_from_x(const Enclosure& x, int alpha);

/// sigma_{-r}(p^inf) = 1/(1 - p^{-r}).
Enclosure sigma_prime_inf(std::uint64_t p, const Enclosure& r);

/// sigma_{-r}(n) by multiplicativity over the factorization.
Enclosure sigma_n(const FactoredInteger& n, const Enclosure& r);

} // namespace sigma

#endif
