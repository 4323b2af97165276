#ifndef SIGMA_PRIMES_HPP
#define SIGMA_PRIMES_HPP

#include <cstdint>
#include <vector>

#include "sigma/errors.hpp"

namespace sigma {

/// Sieve-backed ascending prime list with pi(x) and nth-prime queries.
/// Immutable after construction; growth produces a new table.
class PrimeTable {
public:
    static PrimeTable sieve(std::uint64_t bound);

    std::uint64_t bound() const { return bound_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    /// p_m, 1-indexed (p_1 = 2).
    std::uint64_t nth_prime(std::size_t m) const;

    /// pi(x); requires x <= bound.
    std::size_t prime_count(double x) const;

    /// 1-based index of a listed prime; throws InvalidArgument if p is not
    /// in the table.
    std::size_t index_of(std::uint64_t p) const;

    bool is_prime(std::uint64_t n) const;

    /// A table covering at least new_bound (doubling growth); returns *this
    /// unchanged if already large enough.
    PrimeTable grown(std::uint64_t new_bound) const;

private:
    std::uint64_t bound_ = 0;
    std::vector<std::uint64_t> primes_;
};

} // namespace sigma

#endif
