#ifndef SIGMA_CONTEXT_HPP
#define SIGMA_CONTEXT_HPP

#include <string>
#include <unordered_map>

#include "sigma/enclosure.hpp"
#include "sigma/primes.hpp"

namespace sigma {

/// Shared state for certified computations: the prime table (grown on
/// demand) and a memo of zeta enclosures keyed by exact input. One Context
/// per worker thread; results are deterministic, so workers agree bit for
/// bit.
struct Context {
    PrimeTable table = PrimeTable::sieve(1 << 18);
    std::unordered_map<std::string, Enclosure> zeta_cache;

    void ensure_bound(std::uint64_t b) {
        if (b > table.bound()) table = table.grown(b);
    }

    void ensure_index(std::size_t m) {
        while (table.primes().size() < m) table = table.grown(table.bound() * 2);
    }
};

} // namespace sigma

#endif
