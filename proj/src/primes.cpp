#include "sigma/primes.hpp"

#include <algorithm>
#include <cmath>

namespace sigma {

PrimeTable PrimeTable::sieve(std::uint64_t bound) {
    if (bound < 2) throw InvalidArgument("sieve bound must be at least 2");
    PrimeTable t;
    t.bound_ = bound;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i * i <= bound; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= bound; ++i)
        if (!composite[i]) t.primes_.push_back(i);
    return t;
}

std::uint64_t PrimeTable::nth_prime(std::size_t m) const {
    if (m == 0) throw InvalidArgument("prime index is 1-based");
    if (m > primes_.size()) {
        // p_m < m (log m + log log m) for m >= 6; pad generously below that.
        double dm = static_cast<double>(m);
        double est = (m >= 6) ? dm * (std::log(dm) + std::log(std::log(dm))) : 16.0;
        throw NeedsLargerSieve("prime index beyond sieve", static_cast<std::uint64_t>(est) + 16);
    }
    return primes_[m - 1];
}

std::size_t PrimeTable::prime_count(double x) const {
    if (x > static_cast<double>(bound_))
        throw NeedsLargerSieve("pi(x) query beyond sieve", static_cast<std::uint64_t>(x) + 1);
    if (x < 2.0) return 0;
    auto limit = static_cast<std::uint64_t>(x);
    auto it = std::upper_bound(primes_.begin(), primes_.end(), limit);
    return static_cast<std::size_t>(it - primes_.begin());
}

std::size_t PrimeTable::index_of(std::uint64_t p) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) {
        if (p > bound_) throw NeedsLargerSieve("prime beyond sieve", p);
        throw InvalidArgument(std::to_string(p) + " is not prime");
    }
    return static_cast<std::size_t>(it - primes_.begin()) + 1;
}

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n > bound_) throw NeedsLargerSieve("primality query beyond sieve", n);
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

PrimeTable PrimeTable::grown(std::uint64_t new_bound) const {
    if (new_bound <= bound_) return *this;
    std::uint64_t b = std::max<std::uint64_t>(bound_, 2);
    while (b < new_bound) b *= 2;
    return sieve(b);
}

} // namespace sigma
