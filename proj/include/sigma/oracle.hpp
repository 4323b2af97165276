#ifndef SIGMA_ORACLE_HPP
#define SIGMA_ORACLE_HPP

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

namespace sigma::oracle {

/// Brute-force sample of sigma_{-r}(n) for n = 1..n_max, sorted by value.
/// Deliberately plain double precision and independent of the certified
/// engine: it shares no enclosure code, so shared bugs are unlikely.
struct ValueSample {
    double r = 0.0;
    std::uint64_t n_max = 0;
    std::vector<std::pair<std::uint64_t, double>> values; // (n, sigma), sorted by sigma
};

/// Direct multiplicative evaluation via a smallest-prime-factor sieve.
/// Requires r > 0 (the sum is finite, so r = 1 is meaningful) and n_max >= 1.
ValueSample sample_values(double r, std::uint64_t n_max);

/// Maximal open intervals between consecutive sorted values wider than
/// min_width. Advisory only: resolution is limited by the sample.
std::vector<std::pair<double, double>> empirical_gaps(const ValueSample& sample,
                                                      double min_width);

/// Non-certified mightiness of the m-th prime (1-indexed): compares
/// 1 + p_m^{-r} against the partial tail product over primes in (p_m, B].
bool brute_mighty(std::size_t m, double r, std::uint64_t bound);

/// CSV export, header "n,sigma", rows in sorted-value order.
void write_csv(const ValueSample& sample, std::ostream& out);

} // namespace sigma::oracle

#endif
