#include "sigma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sigma::oracle {

namespace {

// Smallest prime factor for 0..n, spf[1] = 1.
std::vector<std::uint32_t> spf_sieve(std::uint64_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    if (n >= 1) spf[1] = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= n; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    return spf;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return primes;
}

double sigma_prime_power(double x, int alpha) {
    double s = 1.0;
    for (int i = 0; i < alpha; ++i) s = 1.0 + x * s;
    return s;
}

} // namespace

ValueSample sample_values(double r, std::uint64_t n_max) {
    if (!(r > 0.0)) throw std::invalid_argument("sample_values requires r > 0");
    if (n_max < 1) throw std::invalid_argument("sample_values requires n_max >= 1");

    auto spf = spf_sieve(n_max);
    std::vector<double> sig(n_max + 1, 1.0);
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        std::uint64_t p = spf[n];
        std::uint64_t rest = n;
        int alpha = 0;
        while (rest % p == 0) { rest /= p; ++alpha; }
        sig[n] = sig[rest] * sigma_prime_power(std::pow(static_cast<double>(p), -r), alpha);
    }

    ValueSample sample;
    sample.r = r;
    sample.n_max = n_max;
    sample.values.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) sample.values.emplace_back(n, sig[n]);
    std::sort(sample.values.begin(), sample.values.end(),
              [](const auto& a, const auto& b) {
                  return a.second != b.second ? a.second < b.second : a.first < b.first;
              });
    return sample;
}

std::vector<std::pair<double, double>> empirical_gaps(const ValueSample& sample,
                                                      double min_width) {
    if (!(min_width > 0.0)) throw std::invalid_argument("min_width must be positive");
    std::vector<std::pair<double, double>> gaps;
    for (std::size_t i = 0; i + 1 < sample.values.size(); ++i) {
        double lo = sample.values[i].second;
        double hi = sample.values[i + 1].second;
        if (hi - lo > min_width) gaps.emplace_back(lo, hi);
    }
    return gaps;
}

bool brute_mighty(std::size_t m, double r, std::uint64_t bound) {
    if (m == 0) throw std::invalid_argument("prime index is 1-based");
    auto primes = primes_up_to(bound);
    if (m > primes.size()) throw std::invalid_argument("truncation bound below p_m");
    double p = static_cast<double>(primes[m - 1]);
    double lhs = 1.0 + std::pow(p, -r);
    double rhs = 1.0;
    for (std::size_t t = m; t < primes.size(); ++t)
        rhs /= 1.0 - std::pow(static_cast<double>(primes[t]), -r);
    return lhs > rhs;
}

void write_csv(const ValueSample& sample, std::ostream& out) {
    out << "n,sigma\n";
    char buf[64];
    for (const auto& [n, v] : sample.values) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << n << ',' << buf << '\n';
    }
}

} // namespace sigma::oracle
