#include "sigma/divisor.hpp"

#include <cmath>

namespace sigma {

namespace {

void require_positive_r(const Enclosure& r) {
    if (mpfr_sgn(r.lo()) <= 0)
        throw InvalidArgument("sigma_{-r} requires r > 0");
}

} // namespace

FactoredInteger factor(Context& ctx, std::uint64_t n) {
    if (n == 0) throw InvalidArgument("cannot factor 0");
    FactoredInteger f;
    f.n = n;
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 2;
    ctx.ensure_bound(root);
    for (std::uint64_t p : ctx.table.primes()) {
        if (p * p > n) break;
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1); // leftover cofactor is prime
    return f;
}

Enclosure sigma_prime_power_from_x(const Enclosure& x, int alpha) {
    if (alpha < 0) throw InvalidArgument("exponent must be non-negative");
    Enclosure one = Enclosure::exact(1, x.prec());
    Enclosure s = one;
    for (int i = 0; i < alpha; ++i) s = one + x * s;
    return s;
}

Enclosure sigma_prime_power(std::uint64_t p, int alpha, const Enclosure& r) {
    require_positive_r(r);
    return sigma_prime_power_from_x(ui_pow(static_cast<unsigned long>(p), neg(r)), alpha);
}

Enclosure sigma_prime_inf(std::uint64_t p, const Enclosure& r) {
    require_positive_r(r);
    Enclosure one = Enclosure::exact(1, r.prec());
    return one / (one - ui_pow(static_cast<unsigned long>(p), neg(r)));
}

Enclosure sigma_n(const FactoredInteger& n, const Enclosure& r) {
    require_positive_r(r);
    Enclosure prod = Enclosure::exact(1, r.prec());
    for (auto [p, e] : n.factors) prod = prod * sigma_prime_power(p, e, r);
    return prod;
}

} // namespace sigma
