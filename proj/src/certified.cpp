#include "sigma/certified.hpp"

#include <vector>

namespace sigma {

namespace {

void require_convergent(const Enclosure& r) {
    if (mpfr_cmp_ui(r.lo(), 1) <= 0)
        throw DivergentInput("requires r > 1");
}

// Enclosure of B^{1-r}/(r-1), the integral bound on sum_{n>B} n^{-r}.
Enclosure integer_tail_bound(unsigned long b, const Enclosure& r, mpfr_prec_t bits) {
    Enclosure one_minus_r = Enclosure::exact(1, bits) - r;
    Enclosure r_minus_one = r - Enclosure::exact(1, bits);
    return ui_pow(b, one_minus_r) / r_minus_one;
}

} // namespace

Enclosure zeta_enclosure(Context& ctx, const Enclosure& r, const Precision& prec) {
    require_convergent(r);
    const auto n_terms = static_cast<unsigned long>(prec.trunc);
    std::string key = "z|" + std::to_string(prec.bits) + "|" + std::to_string(n_terms) + "|" + r.key();
    if (auto it = ctx.zeta_cache.find(key); it != ctx.zeta_cache.end()) return it->second;

    Enclosure minus_r = neg(r);

    // Smallest-prime-factor sieve so composite n^{-r} is one multiplication:
    // n^{-r} = (n/spf)^{-r} * spf^{-r}. All terms positive, so the product
    // of endpoint bounds is again an endpoint bound.
    std::vector<std::uint32_t> spf(n_terms + 1, 0);
    for (unsigned long i = 2; i <= n_terms; ++i) {
        if (spf[i] != 0) continue;
        for (unsigned long j = i; j <= n_terms; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }

    std::vector<Real> term_lo, term_hi;
    term_lo.reserve(n_terms + 1);
    term_hi.reserve(n_terms + 1);
    for (unsigned long i = 0; i <= n_terms; ++i) {
        term_lo.emplace_back(prec.bits);
        term_hi.emplace_back(prec.bits);
    }

    Real sum_lo(prec.bits), sum_hi(prec.bits);
    mpfr_set_ui(sum_lo.get(), 1, MPFR_RNDD); // n = 1 term
    mpfr_set_ui(sum_hi.get(), 1, MPFR_RNDU);
    for (unsigned long n = 2; n <= n_terms; ++n) {
        unsigned long p = spf[n];
        if (p == n) {
            mpfr_ui_pow(term_lo[n].get(), n, minus_r.lo(), MPFR_RNDD);
            mpfr_ui_pow(term_hi[n].get(), n, minus_r.hi(), MPFR_RNDU);
        } else {
            mpfr_mul(term_lo[n].get(), term_lo[n / p].get(), term_lo[p].get(), MPFR_RNDD);
            mpfr_mul(term_hi[n].get(), term_hi[n / p].get(), term_hi[p].get(), MPFR_RNDU);
        }
        mpfr_add(sum_lo.get(), sum_lo.get(), term_lo[n].get(), MPFR_RNDD);
        mpfr_add(sum_hi.get(), sum_hi.get(), term_hi[n].get(), MPFR_RNDU);
    }
    Enclosure partial = Enclosure::from_endpoints(std::move(sum_lo), std::move(sum_hi));

    // Euler-Maclaurin tail: with f(x) = x^{-r} completely monotone, the
    // expansion is enveloping, so
    //   sum_{n>N} n^{-r} = N^{1-r}/(r-1) - N^{-r}/2 + (r/12) N^{-r-1}
    //                      + theta * c4 * N^{-r-3},  theta in [-1, 1],
    // with c4 = r(r+1)(r+2)/720 (first omitted term bounds the remainder).
    // Far tighter near r = 1 than the plain integral bracket.
    Enclosure one = Enclosure::exact(1, prec.bits);
    Enclosure n_enc = Enclosure::exact_ui(n_terms, prec.bits);
    Enclosure n_pow = ui_pow(n_terms, neg(r)); // N^{-r}
    Enclosure t = ui_pow(n_terms, one - r) / (r - one) -
                  n_pow / Enclosure::exact(2, prec.bits) +
                  r * n_pow / (Enclosure::exact(12, prec.bits) * n_enc);
    Enclosure c4 = r * (r + one) * (r + Enclosure::exact(2, prec.bits)) /
                   Enclosure::exact(720, prec.bits) * n_pow / (n_enc * n_enc * n_enc);
    Enclosure t_lo_e = t - c4, t_hi_e = t + c4;
    Real tlo(prec.bits), thi(prec.bits);
    mpfr_set(tlo.get(), t_lo_e.lo(), MPFR_RNDD);
    mpfr_set(thi.get(), t_hi_e.hi(), MPFR_RNDU);
    Enclosure tail = Enclosure::from_endpoints(std::move(tlo), std::move(thi));

    Enclosure result = partial + tail;
    ctx.zeta_cache.emplace(key, result);
    return result;
}

Enclosure tail_sum(Context& ctx, std::size_t m, const Enclosure& r, const Precision& prec) {
    require_convergent(r);
    const auto b = static_cast<std::uint64_t>(prec.trunc);
    ctx.ensure_bound(b);
    ctx.ensure_index(m);
    const auto& primes = ctx.table.primes();

    Real sum_lo(prec.bits), sum_hi(prec.bits);
    Enclosure minus_r = neg(r);
    Real t_lo(prec.bits), t_hi(prec.bits);
    for (std::size_t i = m; i < primes.size() && primes[i] <= b; ++i) {
        mpfr_ui_pow(t_lo.get(), primes[i], minus_r.lo(), MPFR_RNDD);
        mpfr_ui_pow(t_hi.get(), primes[i], minus_r.hi(), MPFR_RNDU);
        mpfr_add(sum_lo.get(), sum_lo.get(), t_lo.get(), MPFR_RNDD);
        mpfr_add(sum_hi.get(), sum_hi.get(), t_hi.get(), MPFR_RNDU);
    }
    Enclosure partial = Enclosure::from_endpoints(std::move(sum_lo), std::move(sum_hi));

    // Tail over primes > B is sandwiched by [0, sum over all integers > B].
    Enclosure bound = integer_tail_bound(static_cast<unsigned long>(b), r, prec.bits);
    Real zero(prec.bits), hi(prec.bits);
    mpfr_set(hi.get(), bound.hi(), MPFR_RNDU);
    return partial + Enclosure::from_endpoints(std::move(zero), std::move(hi));
}

Enclosure euler_prefix(Context& ctx, std::size_t m, const Enclosure& r, const Precision& prec) {
    require_convergent(r);
    ctx.ensure_index(m);
    Enclosure minus_r = neg(r);
    Enclosure one = Enclosure::exact(1, prec.bits);
    Enclosure prod = one;
    for (std::size_t i = 0; i < m; ++i)
        prod = prod * (one - ui_pow(ctx.table.primes()[i], minus_r));
    return prod;
}

Enclosure tail_product(Context& ctx, std::size_t m, const Enclosure& r, const Precision& prec) {
    return zeta_enclosure(ctx, r, prec) * euler_prefix(ctx, m, r, prec);
}

Enclosure tail_product_truncated(Context& ctx, std::size_t m, const Enclosure& r,
                                 const Precision& prec) {
    require_convergent(r);
    const auto b = static_cast<std::uint64_t>(prec.trunc);
    ctx.ensure_bound(b);
    ctx.ensure_index(m);
    const auto& primes = ctx.table.primes();

    Enclosure minus_r = neg(r);
    Enclosure one = Enclosure::exact(1, prec.bits);
    Enclosure prod = one;
    for (std::size_t i = m; i < primes.size() && primes[i] <= b; ++i)
        prod = prod / (one - ui_pow(primes[i], minus_r));

    // Remaining factors: 1 <= prod_{p > B} 1/(1-p^{-r}) <= exp(T/(1-B^{-r}))
    // with T = B^{1-r}/(r-1), using -log(1-x) <= x/(1-x) and the integer
    // tail bound on sum_{p>B} p^{-r}.
    Enclosure t = integer_tail_bound(static_cast<unsigned long>(b), r, prec.bits);
    Enclosure denom = one - ui_pow(static_cast<unsigned long>(b), minus_r);
    Enclosure factor_hi = exp_enc(t / denom);
    Real lo(prec.bits), hi(prec.bits);
    mpfr_set_ui(lo.get(), 1, MPFR_RNDD);
    mpfr_set(hi.get(), factor_hi.hi(), MPFR_RNDU);
    return prod * Enclosure::from_endpoints(std::move(lo), std::move(hi));
}

} // namespace sigma
