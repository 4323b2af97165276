#ifndef SIGMA_CERTIFIED_HPP
#define SIGMA_CERTIFIED_HPP

#include <cstddef>

#include "sigma/context.hpp"
#include "sigma/enclosure.hpp"

namespace sigma {

/// Enclosure of zeta(r) for r.lo > 1: the partial sum over n <= prec.trunc
/// plus an Euler-Maclaurin tail bracket with a rigorous enveloping remainder
/// (width of order N^{-r-3}). Memoized per (r, precision).
Enclosure zeta_enclosure(Context& ctx, const Enclosure& r, const Precision& prec);

/// Enclosure of S_{1,m}(r) = sum over primes p_t with t > m of p_t^{-r}:
/// partial sum over primes in (p_m, B] plus tail in [0, B^{1-r}/(r-1)].
Enclosure tail_sum(Context& ctx, std::size_t m, const Enclosure& r, const Precision& prec);

/// Enclosure of u_m = prod over primes p_t with t > m of 1/(1 - p_t^{-r}),
/// computed through the Euler product as zeta(r) * prod_{t<=m}(1 - p_t^{-r}).
Enclosure tail_product(Context& ctx, std::size_t m, const Enclosure& r, const Precision& prec);

/// Enclosure of the finite Euler-factor prefix prod_{t<=m}(1 - p_t^{-r}).
Enclosure euler_prefix(Context& ctx, std::size_t m, const Enclosure& r, const Precision& prec);

/// Direct truncated route for u_m: the partial product over primes in
/// (p_m, B] times a tail factor in [1, exp(T/(1 - B^{-r}))] with
/// T = B^{1-r}/(r-1). Wider than tail_product; kept as an independent
/// cross-check.
Enclosure tail_product_truncated(Context& ctx, std::size_t m, const Enclosure& r,
                                 const Precision& prec);

} // namespace sigma

#endif
