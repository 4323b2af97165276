#ifndef SIGMA_MIGHTY_HPP
#define SIGMA_MIGHTY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sigma/certified.hpp"
#include "sigma/context.hpp"
#include "sigma/enclosure.hpp"

namespace sigma {

enum class Mightiness { Mighty, NotMighty, Undecided };

/// Outcome of the defining comparison 1 + p_m^{-r} vs u_m, with the
/// certifying enclosure pair.
struct MightyVerdict {
    Mightiness verdict = Mightiness::Undecided;
    Enclosure lhs; // 1 + p^{-r}
    Enclosure rhs; // u_m
    Precision precision_used;
};

struct MightySummary {
    Enclosure r;
    std::vector<std::uint64_t> mighty_primes; // ascending
    std::uint64_t largest = 0;                // P_r, 0 if none
    std::size_t count = 0;                    // N_r
    std::size_t largest_index = 0;            // L_r, 0 if none
    bool enumeration_complete = false;
    std::uint64_t scan_bound = 0; // all primes > scan_bound certified not mighty
                                  // when enumeration_complete
};

/// Certified r-mightiness of prime p: compares enclosures of 1 + p^{-r} and
/// u_m, refining precision/truncation up to 4 doublings while the comparison
/// overlaps.
MightyVerdict is_mighty(Context& ctx, std::uint64_t p, const Enclosure& r,
                        const Precision& prec);

/// Scans primes in order, certifying each verdict. Enumeration is complete
/// once the Nagura-based stopping certificate fires at some prime Q >= 29:
/// with rho = (5/6)^r and c = rho/(1-rho), certified c - c^2/(2 Q^r) > 1
/// together with Q^{1-r}/(r-1) < 1 implies every prime >= Q is not r-mighty.
MightySummary enumerate_mighty(Context& ctx, const Enclosure& r, const Precision& prec,
                               std::optional<std::uint64_t> scan_cap = std::nullopt);

/// Certified bisection for the mightiness threshold r_p, valid because
/// p is s-mighty exactly for s > r_p. Returns an enclosure of width <= tol.
Enclosure threshold(Context& ctx, std::uint64_t p, double tol, const Precision& prec);

/// The constant eta: the unique root in [1.5, 2] of
/// (2^s/(2^s-1)) ((3^s+1)/(3^s-1)) = zeta(s). Certified sign bisection to
/// width <= tol.
Enclosure eta(Context& ctx, double tol, const Precision& prec);

} // namespace sigma

#endif
