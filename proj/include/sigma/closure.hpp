#ifndef SIGMA_CLOSURE_HPP
#define SIGMA_CLOSURE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigma/certified.hpp"
#include "sigma/context.hpp"
#include "sigma/divisor.hpp"
#include "sigma/mighty.hpp"

namespace sigma {

/// Exponent marker for the limit factor sigma_{-r}(p^inf).
constexpr std::int64_t kInfExponent = -1;

/// A closure-interval endpoint kept as an exact symbolic product
/// (sigma_{-r}(p^i) factors times an optional tail product u_m), so merge
/// decisions can be re-evaluated at higher precision without redoing the
/// induction.
struct EndpointExpr {
    std::vector<std::pair<std::uint64_t, std::int64_t>> factors;
    bool has_tail = false;
    std::size_t tail_index = 0;

    Enclosure eval(Context& ctx, const Enclosure& r, const Precision& prec) const;
    std::string to_string() const;
};

/// One closed component [a, b] of the closure.
struct ClosureInterval {
    EndpointExpr a_expr, b_expr;
    Enclosure a, b;
};

/// Sorted union of closure intervals. certified_disjoint is false when some
/// merge decision stayed undecided at maximum refinement and the pair was
/// conservatively merged.
struct IntervalSet {
    std::vector<ClosureInterval> intervals;
    bool certified_disjoint = true;
    std::size_t unresolved_merges = 0;
};

struct ClosureReport {
    Enclosure r;
    Precision precision;
    MightySummary summary;
    IntervalSet intervals;
    long components_min = 0;
    long components_max = 0;
    long lower_bound = 0;   // N_r + 1
    long product_bound = 0; // prod of ceil(log p_{L+1} / log p_i)
    std::vector<std::pair<Enclosure, Enclosure>> gaps;
};

/// Step 1 of the induction: [1, u_{L_r}]; [1, zeta(r)] when no prime is
/// r-mighty. Requires a complete enumeration.
IntervalSet base_interval(Context& ctx, const MightySummary& summary, const Enclosure& r,
                          const Precision& prec);

/// Least t >= 0 with certified sigma_{-r}(p^{t+1})/sigma_{-r}(p^t) <= ratio.
/// ratio_eval re-evaluates the target ratio at a given precision so the
/// comparison can be refined; cap comes from the integer-power bound
/// ceil(log p_{L+1} / log p).
int min_exponent(Context& ctx, std::uint64_t p, const Enclosure& r,
                 const std::function<Enclosure(const Precision&)>& ratio_eval,
                 const Precision& prec, int cap);

/// Convenience overload for a fixed ratio enclosure.
int min_exponent(Context& ctx, std::uint64_t p, const Enclosure& r, const Enclosure& ratio,
                 const Precision& prec, int cap);

/// Step 2+3 for one prime: each [a, b] becomes sigma_{-r}(p^i)[a, b] for
/// 0 <= i < t plus [a sigma_{-r}(p^t), b sigma_{-r}(p^inf)], then merged.
IntervalSet expand_prime(Context& ctx, const IntervalSet& set, std::uint64_t p,
                         const Enclosure& r, const Precision& prec, int cap);

/// Coalesces overlapping or touching intervals with certified comparisons;
/// an undecidable pair is conservatively merged and flagged.
IntervalSet merge(Context& ctx, IntervalSet set, const Enclosure& r, const Precision& prec);

/// Full backward induction: enumerate mighty primes, start from the base
/// interval and expand p_{L_r}, ..., p_1. Fills counts, bounds, and gaps.
ClosureReport closure_report(Context& ctx, const Enclosure& r, const Precision& prec,
                             std::optional<std::uint64_t> scan_cap = std::nullopt);

/// The guaranteed gap (u_m, 1 + p_m^{-r}) for each r-mighty prime, in
/// ascending numeric order.
std::vector<std::pair<Enclosure, Enclosure>> gaps_from_mighty(Context& ctx,
                                                              const MightySummary& summary,
                                                              const Enclosure& r,
                                                              const Precision& prec);

/// prod_{i=1..L_r} ceil(log p_{L_r+1} / log p_i), each ceiling decided by
/// exact integer power comparison.
long product_upper_bound(Context& ctx, const MightySummary& summary);

/// Smallest k >= 1 with base^k >= target (= ceil(log target / log base)).
int ceil_log_ratio(std::uint64_t target, std::uint64_t base);

enum class NotFourCase { NoMighty, AtMostThree, AtLeastFive };

/// Which case of the C_r != 4 theorem applies; throws InternalError if the
/// certified count contradicts it (that would be an implementation bug).
NotFourCase classify_not_four(const ClosureReport& report);

struct ContainmentCheck {
    std::uint64_t checked = 0;
    std::uint64_t outside_intervals = 0; // enclosure overlapping no interval
    std::uint64_t inside_gap = 0;        // enclosure strictly inside a gap
    std::uint64_t first_offender = 0;
};

/// Certified sweep of sigma_{-r}(n) for n = 1..n_max against the report:
/// every enclosure must overlap some interval and must not lie strictly
/// inside any gap.
ContainmentCheck containment_check(Context& ctx, const ClosureReport& report,
                                   std::uint64_t n_max);

} // namespace sigma

#endif
