#include "sigma/closure.hpp"

#include <algorithm>

namespace sigma {

namespace {

constexpr int kMaxRefinements = 4;

} // namespace

Enclosure EndpointExpr::eval(Context& ctx, const Enclosure& r, const Precision& prec) const {
    Enclosure v = has_tail ? tail_product(ctx, tail_index, r, prec)
                           : Enclosure::exact(1, prec.bits);
    for (auto [p, e] : factors)
        v = v * (e == kInfExponent ? sigma_prime_inf(p, r)
                                   : sigma_prime_power(p, static_cast<int>(e), r));
    return v;
}

std::string EndpointExpr::to_string() const {
    std::string s;
    if (has_tail) s = "u" + std::to_string(tail_index);
    for (auto [p, e] : factors) {
        if (!s.empty()) s += "*";
        s += "s(" + std::to_string(p) + "," +
             (e == kInfExponent ? std::string("inf") : std::to_string(e)) + ")";
    }
    return s.empty() ? "1" : s;
}

IntervalSet base_interval(Context& ctx, const MightySummary& summary, const Enclosure& r,
                          const Precision& prec) {
    if (!summary.enumeration_complete)
        throw IncompleteEnumeration("closure requires a complete mighty enumeration");
    ClosureInterval base;
    base.a_expr = EndpointExpr{};
    base.b_expr = EndpointExpr{{}, true, summary.largest_index}; // u_0 = zeta(r)
    base.a = base.a_expr.eval(ctx, r, prec);
    base.b = base.b_expr.eval(ctx, r, prec);
    IntervalSet set;
    set.intervals.push_back(std::move(base));
    return set;
}

int min_exponent(Context& ctx, std::uint64_t p, const Enclosure& r,
                 const std::function<Enclosure(const Precision&)>& ratio_eval,
                 const Precision& prec, int cap) {
    for (int t = 0; t <= cap; ++t) {
        Precision cur = prec;
        for (int attempt = 0;; ++attempt) {
            Enclosure step = sigma_prime_power(p, t + 1, r) / sigma_prime_power(p, t, r);
            CertOrder ord = compare(step, ratio_eval(cur));
            if (ord == CertOrder::Less) return t;
            if (ord == CertOrder::Greater) break;
            if (attempt == kMaxRefinements)
                throw ThresholdProximity("sigma ratio comparison undecidable for p = " +
                                             std::to_string(p) + ", t = " + std::to_string(t),
                                         p);
            cur = cur.refined();
        }
    }
    throw InternalError("min_exponent exceeded its integer-power cap for p = " +
                        std::to_string(p));
}

int min_exponent(Context& ctx, std::uint64_t p, const Enclosure& r, const Enclosure& ratio,
                 const Precision& prec, int cap) {
    return min_exponent(ctx, p, r, [&ratio](const Precision&) { return ratio; }, prec, cap);
}

IntervalSet expand_prime(Context& ctx, const IntervalSet& set, std::uint64_t p,
                         const Enclosure& r, const Precision& prec, int cap) {
    IntervalSet out;
    out.certified_disjoint = set.certified_disjoint;
    out.unresolved_merges = set.unresolved_merges;
    for (const ClosureInterval& iv : set.intervals) {
        auto ratio_eval = [&](const Precision& pr) {
            return iv.b_expr.eval(ctx, r, pr) / iv.a_expr.eval(ctx, r, pr);
        };
        int t = min_exponent(ctx, p, r, ratio_eval, prec, cap);
        for (int i = 0; i < t; ++i) {
            ClosureInterval piece;
            piece.a_expr = iv.a_expr;
            piece.b_expr = iv.b_expr;
            if (i > 0) {
                piece.a_expr.factors.emplace_back(p, i);
                piece.b_expr.factors.emplace_back(p, i);
            }
            piece.a = piece.a_expr.eval(ctx, r, prec);
            piece.b = piece.b_expr.eval(ctx, r, prec);
            out.intervals.push_back(std::move(piece));
        }
        ClosureInterval closing;
        closing.a_expr = iv.a_expr;
        if (t > 0) closing.a_expr.factors.emplace_back(p, t);
        closing.b_expr = iv.b_expr;
        closing.b_expr.factors.emplace_back(p, kInfExponent);
        closing.a = closing.a_expr.eval(ctx, r, prec);
        closing.b = closing.b_expr.eval(ctx, r, prec);
        out.intervals.push_back(std::move(closing));
    }
    return out;
}

IntervalSet merge(Context& ctx, IntervalSet set, const Enclosure& r, const Precision& prec) {
    auto& ivs = set.intervals;
    std::stable_sort(ivs.begin(), ivs.end(), [](const ClosureInterval& x, const ClosureInterval& y) {
        return mpfr_cmp(x.a.lo(), y.a.lo()) < 0;
    });

    // Certified comparison with on-demand re-evaluation of both endpoint
    // expressions at growing precision.
    auto refine_compare = [&](const EndpointExpr& xe, Enclosure& x, const EndpointExpr& ye,
                              Enclosure& y) {
        CertOrder ord = compare(x, y);
        Precision cur = prec;
        for (int attempt = 0; ord == CertOrder::Overlapping && attempt < kMaxRefinements;
             ++attempt) {
            cur = cur.refined();
            x = xe.eval(ctx, r, cur);
            y = ye.eval(ctx, r, cur);
            ord = compare(x, y);
        }
        return ord;
    };

    IntervalSet out;
    out.certified_disjoint = set.certified_disjoint;
    out.unresolved_merges = set.unresolved_merges;
    for (ClosureInterval& next : ivs) {
        if (out.intervals.empty()) {
            out.intervals.push_back(std::move(next));
            continue;
        }
        ClosureInterval& cur = out.intervals.back();
        CertOrder ord = refine_compare(cur.b_expr, cur.b, next.a_expr, next.a);
        if (ord == CertOrder::Less) { // certified gap
            out.intervals.push_back(std::move(next));
            continue;
        }
        if (ord == CertOrder::Overlapping) {
            out.certified_disjoint = false;
            ++out.unresolved_merges;
        }
        // Touching or overlapping: coalesce, keeping the larger right end.
        CertOrder bord = refine_compare(cur.b_expr, cur.b, next.b_expr, next.b);
        if (bord == CertOrder::Overlapping) out.certified_disjoint = false;
        if (bord == CertOrder::Less ||
            (bord == CertOrder::Overlapping && mpfr_cmp(next.b.hi(), cur.b.hi()) > 0)) {
            cur.b_expr = std::move(next.b_expr);
            cur.b = std::move(next.b);
        }
    }
    return out;
}

int ceil_log_ratio(std::uint64_t target, std::uint64_t base) {
    if (base < 2 || target < 2) throw InvalidArgument("ceil_log_ratio needs arguments >= 2");
    int k = 0;
    std::uint64_t pw = 1;
    while (pw < target) {
        if (pw > UINT64_MAX / base) throw InvalidArgument("ceil_log_ratio overflow");
        pw *= base;
        ++k;
    }
    return k;
}

long product_upper_bound(Context& ctx, const MightySummary& summary) {
    if (!summary.enumeration_complete)
        throw IncompleteEnumeration("product bound requires a complete enumeration");
    if (summary.largest_index == 0) return 1;
    ctx.ensure_index(summary.largest_index + 1);
    std::uint64_t p_next = ctx.table.nth_prime(summary.largest_index + 1);
    long prod = 1;
    for (std::size_t i = 1; i <= summary.largest_index; ++i)
        prod *= ceil_log_ratio(p_next, ctx.table.nth_prime(i));
    return prod;
}

ClosureReport closure_report(Context& ctx, const Enclosure& r, const Precision& prec,
                             std::optional<std::uint64_t> scan_cap) {
    ClosureReport rep;
    rep.r = r;
    rep.precision = prec;
    rep.summary = enumerate_mighty(ctx, r, prec, scan_cap);
    rep.lower_bound = static_cast<long>(rep.summary.count) + 1;
    rep.product_bound = product_upper_bound(ctx, rep.summary);

    IntervalSet set = base_interval(ctx, rep.summary, r, prec);
    std::size_t l = rep.summary.largest_index;
    if (l > 0) {
        ctx.ensure_index(l + 1);
        std::uint64_t p_next = ctx.table.nth_prime(l + 1);
        for (std::size_t k = l; k >= 1; --k) {
            std::uint64_t p = ctx.table.nth_prime(k);
            int cap = ceil_log_ratio(p_next, p);
            set = merge(ctx, expand_prime(ctx, set, p, r, prec, cap), r, prec);
        }
    }
    rep.intervals = set;

    auto n = static_cast<long>(set.intervals.size());
    rep.components_min = n;
    rep.components_max = set.certified_disjoint
                             ? n
                             : std::min(n + static_cast<long>(set.unresolved_merges),
                                        rep.product_bound);
    for (std::size_t i = 0; i + 1 < set.intervals.size(); ++i)
        rep.gaps.emplace_back(set.intervals[i].b, set.intervals[i + 1].a);

    if (set.certified_disjoint) {
        if (rep.lower_bound > rep.components_min || rep.components_max > rep.product_bound)
            throw InternalError("certified component count violates the theorem bounds");
    }
    return rep;
}

std::vector<std::pair<Enclosure, Enclosure>> gaps_from_mighty(Context& ctx,
                                                              const MightySummary& summary,
                                                              const Enclosure& r,
                                                              const Precision& prec) {
    if (!summary.enumeration_complete)
        throw IncompleteEnumeration("gap list requires a complete enumeration");
    std::vector<std::pair<Enclosure, Enclosure>> gaps;
    for (auto it = summary.mighty_primes.rbegin(); it != summary.mighty_primes.rend(); ++it) {
        std::uint64_t p = *it;
        std::size_t m = ctx.table.index_of(p);
        gaps.emplace_back(tail_product(ctx, m, r, prec),
                          Enclosure::exact(1, prec.bits) + ui_pow(p, neg(r)));
    }
    return gaps;
}

NotFourCase classify_not_four(const ClosureReport& report) {
    if (report.components_min != report.components_max)
        throw InvalidArgument("classification requires a certified exact component count");
    long count = report.components_min;
    if (count == 4) throw InternalError("computed component count 4 contradicts the theorem");
    const auto& s = report.summary;
    if (s.count == 0) {
        if (count != 1) throw InternalError("no mighty primes but component count != 1");
        return NotFourCase::NoMighty;
    }
    if (s.largest_index == 2) {
        if (count > 3) throw InternalError("L_r = 2 but more than 3 components");
        return NotFourCase::AtMostThree;
    }
    if (s.count >= 3) {
        if (count < 5) throw InternalError("N_r >= 3 but fewer than 5 components");
        return NotFourCase::AtLeastFive;
    }
    throw InternalError("mighty summary outside the theorem's case analysis");
}

ContainmentCheck containment_check(Context& ctx, const ClosureReport& report,
                                   std::uint64_t n_max) {
    const Enclosure& r = report.r;
    const Precision& prec = report.precision;

    std::vector<std::uint32_t> spf(n_max + 1, 0);
    for (std::uint64_t i = 2; i <= n_max; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= n_max; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }

    // sigma values by multiplicativity: sig[n] = sig[n / p^a] * sigma(p^a).
    std::vector<Enclosure> sig(n_max + 1, Enclosure::exact(1, prec.bits));
    std::unordered_map<std::uint64_t, Enclosure> x_cache; // p -> p^{-r}
    auto prime_x = [&](std::uint64_t p) -> const Enclosure& {
        auto it = x_cache.find(p);
        if (it == x_cache.end()) it = x_cache.emplace(p, ui_pow(p, neg(r))).first;
        return it->second;
    };

    ContainmentCheck res;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        std::uint64_t p = spf[n];
        std::uint64_t rest = n;
        int alpha = 0;
        while (rest % p == 0) { rest /= p; ++alpha; }
        sig[n] = sig[rest] * sigma_prime_power_from_x(prime_x(p), alpha);
    }
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        ++res.checked;
        const Enclosure& v = sig[n];
        bool in_interval = false;
        for (const ClosureInterval& iv : report.intervals.intervals)
            if (mpfr_cmp(v.hi(), iv.a.lo()) >= 0 && mpfr_cmp(v.lo(), iv.b.hi()) <= 0) {
                in_interval = true;
                break;
            }
        bool in_gap = false;
        for (const auto& [glo, ghi] : report.gaps)
            if (mpfr_cmp(v.lo(), glo.hi()) > 0 && mpfr_cmp(v.hi(), ghi.lo()) < 0) {
                in_gap = true;
                break;
            }
        if (!in_interval) {
            ++res.outside_intervals;
            if (res.first_offender == 0) res.first_offender = n;
        }
        if (in_gap) {
            ++res.inside_gap;
            if (res.first_offender == 0) res.first_offender = n;
        }
    }
    return res;
}

} // namespace sigma
