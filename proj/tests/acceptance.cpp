// Acceptance suite: one line per criterion, PASS or FAIL, with timing.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "sigma/closure.hpp"
#include "sigma/oracle.hpp"

using namespace sigma;

namespace {

const Precision kPrec;

int g_failures = 0;

void run(int number, const std::string& name, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok) ++g_failures;
    std::printf("%s  criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

Enclosure dec(const char* s) { return Enclosure::from_decimal(s, kPrec.bits); }

std::vector<std::string> grid_190_300() {
    std::vector<std::string> g;
    for (int i = 190; i <= 300; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%d.%02d", i / 100, i % 100);
        g.emplace_back(buf);
    }
    return g;
}

} // namespace

int main() {
    // 1. The constant eta to width 1e-6.
    run(1, "eta enclosure at tol 1e-6", 5.0, [](std::string& detail) {
        Context ctx;
        Enclosure e = eta(ctx, 1e-6, kPrec);
        bool ok = e.width_d() <= 1e-6 && e.contains(1.8877909) &&
                  e.contains(1.8877909267081189272);
        detail = "[" + e.lo_str() + ", " + e.hi_str() + "]";
        return ok;
    });

    // 2. Component count phase change around eta.
    run(2, "component counts across the phase change", 10.0, [](std::string& detail) {
        Context ctx;
        for (const char* rs : {"1.2", "1.5", "1.88"}) {
            ClosureReport rep = closure_report(ctx, dec(rs), kPrec);
            if (!(rep.intervals.certified_disjoint && rep.components_min == 1 &&
                  rep.components_max == 1)) {
                detail = std::string("expected exactly 1 component at r = ") + rs;
                return false;
            }
        }
        for (const char* rs : {"1.89", "2.0"}) {
            ClosureReport rep = closure_report(ctx, dec(rs), kPrec);
            if (rep.components_min < 2) {
                detail = std::string("expected >= 2 components at r = ") + rs;
                return false;
            }
        }
        return true;
    });

    // 3. The stated 3-mighty set {2, 3, 5}. The certified enumeration
    // (confirmed by an independent brute-force route) yields {2, 3, 5, 7}:
    // 1 + 7^{-3} = 1.0029155 while u_4 = 1.0018122, so 7 is 3-mighty and
    // this criterion cannot pass as stated.
    run(3, "mighty set at r = 3 equals {2, 3, 5}", 10.0, [](std::string& detail) {
        Context ctx;
        MightySummary s = enumerate_mighty(ctx, Enclosure::exact(3, kPrec.bits), kPrec);
        detail = "certified set is {";
        for (std::size_t i = 0; i < s.mighty_primes.size(); ++i)
            detail += (i ? ", " : "") + std::to_string(s.mighty_primes[i]);
        detail += s.enumeration_complete ? "}, enumeration complete"
                                         : "}, enumeration incomplete";
        return s.enumeration_complete &&
               s.mighty_primes == std::vector<std::uint64_t>{2, 3, 5};
    });

    // 4. Threshold ordering r_3 < r_2 < r_5 < r_7 with disjoint enclosures.
    run(4, "threshold ordering r3 < r2 < r5 < r7", 60.0, [](std::string& detail) {
        Context ctx;
        double tol = 1e-6;
        Enclosure r3 = threshold(ctx, 3, tol, kPrec);
        Enclosure r2 = threshold(ctx, 2, tol, kPrec);
        Enclosure r5 = threshold(ctx, 5, tol, kPrec);
        Enclosure r7 = threshold(ctx, 7, tol, kPrec);
        bool ordered = compare(r3, r2) == CertOrder::Less &&
                       compare(r2, r5) == CertOrder::Less &&
                       compare(r5, r7) == CertOrder::Less;
        bool windows = r3.lo_d() > 1.8 && r3.hi_d() < 1.9 && r5.lo_d() >= 2.2 &&
                       r5.hi_d() <= 2.3;
        if (!ordered) detail = "ordering not certified";
        if (!windows) detail += std::string(detail.empty() ? "" : "; ") + "window check failed";
        return ordered && windows;
    });

    // 5. The three-interval decomposition at r = 2 with matching endpoint
    // expressions.
    run(5, "three-interval decomposition at r = 2", 5.0, [](std::string& detail) {
        Context ctx;
        ClosureReport rep = closure_report(ctx, Enclosure::exact(2, kPrec.bits), kPrec);
        const auto& iv = rep.intervals.intervals;
        if (!(rep.intervals.certified_disjoint && iv.size() == 3 && rep.components_min == 3 &&
              rep.components_max == 3)) {
            detail = "expected exactly 3 certified-disjoint intervals";
            return false;
        }
        bool exprs = iv[0].a_expr.to_string() == "1" && iv[0].b_expr.to_string() == "u2" &&
                     iv[1].a_expr.to_string() == "s(3,1)" &&
                     iv[1].b_expr.to_string() == "u2*s(3,inf)" &&
                     iv[2].a_expr.to_string() == "s(2,1)" &&
                     iv[2].b_expr.to_string() == "u2*s(3,inf)*s(2,inf)";
        if (!exprs) detail = "endpoint expressions do not match";
        return exprs;
    });

    // 6 + 7. The sweep r = 1.90 (0.01) 3.00: counts never 4, never straddle
    // 4, and every row satisfies the bound sandwich.
    {
        std::vector<ClosureReport> reports;
        run(6, "sweep 1.90..3.00: component count never 4", 300.0, [&](std::string& detail) {
            Context ctx;
            for (const std::string& rs : grid_190_300())
                reports.push_back(closure_report(ctx, dec(rs.c_str()), kPrec));
            for (std::size_t i = 0; i < reports.size(); ++i) {
                const ClosureReport& rep = reports[i];
                if (rep.components_min <= 4 && 4 <= rep.components_max) {
                    detail = "row " + grid_190_300()[i] + " straddles 4";
                    return false;
                }
            }
            detail = std::to_string(reports.size()) + " rows";
            return true;
        });

        run(7, "bound sandwich on every sweep row", 300.0, [&](std::string& detail) {
            if (reports.empty()) {
                detail = "sweep unavailable";
                return false;
            }
            for (const ClosureReport& rep : reports)
                if (!(rep.lower_bound <= rep.components_min &&
                      rep.components_min <= rep.components_max &&
                      rep.components_max <= rep.product_bound)) {
                    detail = "bound violation at r = [" + rep.r.lo_str() + "]";
                    return false;
                }
            detail = std::to_string(reports.size()) + " rows";
            return true;
        });
    }

    // 8. Small primes below r are mighty; 2 is 2-mighty.
    run(8, "primes below r are mighty; 2 is 2-mighty", 10.0, [](std::string& detail) {
        Context ctx;
        for (const char* rs : {"2.5", "3.0", "3.5"}) {
            Enclosure r = dec(rs);
            for (std::uint64_t q : ctx.table.primes()) {
                if (compare(Enclosure::exact_ui(q, kPrec.bits), r) != CertOrder::Less) break;
                if (is_mighty(ctx, q, r, kPrec).verdict != Mightiness::Mighty) {
                    detail = "prime " + std::to_string(q) + " not mighty at r = " + rs;
                    return false;
                }
            }
        }
        if (is_mighty(ctx, 2, Enclosure::exact(2, kPrec.bits), kPrec).verdict !=
            Mightiness::Mighty) {
            detail = "2 not certified 2-mighty";
            return false;
        }
        return true;
    });

    // 9. Every prime in [29, 10^4] is certified not 3-mighty.
    run(9, "primes in [29, 10^4] not mighty at r = 3", 60.0, [](std::string& detail) {
        Context ctx;
        ctx.ensure_bound(10000);
        Enclosure three = Enclosure::exact(3, kPrec.bits);
        std::size_t checked = 0;
        for (std::uint64_t q : ctx.table.primes()) {
            if (q < 29) continue;
            if (q > 10000) break;
            ++checked;
            if (is_mighty(ctx, q, three, kPrec).verdict != Mightiness::NotMighty) {
                detail = "prime " + std::to_string(q) + " not certified non-mighty";
                return false;
            }
        }
        detail = std::to_string(checked) + " primes";
        return checked == 1220;
    });

    // 10. Certified containment against the brute-force sample, and every
    // certified mighty-prime gap shows up empirically.
    run(10, "oracle containment and empirical gaps", 120.0, [](std::string& detail) {
        for (const char* rs : {"2.0", "2.3", "3.0"}) {
            Context ctx;
            Enclosure r = dec(rs);
            ClosureReport rep = closure_report(ctx, r, kPrec);
            ContainmentCheck cc = containment_check(ctx, rep, 100000);
            if (cc.outside_intervals != 0 || cc.inside_gap != 0) {
                detail = std::string("containment failure at r = ") + rs + ", n = " +
                         std::to_string(cc.first_offender);
                return false;
            }
            auto tgaps = gaps_from_mighty(ctx, rep.summary, r, kPrec);
            auto sample = oracle::sample_values(r.mid_d(), 100000);
            double min_width = 1.0;
            for (const auto& [lo, hi] : tgaps)
                min_width = std::min(min_width, hi.lo_d() - lo.hi_d());
            auto egaps = oracle::empirical_gaps(sample, 0.25 * min_width);
            for (const auto& [lo, hi] : tgaps) {
                bool matched = false;
                for (const auto& [elo, ehi] : egaps)
                    if (elo <= lo.hi_d() && ehi >= hi.lo_d()) { matched = true; break; }
                if (!matched) {
                    detail = std::string("certified gap unmatched empirically at r = ") + rs;
                    return false;
                }
            }
        }
        return true;
    });

    // 11. The tail-sum / tail-product sandwich on 200 random cases.
    run(11, "tail sandwich on 200 random (m, r) cases", 30.0, [](std::string& detail) {
        Precision prec(kPrec.bits, 10000);
        Context ctx;
        std::mt19937 rng(20240817);
        std::uniform_int_distribution<std::size_t> m_dist(1, 20);
        std::uniform_real_distribution<double> r_dist(1.5, 4.0);
        Enclosure one = Enclosure::exact(1, prec.bits);
        Enclosure two = Enclosure::exact(2, prec.bits);
        for (int i = 0; i < 200; ++i) {
            std::size_t m = m_dist(rng);
            double rd = r_dist(rng);
            Enclosure r = Enclosure::from_doubles(rd, rd, prec.bits);
            Enclosure s1 = tail_sum(ctx, m, r, prec);
            Enclosure u = tail_product(ctx, m, r, prec);
            Enclosure mid = one - one / u;
            Enclosure lhs = s1 - s1 * s1 / two;
            if (compare(lhs, mid) == CertOrder::Greater ||
                compare(mid, s1) == CertOrder::Greater) {
                detail = "certified violation at m = " + std::to_string(m) +
                         ", r = " + std::to_string(rd);
                return false;
            }
        }
        return true;
    });

    if (g_failures != 0)
        std::printf("%d of 11 criteria failing\n", g_failures);
    else
        std::printf("all 11 criteria passing\n");
    return g_failures == 0 ? 0 : 1;
}
