#include "sigma/mighty.hpp"

#include <cmath>

namespace sigma {

namespace {

constexpr int kMaxRefinements = 4;
constexpr int kMaxBisectIters = 200;

void require_convergent(const Enclosure& r) {
    if (mpfr_cmp_ui(r.lo(), 1) <= 0) throw DivergentInput("requires r > 1");
}

Enclosure point(mpfr_srcptr v, mpfr_prec_t bits) {
    Real lo(bits), hi(bits);
    mpfr_set(lo.get(), v, MPFR_RNDD);
    mpfr_set(hi.get(), v, MPFR_RNDU);
    return Enclosure::from_endpoints(std::move(lo), std::move(hi));
}

} // namespace

MightyVerdict is_mighty(Context& ctx, std::uint64_t p, const Enclosure& r,
                        const Precision& prec) {
    require_convergent(r);
    ctx.ensure_bound(p);
    std::size_t m = ctx.table.index_of(p);

    Precision cur = prec;
    MightyVerdict v;
    for (int attempt = 0;; ++attempt) {
        Enclosure lhs = Enclosure::exact(1, cur.bits) + ui_pow(p, neg(r));
        Enclosure rhs = tail_product(ctx, m, r, cur);
        CertOrder ord = compare(lhs, rhs);
        v.lhs = lhs;
        v.rhs = rhs;
        v.precision_used = cur;
        if (ord == CertOrder::Greater) { v.verdict = Mightiness::Mighty; return v; }
        if (ord == CertOrder::Less) { v.verdict = Mightiness::NotMighty; return v; }
        if (attempt == kMaxRefinements) { v.verdict = Mightiness::Undecided; return v; }
        cur = cur.refined();
    }
}

namespace {

// Stopping certificate at prime Q = p_m (Q >= 29 so Nagura's theorem
// applies): S_{1,m} >= c Q^{-r} with c = rho/(1-rho), rho = (5/6)^r, hence
// S - S^2/2 > 1/(Q^r+1) for Q and every larger prime provided
// c - c^2/(2 Q^r) > 1 (the left side is increasing in Q while Q^r/(Q^r+1)
// stays below 1). The side condition Q^{1-r}/(r-1) < 1 certifies
// S_{1,m} < 1 so that x - x^2/2 is applied on its increasing range.
bool stopping_certificate(std::uint64_t q, const Enclosure& r, const Precision& prec) {
    mpfr_prec_t bits = prec.bits;
    Enclosure one = Enclosure::exact(1, bits);
    Enclosure rho = pow_enc(Enclosure::exact(5, bits) / Enclosure::exact(6, bits), r);
    Enclosure denom = one - rho;
    if (!denom.is_positive()) return false;
    Enclosure c = rho / denom;
    Enclosure q_r = ui_pow(q, r);
    Enclosure margin = c - c * c / (Enclosure::exact(2, bits) * q_r);
    if (compare(margin, one) != CertOrder::Greater) return false;
    Enclosure s1_bound = ui_pow(q, one - r) / (r - one);
    return compare(s1_bound, one) == CertOrder::Less;
}

} // namespace

MightySummary enumerate_mighty(Context& ctx, const Enclosure& r, const Precision& prec,
                               std::optional<std::uint64_t> scan_cap) {
    require_convergent(r);
    MightySummary s;
    s.r = r;

    std::uint64_t cap;
    if (scan_cap) {
        cap = *scan_cap;
    } else {
        // P_r <= (r/log r)^{20/9} heuristic; the stopping rule normally
        // fires long before the cap is reached.
        double rd = r.mid_d();
        cap = static_cast<std::uint64_t>(std::ceil(std::pow(rd / std::log(rd), 20.0 / 9.0)));
        cap = std::max<std::uint64_t>(cap, 100000);
    }

    std::uint64_t prev = 0;
    for (std::size_t m = 1;; ++m) {
        ctx.ensure_index(m);
        std::uint64_t q = ctx.table.nth_prime(m);
        if (q >= 29 && stopping_certificate(q, r, prec)) {
            s.enumeration_complete = true;
            s.scan_bound = prev;
            break;
        }
        if (q > cap) {
            s.enumeration_complete = false;
            s.scan_bound = prev;
            break;
        }
        MightyVerdict v = is_mighty(ctx, q, r, prec);
        if (v.verdict == Mightiness::Undecided)
            throw ThresholdProximity(
                "r too close to the mightiness threshold of " + std::to_string(q), q);
        if (v.verdict == Mightiness::Mighty) s.mighty_primes.push_back(q);
        prev = q;
    }

    s.count = s.mighty_primes.size();
    if (!s.mighty_primes.empty()) {
        s.largest = s.mighty_primes.back();
        s.largest_index = ctx.table.index_of(s.largest);
    }
    return s;
}

Enclosure threshold(Context& ctx, std::uint64_t p, double tol, const Precision& prec) {
    if (tol <= 0) throw InvalidArgument("tolerance must be positive");

    Real lo(prec.bits), hi(prec.bits);
    mpfr_set_d(lo.get(), 1.0 + std::ldexp(1.0, -20), MPFR_RNDD);
    mpfr_set_ui(hi.get(), 8, MPFR_RNDU);

    if (is_mighty(ctx, p, point(lo.get(), prec.bits), prec).verdict != Mightiness::NotMighty)
        throw BracketFailure("prime " + std::to_string(p) + " already mighty at bracket start");
    while (is_mighty(ctx, p, point(hi.get(), prec.bits), prec).verdict != Mightiness::Mighty) {
        mpfr_mul_ui(hi.get(), hi.get(), 2, MPFR_RNDU);
        if (mpfr_cmp_ui(hi.get(), 1024) > 0)
            throw BracketFailure("prime " + std::to_string(p) +
                                 " not mighty up to r = 1024; no threshold bracket");
    }

    Real mid(prec.bits), width(prec.bits);
    for (int iter = 0; iter < kMaxBisectIters; ++iter) {
        mpfr_sub(width.get(), hi.get(), lo.get(), MPFR_RNDU);
        if (mpfr_cmp_d(width.get(), tol) <= 0) break;
        mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
        mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
        MightyVerdict v = is_mighty(ctx, p, point(mid.get(), prec.bits), prec);
        if (v.verdict == Mightiness::Mighty)
            mpfr_set(hi.get(), mid.get(), MPFR_RNDU);
        else if (v.verdict == Mightiness::NotMighty)
            mpfr_set(lo.get(), mid.get(), MPFR_RNDD);
        else
            throw ThresholdProximity("mightiness undecidable at bisection midpoint for " +
                                         std::to_string(p),
                                     p);
    }
    return Enclosure::from_endpoints(std::move(lo), std::move(hi));
}

namespace {

// f(s) = (2^s/(2^s-1)) ((3^s+1)/(3^s-1)) - zeta(s); eta is its root, and
// f > 0 exactly where 3 is s-mighty.
Enclosure eta_balance(Context& ctx, const Enclosure& s, const Precision& prec) {
    Enclosure one = Enclosure::exact(1, prec.bits);
    Enclosure t2 = ui_pow(2, s);
    Enclosure t3 = ui_pow(3, s);
    Enclosure lhs = (t2 / (t2 - one)) * ((t3 + one) / (t3 - one));
    return lhs - zeta_enclosure(ctx, s, prec);
}

// +1 / -1 when certified, 0 when the enclosure straddles zero at maximum
// refinement.
int certified_sign(Context& ctx, mpfr_srcptr s, const Precision& prec) {
    Precision cur = prec;
    for (int attempt = 0;; ++attempt) {
        Enclosure f = eta_balance(ctx, point(s, cur.bits), cur);
        if (mpfr_sgn(f.hi()) < 0) return -1;
        if (mpfr_sgn(f.lo()) > 0) return 1;
        if (attempt == kMaxRefinements) return 0;
        cur = cur.refined();
    }
}

} // namespace

Enclosure eta(Context& ctx, double tol, const Precision& prec) {
    if (tol <= 0) throw InvalidArgument("tolerance must be positive");

    Real lo(prec.bits), hi(prec.bits), mid(prec.bits), width(prec.bits);
    mpfr_set_d(lo.get(), 1.5, MPFR_RNDD);
    mpfr_set_ui(hi.get(), 2, MPFR_RNDU);
    if (certified_sign(ctx, lo.get(), prec) >= 0 || certified_sign(ctx, hi.get(), prec) <= 0)
        throw BracketFailure("balance function does not change sign on [1.5, 2]");

    for (int iter = 0; iter < kMaxBisectIters; ++iter) {
        mpfr_sub(width.get(), hi.get(), lo.get(), MPFR_RNDU);
        if (mpfr_cmp_d(width.get(), tol) <= 0) break;
        mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
        mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
        int sign = certified_sign(ctx, mid.get(), prec);
        if (sign > 0) {
            mpfr_set(hi.get(), mid.get(), MPFR_RNDU);
        } else if (sign < 0) {
            mpfr_set(lo.get(), mid.get(), MPFR_RNDD);
        } else {
            mpfr_sub(width.get(), hi.get(), lo.get(), MPFR_RNDU);
            if (mpfr_cmp_d(width.get(), tol) <= 0) break;
            throw UndecidedSign("sign of the balance function undecidable before tolerance");
        }
    }
    return Enclosure::from_endpoints(std::move(lo), std::move(hi));
}

} // namespace sigma
