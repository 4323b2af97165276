#ifndef SIGMA_ENCLOSURE_HPP
#define SIGMA_ENCLOSURE_HPP

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "sigma/errors.hpp"

namespace sigma {

/// Working precision for certified computations: endpoint precision in bits
/// plus the truncation bound B used for infinite sums and products.
struct Precision {
    mpfr_prec_t bits = 128;
    long trunc = 100000;

    Precision() = default;
    Precision(mpfr_prec_t b, long t) : bits(b), trunc(t) { validate(); }

    void validate() const {
        if (bits < 53) throw InvalidArgument("precision must be at least 53 bits");
        if (trunc < 10) throw InvalidArgument("truncation bound must be at least 10");
    }

    /// One refinement step: double the truncation bound (capped at 1e7) and
    /// grow the endpoint precision.
    Precision refined() const {
        Precision p(bits + 64, trunc >= 10000000 ? trunc : std::min(2 * trunc, 10000000L));
        return p;
    }
};

enum class CertOrder { Less, Greater, Overlapping };

/// RAII wrapper for a single mpfr value.
class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

/// A certified real interval [lo, hi] with outward rounding. Every arithmetic
/// operation returns an enclosure that contains the exact result.
class Enclosure {
public:
    /// [0, 0] at the given precision.
    explicit Enclosure(mpfr_prec_t prec = 128) : lo_(prec), hi_(prec) {}

    static Enclosure exact(long v, mpfr_prec_t prec = 128);
    static Enclosure exact_ui(unsigned long v, mpfr_prec_t prec = 128);
    /// Outward parse of a decimal string: lo rounded down, hi rounded up.
    static Enclosure from_decimal(const std::string& s, mpfr_prec_t prec = 128);
    static Enclosure from_endpoints(Real lo, Real hi);
    /// [lo_d, hi_d] from doubles, taken as exact binary endpoints.
    static Enclosure from_doubles(double lo, double hi, mpfr_prec_t prec = 128);

    mpfr_srcptr lo() const { return lo_.get(); }
    mpfr_srcptr hi() const { return hi_.get(); }
    mpfr_prec_t prec() const { return lo_.prec(); }

    double lo_d() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
    double width_d() const;
    double mid_d() const { return 0.5 * (lo_d() + hi_d()); }

    bool contains(double x) const {
        return mpfr_cmp_d(lo_.get(), x) <= 0 && mpfr_cmp_d(hi_.get(), x) >= 0;
    }
    bool contains(const Enclosure& inner) const {
        return mpfr_cmp(lo_.get(), inner.lo()) <= 0 && mpfr_cmp(hi_.get(), inner.hi()) >= 0;
    }
    bool overlaps(const Enclosure& o) const {
        return mpfr_cmp(hi_.get(), o.lo()) >= 0 && mpfr_cmp(o.hi(), lo_.get()) >= 0;
    }
    bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }

    /// Decimal endpoint strings rounded outward to 25 significant digits
    /// (the JSON wire form).
    std::string lo_str() const;
    std::string hi_str() const;

    /// Exact hex dump of both endpoints; used as a deterministic cache key.
    std::string key() const;

    friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator/(const Enclosure& a, const Enclosure& b);

private:
    Real lo_, hi_;
    void check_valid() const;
};

Enclosure neg(const Enclosure& a);
/// n^x for integer n >= 1 (monotone in x).
Enclosure ui_pow(unsigned long n, const Enclosure& exponent);
/// base^exponent for base.lo > 0, via exp(exponent * log(base)).
Enclosure pow_enc(const Enclosure& base, const Enclosure& exponent);
Enclosure exp_enc(const Enclosure& a);
Enclosure log_enc(const Enclosure& a);

/// Less iff a.hi < b.lo, Greater iff a.lo > b.hi, Overlapping otherwise.
CertOrder compare(const Enclosure& a, const Enclosure& b);

} // namespace sigma

#endif
