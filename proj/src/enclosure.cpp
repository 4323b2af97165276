#include "sigma/enclosure.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace sigma {

void Enclosure::check_valid() const {
    if (!mpfr_number_p(lo_.get()) || !mpfr_number_p(hi_.get()))
        throw InvalidArgument("enclosure endpoints must be finite");
    if (mpfr_cmp(lo_.get(), hi_.get()) > 0)
        throw InternalError("enclosure with lo > hi");
}

Enclosure Enclosure::exact(long v, mpfr_prec_t prec) {
    Enclosure e(prec);
    mpfr_set_si(e.lo_.get(), v, MPFR_RNDD);
    mpfr_set_si(e.hi_.get(), v, MPFR_RNDU);
    return e;
}

Enclosure Enclosure::exact_ui(unsigned long v, mpfr_prec_t prec) {
    Enclosure e(prec);
    mpfr_set_ui(e.lo_.get(), v, MPFR_RNDD);
    mpfr_set_ui(e.hi_.get(), v, MPFR_RNDU);
    return e;
}

Enclosure Enclosure::from_decimal(const std::string& s, mpfr_prec_t prec) {
    Enclosure e(prec);
    // mpfr_set_str returns 0 only when the whole string parses.
    if (mpfr_set_str(e.lo_.get(), s.c_str(), 10, MPFR_RNDD) != 0 ||
        !mpfr_number_p(e.lo_.get()))
        throw InvalidArgument("cannot parse decimal: " + s);
    if (mpfr_set_str(e.hi_.get(), s.c_str(), 10, MPFR_RNDU) != 0 ||
        !mpfr_number_p(e.hi_.get()))
        throw InvalidArgument("cannot parse decimal: " + s);
    e.check_valid();
    return e;
}

Enclosure Enclosure::from_endpoints(Real lo, Real hi) {
    Enclosure e(std::max(lo.prec(), hi.prec()));
    e.lo_ = std::move(lo);
    e.hi_ = std::move(hi);
    e.check_valid();
    return e;
}

Enclosure Enclosure::from_doubles(double lo, double hi, mpfr_prec_t prec) {
    Enclosure e(prec);
    mpfr_set_d(e.lo_.get(), lo, MPFR_RNDD);
    mpfr_set_d(e.hi_.get(), hi, MPFR_RNDU);
    e.check_valid();
    return e;
}

double Enclosure::width_d() const {
    Real w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return mpfr_get_d(w.get(), MPFR_RNDU);
}

namespace {

std::string format_endpoint(mpfr_srcptr v, mpfr_rnd_t rnd) {
    char buf[64];
    // 25 significant digits: 1 leading + 24 after the point in sci notation.
    const char* fmt = (rnd == MPFR_RNDD) ? "%.24RDe" : "%.24RUe";
    mpfr_snprintf(buf, sizeof(buf), fmt, v);
    return std::string(buf);
}

} // namespace

std::string Enclosure::lo_str() const { return format_endpoint(lo_.get(), MPFR_RNDD); }
std::string Enclosure::hi_str() const { return format_endpoint(hi_.get(), MPFR_RNDU); }

std::string Enclosure::key() const {
    char buf[160];
    mpfr_snprintf(buf, sizeof(buf), "%Ra|%Ra", lo_.get(), hi_.get());
    return std::string(buf);
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    Enclosure r(std::max(a.prec(), b.prec()));
    mpfr_add(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    Enclosure r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.lo_.get(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi(), b.lo(), MPFR_RNDU);
    return r;
}

namespace {

// min/max over the four endpoint candidates, each rounded toward the
// endpoint it may become.
template <typename Op>
void endpoint_scan(mpfr_ptr lo, mpfr_ptr hi, const Enclosure& a, const Enclosure& b, Op op) {
    mpfr_srcptr xs[2] = {a.lo(), a.hi()};
    mpfr_srcptr ys[2] = {b.lo(), b.hi()};
    Real cand(std::max(a.prec(), b.prec()));
    bool first = true;
    for (auto* x : xs)
        for (auto* y : ys) {
            op(cand.get(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(cand.get(), lo) < 0) mpfr_set(lo, cand.get(), MPFR_RNDD);
            op(cand.get(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(cand.get(), hi) > 0) mpfr_set(hi, cand.get(), MPFR_RNDU);
            first = false;
        }
}

} // namespace

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    Enclosure r(std::max(a.prec(), b.prec()));
    endpoint_scan(
        const_cast<mpfr_ptr>(r.lo()), const_cast<mpfr_ptr>(r.hi()), a, b,
        [](mpfr_ptr d, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_mul(d, x, y, rnd); });
    return r;
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (mpfr_sgn(b.lo()) <= 0 && mpfr_sgn(b.hi()) >= 0)
        throw IndeterminateDivision("division by enclosure containing 0");
    Enclosure r(std::max(a.prec(), b.prec()));
    endpoint_scan(
        const_cast<mpfr_ptr>(r.lo()), const_cast<mpfr_ptr>(r.hi()), a, b,
        [](mpfr_ptr d, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_div(d, x, y, rnd); });
    return r;
}

Enclosure neg(const Enclosure& a) {
    Real lo(a.prec()), hi(a.prec());
    mpfr_neg(lo.get(), a.hi(), MPFR_RNDD);
    mpfr_neg(hi.get(), a.lo(), MPFR_RNDU);
    return Enclosure::from_endpoints(std::move(lo), std::move(hi));
}

Enclosure ui_pow(unsigned long n, const Enclosure& exponent) {
    if (n == 0) throw InvalidArgument("ui_pow requires n >= 1");
    Real lo(exponent.prec()), hi(exponent.prec());
    // n^x is non-decreasing in x for n >= 1.
    mpfr_ui_pow(lo.get(), n, exponent.lo(), MPFR_RNDD);
    mpfr_ui_pow(hi.get(), n, exponent.hi(), MPFR_RNDU);
    return Enclosure::from_endpoints(std::move(lo), std::move(hi));
}

Enclosure exp_enc(const Enclosure& a) {
    Real lo(a.prec()), hi(a.prec());
    mpfr_exp(lo.get(), a.lo(), MPFR_RNDD);
    mpfr_exp(hi.get(), a.hi(), MPFR_RNDU);
    return Enclosure::from_endpoints(std::move(lo), std::move(hi));
}

Enclosure log_enc(const Enclosure& a) {
    if (!a.is_positive()) throw InvalidArgument("log of non-positive enclosure");
    Real lo(a.prec()), hi(a.prec());
    mpfr_log(lo.get(), a.lo(), MPFR_RNDD);
    mpfr_log(hi.get(), a.hi(), MPFR_RNDU);
    return Enclosure::from_endpoints(std::move(lo), std::move(hi));
}

Enclosure pow_enc(const Enclosure& base, const Enclosure& exponent) {
    if (!base.is_positive()) throw InvalidArgument("pow_enc requires a positive base");
    return exp_enc(exponent * log_enc(base));
}

CertOrder compare(const Enclosure& a, const Enclosure& b) {
    if (mpfr_cmp(a.hi(), b.lo()) < 0) return CertOrder::Less;
    if (mpfr_cmp(a.lo(), b.hi()) > 0) return CertOrder::Greater;
    return CertOrder::Overlapping;
}

} // namespace sigma
