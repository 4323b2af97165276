#include <doctest.h>

#include <random>

#include "sigma/enclosure.hpp"
#include "test_util.hpp"

using namespace sigma;

TEST_CASE("exact constructors give zero-width enclosures") {
    Enclosure e = Enclosure::exact(7, 128);
    CHECK(mpfr_cmp(e.lo(), e.hi()) == 0);
    CHECK(e.contains(7.0));
    CHECK(e.is_positive());
    Enclosure z = Enclosure::exact(0, 128);
    CHECK(!z.is_positive());
}

TEST_CASE("decimal parsing rounds outward") {
    // 0.1 is not a binary float; the enclosure must straddle it.
    Enclosure e = Enclosure::from_decimal("0.1", 128);
    CHECK(mpfr_cmp(e.lo(), e.hi()) < 0);
    CHECK(e.lo_d() <= 0.1);
    CHECK(e.hi_d() >= 0.1);
    CHECK(e.width_d() < 1e-35);

    CHECK_THROWS_AS(Enclosure::from_decimal("not-a-number", 128), InvalidArgument);
}

TEST_CASE("arithmetic contains the exact result") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
        double a = dist(rng), b = dist(rng);
        Enclosure ea = Enclosure::from_doubles(a, a, 128);
        Enclosure eb = Enclosure::from_doubles(b, b, 128);
        // Doubles are exact binary values, so these identities are exact
        // reals; every op enclosure must contain them up to its own width.
        CHECK((ea + eb).lo_d() <= a + b);
        CHECK((ea + eb).hi_d() >= a + b);
        CHECK((ea * eb).lo_d() <= a * b * (1 + 1e-15));
        CHECK((ea * eb).hi_d() >= a * b * (1 - 1e-15));
        CHECK((ea / eb).lo_d() <= a / b * (1 + 1e-15));
        CHECK((ea / eb).hi_d() >= a / b * (1 - 1e-15));
    }
}

TEST_CASE("interval multiplication handles mixed signs") {
    Enclosure a = Enclosure::from_doubles(-2.0, 3.0, 128);
    Enclosure b = Enclosure::from_doubles(-5.0, 1.0, 128);
    Enclosure p = a * b;
    CHECK(p.lo_d() == -15.0); // 3 * -5
    CHECK(p.hi_d() == 10.0);  // -2 * -5
}

TEST_CASE("division by a zero-straddling enclosure is rejected") {
    Enclosure num = Enclosure::exact(1, 128);
    Enclosure den = Enclosure::from_doubles(-1.0, 1.0, 128);
    CHECK_THROWS_AS(num / den, IndeterminateDivision);
}

TEST_CASE("compare is a certified order") {
    Enclosure a = Enclosure::from_doubles(1.0, 2.0, 128);
    Enclosure b = Enclosure::from_doubles(3.0, 4.0, 128);
    Enclosure c = Enclosure::from_doubles(1.5, 3.5, 128);
    CHECK(compare(a, b) == CertOrder::Less);
    CHECK(compare(b, a) == CertOrder::Greater);
    CHECK(compare(a, c) == CertOrder::Overlapping);
    CHECK(compare(c, b) == CertOrder::Overlapping);
}

TEST_CASE("ui_pow encloses a known power") {
    // 3^{-1.8877909} = 0.12568829563876... (high-precision reference)
    Enclosure r = Enclosure::from_decimal("1.8877909", 128);
    Enclosure v = ui_pow(3, neg(r));
    CHECK(contains_d(v, 0.1256882956387607));
    CHECK(v.width_d() < 1e-20);
}

TEST_CASE("higher precision nests inside lower precision") {
    Enclosure r64 = Enclosure::from_decimal("2.34567", 64);
    Enclosure r256 = Enclosure::from_decimal("2.34567", 256);
    Enclosure v64 = ui_pow(7, neg(r64));
    Enclosure v256 = ui_pow(7, neg(r256));
    CHECK(v64.contains(v256));
    CHECK(v256.width_d() < v64.width_d());
}

TEST_CASE("exp and log are inverse up to enclosure width") {
    Enclosure x = Enclosure::from_decimal("1.75", 128);
    Enclosure back = exp_enc(log_enc(x));
    CHECK(back.contains(1.75));
    CHECK(back.width_d() < 1e-30);
    CHECK_THROWS_AS(log_enc(Enclosure::from_doubles(-1.0, 1.0, 128)), InvalidArgument);
}

TEST_CASE("endpoint strings are outward 25-digit decimals") {
    Enclosure third = Enclosure::exact(1, 128) / Enclosure::exact(3, 128);
    std::string lo = third.lo_str(), hi = third.hi_str();
    CHECK(lo.substr(0, 10) == "3.33333333");
    // Re-parsing the printed endpoints must re-enclose the original.
    Enclosure rt = Enclosure::from_decimal(lo, 128);
    CHECK(mpfr_cmp(rt.lo(), third.lo()) <= 0);
    Enclosure rt2 = Enclosure::from_decimal(hi, 128);
    CHECK(mpfr_cmp(rt2.hi(), third.hi()) >= 0);
}

TEST_CASE("precision validation") {
    CHECK_THROWS_AS(Precision(32, 1000), InvalidArgument);
    CHECK_THROWS_AS(Precision(128, 5), InvalidArgument);
    Precision p(128, 100000);
    Precision q = p.refined();
    CHECK(q.bits == 192);
    CHECK(q.trunc == 200000);
    Precision capped(128, 10000000);
    CHECK(capped.refined().trunc == 10000000);
}
