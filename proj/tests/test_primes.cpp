#include <doctest.h>

#include "sigma/context.hpp"
#include "sigma/primes.hpp"

using namespace sigma;

TEST_CASE("sieve produces the prime sequence") {
    PrimeTable t = PrimeTable::sieve(100);
    CHECK(t.primes().size() == 25);
    CHECK(t.nth_prime(1) == 2);
    CHECK(t.nth_prime(4) == 7);
    CHECK(t.nth_prime(25) == 97);
    CHECK(t.prime_count(100) == 25);
    CHECK(t.prime_count(1.5) == 0);
    CHECK(t.is_prime(89));
    CHECK(!t.is_prime(91)); // 7 * 13
    CHECK(t.index_of(2) == 1);
    CHECK(t.index_of(97) == 25);
}

TEST_CASE("out-of-range queries fail loudly") {
    PrimeTable t = PrimeTable::sieve(100);
    CHECK_THROWS_AS(t.nth_prime(26), NeedsLargerSieve);
    CHECK_THROWS_AS(t.nth_prime(0), InvalidArgument);
    CHECK_THROWS_AS(t.index_of(6), InvalidArgument);
    try {
        t.nth_prime(100);
        FAIL("expected NeedsLargerSieve");
    } catch (const NeedsLargerSieve& e) {
        CHECK(e.required_bound >= 541); // p_100 = 541
    }
}

TEST_CASE("growth preserves and extends the table") {
    PrimeTable t = PrimeTable::sieve(30);
    PrimeTable g = t.grown(1000);
    CHECK(g.bound() >= 1000);
    CHECK(g.nth_prime(1) == 2);
    CHECK(g.prime_count(1000) == 168);
    // Already-large tables pass through.
    CHECK(g.grown(500).bound() == g.bound());
}

TEST_CASE("context grows its table on demand") {
    Context ctx;
    ctx.ensure_index(100000);
    CHECK(ctx.table.primes().size() >= 100000);
    CHECK(ctx.table.nth_prime(100000) == 1299709);
    ctx.ensure_bound(2000000);
    CHECK(ctx.table.bound() >= 2000000);
}

TEST_CASE("pi(x) agrees with known milestones") {
    PrimeTable t = PrimeTable::sieve(1000000);
    CHECK(t.prime_count(1000) == 168);
    CHECK(t.prime_count(10000) == 1229);
    CHECK(t.prime_count(100000) == 9592);
    CHECK(t.prime_count(1000000) == 78498);
}
