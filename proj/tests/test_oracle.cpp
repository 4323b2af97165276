#include <doctest.h>

#include <sstream>

#include "sigma/mighty.hpp"
#include "sigma/oracle.hpp"

using namespace sigma;

TEST_CASE("sampler basics") {
    auto one = oracle::sample_values(2.0, 1);
    REQUIRE(one.values.size() == 1);
    CHECK(one.values[0].first == 1);
    CHECK(one.values[0].second == 1.0);

    // Formal r = 1: sigma_{-1}(6) = 2 exactly (perfect number).
    auto s = oracle::sample_values(1.0, 10);
    double v6 = 0.0;
    for (const auto& [n, v] : s.values)
        if (n == 6) v6 = v;
    CHECK(v6 == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS(oracle::sample_values(-1.0, 10));
    CHECK_THROWS(oracle::sample_values(2.0, 0));
}

TEST_CASE("sample is sorted with the right range") {
    auto s = oracle::sample_values(2.0, 20000);
    CHECK(s.values.front().second == 1.0);
    CHECK(s.values.front().first == 1);
    for (std::size_t i = 1; i < s.values.size(); ++i)
        CHECK(s.values[i - 1].second <= s.values[i].second);
    // Max tends toward zeta(2) from below.
    CHECK(s.values.back().second < 1.6449340668482264);
    CHECK(s.values.back().second > 1.55);
}

TEST_CASE("empirical gaps show the certified structure at r = 2") {
    auto s = oracle::sample_values(2.0, 100000);
    auto gaps = oracle::empirical_gaps(s, 1e-3);
    // The gap below 1 + 2^{-2} = 1.25 (certified gap (u_1, 1.25)).
    bool found_125 = false;
    // The gap below 1 + 3^{-2} = 1.1111 (certified gap (u_2, 10/9)).
    bool found_109 = false;
    for (const auto& [lo, hi] : gaps) {
        if (lo < 1.2337005502 && hi == 1.25) found_125 = true;
        if (lo < 1.0966227113 && hi > 1.111 && hi < 1.1112) found_109 = true;
    }
    CHECK(found_125);
    CHECK(found_109);

    auto none = oracle::empirical_gaps(oracle::sample_values(2.0, 1), 1e-3);
    CHECK(none.empty());
    CHECK_THROWS(oracle::empirical_gaps(s, 0.0));
}

TEST_CASE("doubling the sample never removes a structural gap") {
    auto s1 = oracle::sample_values(2.0, 50000);
    auto s2 = oracle::sample_values(2.0, 100000);
    auto g1 = oracle::empirical_gaps(s1, 1e-2);
    auto g2 = oracle::empirical_gaps(s2, 1e-2);
    for (const auto& [lo1, hi1] : g1) {
        bool survives = false;
        for (const auto& [lo2, hi2] : g2)
            if (lo2 >= lo1 - 1e-9 && hi2 <= hi1 + 1e-9 && hi2 > lo2) survives = true;
        CHECK(survives);
    }
}

TEST_CASE("brute mightiness on known cases") {
    CHECK(oracle::brute_mighty(1, 2.0, 1000000));  // 2 is 2-mighty
    CHECK(oracle::brute_mighty(2, 2.0, 1000000));  // 3 is 2-mighty
    CHECK(!oracle::brute_mighty(3, 2.0, 1000000)); // 5 is not
    // At r = 3 the brute check confirms that 7 (index 4) is mighty:
    // 1 + 7^{-3} = 1.00292 > u_4 = 1.00181.
    CHECK(oracle::brute_mighty(4, 3.0, 1000000));
    CHECK(!oracle::brute_mighty(5, 3.0, 1000000)); // 11 is not
    CHECK_THROWS(oracle::brute_mighty(0, 2.0, 100));
    CHECK_THROWS(oracle::brute_mighty(50, 2.0, 100));
}

TEST_CASE("brute and certified verdicts never contradict") {
    Context ctx;
    Precision prec;
    for (const char* rs : {"1.5", "2", "2.3", "3", "3.5"}) {
        Enclosure r = Enclosure::from_decimal(rs, prec.bits);
        double rd = r.mid_d();
        for (std::size_t m = 1; m <= 25; ++m) { // primes up to 97
            auto v = is_mighty(ctx, ctx.table.nth_prime(m), r, prec);
            if (v.verdict == Mightiness::Undecided) continue;
            bool brute = oracle::brute_mighty(m, rd, 1000000);
            CHECK((v.verdict == Mightiness::Mighty) == brute);
        }
    }
}

TEST_CASE("csv export") {
    auto s = oracle::sample_values(2.0, 3);
    std::ostringstream out;
    oracle::write_csv(s, out);
    std::string text = out.str();
    CHECK(text.substr(0, 8) == "n,sigma\n");
    CHECK(text.find("1,1\n") != std::string::npos);
    // 1 + 1/4 = 1.25
    CHECK(text.find("2,1.25\n") != std::string::npos);
}
