#include <random>

#include "doctest.h"
#include "stakeopt/errors.hpp"
#include "stakeopt/tail.hpp"
#include "test_helpers.hpp"

using namespace stakeopt;
using testutil::brute_force_tail;
using testutil::random_stakes;
using testutil::random_unit_rational;

namespace {

Rational rat(const char* s) { return Rational::parse(s); }

// Test-local binomial tail via factorials; independent of the library's
// incremental coefficient recursion.
Rational binom_tail_oracle(long n, const Rational& p, long m) {
    auto factorial = [](long v) {
        BigInt f = 1;
        for (long i = 2; i <= v; ++i) f *= i;
        return f;
    };
    Rational total = 0;
    for (long j = std::max<long>(m, 0); j <= n; ++j) {
        BigInt c = factorial(n) / (factorial(j) * factorial(n - j));
        total += Rational(c) * p.pow(j) * (Rational(1) - p).pow(n - j);
    }
    return total;
}

}  // namespace

TEST_CASE("tail_enum matches the worked examples") {
    CHECK(tail_enum(Stakes::parse("1"), Params(rat("0.37"), rat("0.8"))).value == Rational(37, 100));
    // All eight outcomes of (1/2,1/4,1/4): qualifying sets {1},{1,2},{1,3},{2,3},{1,2,3}.
    Params p(rat("1/3"), rat("1/2"));
    Stakes s = Stakes::parse("1/2,1/4,1/4");
    CHECK(brute_force_tail(s, p) == Rational(11, 27));
    CHECK(tail_enum(s, p).value == Rational(11, 27));
    CHECK(tail_enum(Stakes::parse("1/3,1/3,1/3"), Params(rat("2/3"), rat("2/3"))).value ==
          Rational(20, 27));
    CHECK(tail_enum(s, p).method == TailMethod::enumeration);
    CHECK(!tail_enum(s, p).stderr_estimate);
}

TEST_CASE("tail_enum refuses oversized instances") {
    std::vector<Rational> c(30, Rational(1, 30));
    CHECK_THROWS_AS(tail_enum(Stakes(c), Params(rat("1/2"), rat("1/2"))), cap_error);
    // Raising the cap lets the call through (t = 0 keeps the walk trivial).
    CHECK(tail_enum(Stakes(c), Params(rat("1/2"), rat("0")), 30).value == Rational(1));
}

TEST_CASE("tail_dp matches the worked examples") {
    CHECK(tail_dp(Stakes::parse("1/2,1/2"), Params(rat("2/5"), rat("1/2"))).value == Rational(16, 25));
    CHECK(tail_dp(Stakes::parse("1/2,1/4,1/4"), Params(rat("1/3"), rat("1/2"))).value ==
          Rational(11, 27));
    CHECK(tail_dp(Stakes::average(5), Params(rat("1/2"), rat("3/5"))).value == Rational(1, 2));
    CHECK_THROWS_AS(tail_dp(Stakes::parse("1/2,1/4,1/8,1/8"), Params(rat("1/2"), rat("1/2")), 3),
                    cap_error);
}

TEST_CASE("enumeration, convolution and the brute-force oracle agree") {
    std::mt19937_64 gen(2024);
    for (int trial = 0; trial < 60; ++trial) {
        Stakes s = random_stakes(gen, 10, 64);
        Params params(random_unit_rational(gen, 64), random_unit_rational(gen, 64));
        Rational expected = brute_force_tail(s, params);
        CHECK(tail_enum(s, params).value == expected);
        CHECK(tail_dp(s, params).value == expected);
    }
    // Larger widths: the two exact engines against each other.
    for (int trial = 0; trial < 12; ++trial) {
        Stakes s = random_stakes(gen, 16, 64);
        Params params(random_unit_rational(gen, 64), random_unit_rational(gen, 64));
        CHECK(tail_enum(s, params).value == tail_dp(s, params).value);
    }
    // And across a (p, t) grid on a fixed vector.
    Stakes fixed = random_stakes(gen, 16, 64);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
            Params params(Rational(i, 6), Rational(j, 6));
            CHECK(tail_enum(fixed, params).value == tail_dp(fixed, params).value);
        }
}

TEST_CASE("tail is monotone in p and antitone in t") {
    Stakes s = Stakes::parse("1/2,1/4,1/4");
    for (int j = 0; j <= 8; ++j) {
        Rational t(j, 8);
        Rational prev = -1;
        for (int i = 0; i <= 8; ++i) {
            Rational v = tail_enum(s, Params(Rational(i, 8), t)).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
    for (int i = 0; i <= 8; ++i) {
        Rational p(i, 8);
        Rational prev = 2;
        for (int j = 0; j <= 8; ++j) {
            Rational v = tail_enum(s, Params(p, Rational(j, 8))).value;
            CHECK(v <= prev);
            prev = v;
        }
    }
}

TEST_CASE("coefficient order does not matter") {
    Params params(rat("2/5"), rat("1/2"));
    Stakes a = Stakes::parse("1/2,1/4,1/8,1/8");
    Stakes b = Stakes::parse("1/8,1/4,1/8,1/2");
    CHECK(a == b);  // canonical form sorts
    CHECK(tail_enum(a, params).value == tail_enum(b, params).value);
}

TEST_CASE("boundary values") {
    Stakes s = Stakes::parse("3/5,1/5,1/5");
    CHECK(tail_enum(s, Params(rat("1/3"), rat("0"))).value == Rational(1));
    CHECK(tail_enum(s, Params(rat("0"), rat("1/2"))).value == Rational(0));
    // t = 1 forces every nonzero coordinate to succeed: p^m.
    CHECK(tail_enum(s, Params(rat("2/7"), rat("1"))).value == Rational(8, 343));
    CHECK(tail_enum(Stakes::parse("1"), Params(rat("2/7"), rat("1"))).value == Rational(2, 7));
}

TEST_CASE("monte carlo is seeded, exact on sure events, and carries stderr") {
    TailResult one = tail_mc(Stakes::parse("1/2,1/2"), Params(rat("1"), rat("1")), 1000, 3);
    CHECK(one.value == Rational(1));
    REQUIRE(one.stderr_estimate);
    CHECK(*one.stderr_estimate == 0.0);

    TailResult a = tail_mc(Stakes::parse("1"), Params(rat("1/2"), rat("1")), 100000, 1);
    TailResult b = tail_mc(Stakes::parse("1"), Params(rat("1/2"), rat("1")), 100000, 1);
    CHECK(a.value == b.value);  // same seed, same estimate
    double err = std::abs(a.value.to_double() - 0.5);
    CHECK(err <= 5.0 * *a.stderr_estimate);

    CHECK_THROWS_AS(tail_mc(Stakes::parse("1"), Params(rat("1/2"), rat("1")), 0, 1),
                    std::invalid_argument);
}

TEST_CASE("monte carlo battery stays within five standard errors") {
    struct Case {
        const char* stakes;
        const char* p;
        const char* t;
    };
    const Case cases[] = {
        {"1/2,1/4,1/4", "1/3", "1/2"}, {"1/3,1/3,1/3", "2/3", "2/3"}, {"1/2,1/2", "2/5", "1/2"},
        {"2/5,1/5,1/5,1/5", "1/4", "3/5"}, {"1", "1/7", "1/2"},
    };
    int ok = 0, total = 0;
    for (const Case& c : cases) {
        Stakes s = Stakes::parse(c.stakes);
        Params params(rat(c.p), rat(c.t));
        double exact = tail_enum(s, params).value.to_double();
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            TailResult r = tail_mc(s, params, 4000, seed);
            ++total;
            double se = std::max(*r.stderr_estimate, 1e-12);
            if (std::abs(r.value.to_double() - exact) <= 5.0 * se) ++ok;
        }
    }
    CHECK(ok >= total * 99 / 100);
}

TEST_CASE("monte carlo approaches the exact value") {
    Stakes s = Stakes::parse("1/2,1/4,1/4");
    Params params(rat("1/3"), rat("1/2"));
    TailResult r = tail_mc(s, params, 1000000, 42);
    CHECK(std::abs(r.value.to_double() - Rational(11, 27).to_double()) <=
          5.0 * *r.stderr_estimate);
}

TEST_CASE("bold play") {
    StrategyValue b = bold_play(Params(rat("1/2"), rat("1/2")));
    CHECK(b.kind == StrategyKind::bold);
    CHECK(b.bets == 2);
    CHECK(b.value == Rational(3, 4));

    CHECK(bold_play(Params(rat("3/10"), rat("9/20"))).value == Rational(51, 100));
    CHECK(bold_play(Params(rat("3/10"), rat("9/20"))).bets == 2);

    StrategyValue thirds = bold_play(Params(rat("1/6"), rat("1/3")));
    CHECK(thirds.bets == 3);
    CHECK(thirds.value == Rational(91, 216));
    CHECK(thirds.value == tail_enum(Stakes::average(3), Params(rat("1/6"), rat("1/3"))).value);

    CHECK_THROWS_AS(bold_play(Params(rat("1/2"), rat("0"))), regime_error);
}

TEST_CASE("average play") {
    CHECK(average_play(3, Params(rat("2/3"), rat("2/3"))).value == Rational(20, 27));
    for (const char* t : {"1/4", "1/2", "1"})
        CHECK(average_play(1, Params(rat("3/7"), rat(t))).value == Rational(3, 7));

    // Five-way average at (11/20, 3/5): frozen from the factorial oracle.
    Rational expected = binom_tail_oracle(5, rat("11/20"), 3);
    CHECK(expected == Rational(949003, 1600000));
    StrategyValue avg = average_play(5, Params(rat("11/20"), rat("3/5")));
    CHECK(avg.value == expected);
    CHECK(avg.value == tail_enum(Stakes::average(5), Params(rat("11/20"), rat("3/5"))).value);
    CHECK_THROWS_AS(average_play(0, Params(rat("1/2"), rat("1/2"))), std::invalid_argument);
}

TEST_CASE("average play equals enumeration on equal stakes") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 30; ++trial) {
        long k = 1 + static_cast<long>(gen() % 8);
        Params params(random_unit_rational(gen, 24), random_unit_rational(gen, 24));
        CHECK(average_play(k, params).value == tail_enum(Stakes::average(k), params).value);
    }
}

TEST_CASE("bold play equals the floor(1/t)-average") {
    std::mt19937_64 gen(6);
    for (int trial = 0; trial < 50; ++trial) {
        Rational t = random_unit_rational(gen, 40);
        if (t.sign() == 0) continue;
        Params params(random_unit_rational(gen, 40), t);
        long k = (Rational(1) / t).floor().convert_to<long>();
        CHECK(bold_play(params).value == average_play(k, params).value);
    }
}

TEST_CASE("binomial tail basics") {
    CHECK(binomial_tail(5, rat("1/2"), 3) == Rational(1, 2));
    CHECK(binomial_tail(4, rat("1/3"), 0) == Rational(1));
    CHECK(binomial_tail(4, rat("1/3"), 5) == Rational(0));
    CHECK(binomial_tail(6, rat("1/6"), 1) == Rational(31031, 46656));
    std::mt19937_64 gen(8);
    for (int trial = 0; trial < 20; ++trial) {
        long n = 1 + static_cast<long>(gen() % 9);
        long m = static_cast<long>(gen() % (n + 2));
        Rational p = random_unit_rational(gen, 30);
        CHECK(binomial_tail(n, p, m) == binom_tail_oracle(n, p, m));
    }
}

TEST_CASE("stakes validation") {
    CHECK_THROWS_AS(Stakes::parse("1/2,1/4"), std::invalid_argument);   // sums to 3/4
    CHECK_THROWS_AS(Stakes::parse("1/2,1/2,1/2"), std::invalid_argument);
    CHECK(Stakes::normalized({Rational(1), Rational(1)}) == Stakes::parse("1/2,1/2"));
    CHECK(Stakes::parse("1/2,0,1/2").size() == 2);  // zeros stripped
    CHECK(Stakes::parse("1").to_string() == "1");
    CHECK_THROWS_AS(Params(rat("3/2"), rat("1/2")), std::invalid_argument);
    CHECK_THROWS_AS(Params(rat("1/2"), rat("-1/2")), std::invalid_argument);
}
