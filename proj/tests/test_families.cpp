#include <random>
#include <set>

#include "doctest.h"
#include "stakeopt/errors.hpp"
#include "stakeopt/families.hpp"
#include "stakeopt/tail.hpp"
#include "test_helpers.hpp"

using namespace stakeopt;
using testutil::random_stakes;
using testutil::random_unit_rational;

namespace {

Rational rat(const char* s) { return Rational::parse(s); }

SubsetFamily fam(int n, const std::vector<std::vector<int>>& sets) {
    return SubsetFamily::from_index_sets(n, sets);
}

}  // namespace

TEST_CASE("threshold_family on the worked examples") {
    CHECK(threshold_family(Stakes::parse("1,0"), rat("0.6")) == fam(1, {{1}}));
    CHECK(threshold_family(Stakes::parse("1/2,1/4,1/4"), rat("1/2")) ==
          fam(3, {{1}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}));
    // Pairs reach 2/3 >= 0.6 but singletons sit at 1/3.
    CHECK(threshold_family(Stakes::parse("1/3,1/3,1/3"), rat("0.6")) ==
          fam(3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}));
    // Padding zeros onto the ground set keeps the stake sums unchanged.
    CHECK(threshold_family(Stakes::parse("1"), rat("0.6"), 3) == star_family(3));
    CHECK_THROWS_AS(threshold_family(Stakes::average(2), rat("1/2"), 25), cap_error);
}

TEST_CASE("threshold families are up-sets and obey the weight identity") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        Stakes s = random_stakes(gen, 10, 32);
        Rational t = random_unit_rational(gen, 32);
        Rational p = random_unit_rational(gen, 32);
        SubsetFamily f = threshold_family(s, t);
        CHECK(f.is_up_set());
        CHECK(family_weight(f, p) == tail_enum(s, Params(p, t)).value);
    }
}

TEST_CASE("family_weight basics") {
    std::vector<std::uint32_t> all;
    for (std::uint32_t m = 0; m < 8; ++m) all.push_back(m);
    CHECK(family_weight(SubsetFamily::from_masks(3, all), rat("2/7")) == Rational(1));
    CHECK(family_weight(star_family(3), rat("1/3")) == Rational(1, 3));
    CHECK(family_weight(fam(3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}), rat("3/5")) ==
          Rational(81, 125));
}

TEST_CASE("is_intersecting") {
    CHECK(is_intersecting(star_family(5)));
    CHECK_FALSE(is_intersecting(fam(2, {{1}, {2}})));
    CHECK_FALSE(is_intersecting(fam(2, {{}})));  // the empty set blocks itself
    std::mt19937_64 gen(32);
    for (int trial = 0; trial < 25; ++trial) {
        Stakes s = random_stakes(gen, 8, 32);
        CHECK(is_intersecting(threshold_family(s, rat("51/100"))));
    }
}

TEST_CASE("matching_number") {
    CHECK(matching_number(SubsetFamily::from_masks(4, {})) == 0);
    CHECK(matching_number(fam(3, {{1}, {2}, {3}})) == 3);
    CHECK(matching_number(threshold_family(Stakes::parse("2/5,3/10,3/10"), rat("3/10"))) == 3);
    CHECK(matching_number(star_family(6)) == 1);
    // The empty set is disjoint from everything, itself included.
    CHECK(matching_number(fam(2, {{}, {1}, {2}})) == 3);
}

TEST_CASE("matching number bounded by floor(1/t)") {
    std::mt19937_64 gen(33);
    for (int trial = 0; trial < 30; ++trial) {
        Stakes s = random_stakes(gen, 9, 24);
        Rational t = random_unit_rational(gen, 24);
        if (t.sign() == 0) continue;
        long bound = (Rational(1) / t).floor().convert_to<long>();
        CHECK(matching_number(threshold_family(s, t)) <= bound);
    }
    // At t <= 1/2 non-intersecting threshold families exist.
    CHECK(matching_number(threshold_family(Stakes::parse("1/2,1/2"), rat("1/2"))) == 2);
    CHECK_FALSE(is_intersecting(threshold_family(Stakes::parse("1/2,1/2"), rat("1/2"))));
}

TEST_CASE("fishburn_max picks the star or the majority family") {
    FishburnResult low = fishburn_max(4, rat("2/5"));
    CHECK(low.family == star_family(4));
    CHECK(low.weight == Rational(2, 5));
    CHECK_FALSE(low.tied_family);

    FishburnResult high = fishburn_max(3, rat("3/5"));
    CHECK(high.family == majority_family(3));
    CHECK(high.weight == Rational(81, 125));
    CHECK(high.weight > family_weight(star_family(3), rat("3/5")));

    CHECK(fishburn_max(1, rat("9/10")).family == fam(1, {{1}}));
    CHECK(fishburn_max(1, rat("1/10")).family == fam(1, {{1}}));

    FishburnResult tie = fishburn_max(5, rat("1/2"));
    REQUIRE(tie.tied_family);
    CHECK(tie.family == star_family(5));
    CHECK(*tie.tied_family == majority_family(5));
    CHECK(family_weight(*tie.tied_family, rat("1/2")) == tie.weight);
    CHECK(tie.weight == Rational(1, 2));

    CHECK_THROWS_AS(fishburn_max(4, rat("3/5")), regime_error);
}

TEST_CASE("max_intersecting_weight agrees with the theorem") {
    for (int n = 1; n <= 4; ++n)
        for (const char* p : {"1/10", "3/10", "1/2"})
            CHECK(max_intersecting_weight(n, rat(p)) == family_weight(star_family(n), rat(p)));
    for (int n : {3, 5})
        for (const char* p : {"3/5", "3/4", "9/10"})
            CHECK(max_intersecting_weight(n, rat(p)) == family_weight(majority_family(n), rat(p)));
}

TEST_CASE("realizable finds witnesses that round-trip") {
    RealizabilityWitness star = realizable(star_family(3), rat("0.6"));
    REQUIRE(star.stakes);
    CHECK(*star.stakes == Stakes::parse("1"));
    CHECK(star.margin > 0);

    RealizabilityWitness pairs = realizable(fam(3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}), rat("0.6"));
    REQUIRE(pairs.stakes);
    CHECK(*pairs.stakes == Stakes::average(3));

    // Up-set missing {2,3}: realizable only with a spread between c1 and c3.
    SubsetFamily asym = fam(3, {{1, 2}, {1, 3}, {1, 2, 3}});
    RealizabilityWitness w = realizable(asym, rat("0.6"));
    REQUIRE(w.stakes);
    CHECK(threshold_family(*w.stakes, rat("0.6"), 3) == asym);

    // Two disjoint singletons cannot both reach t > 1/2.
    CHECK_FALSE(realizable(fam(2, {{1}, {2}, {1, 2}}), rat("2/3")).stakes);
    // A star at element 2 contradicts the sorted canonical form.
    CHECK_FALSE(realizable(fam(2, {{2}, {1, 2}}), rat("2/3")).stakes);

    CHECK_THROWS_AS(realizable(fam(3, {{1}}), rat("1/2")), std::invalid_argument);
    CHECK_THROWS_AS(realizable(star_family(13), rat("1/2")), cap_error);
}

TEST_CASE("enumerate_threshold_families at n = 1 and n = 2") {
    auto one = enumerate_threshold_families(1, rat("1/2"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].first == fam(1, {{1}}));
    CHECK(*one[0].second.stakes == Stakes::parse("1"));

    auto two = enumerate_threshold_families(2, rat("2/3"));
    REQUIRE(two.size() == 2);
    for (const auto& [family, witness] : two)
        CHECK(threshold_family(*witness.stakes, rat("2/3"), 2) == family);
    // Sorted by member count: the pair-only family, then the star.
    CHECK(two[0].first == fam(2, {{1, 2}}));
    CHECK(*two[0].second.stakes == Stakes::parse("1/2,1/2"));
    CHECK(two[1].first == fam(2, {{1}, {1, 2}}));
    CHECK(*two[1].second.stakes == Stakes::parse("1"));

    CHECK_THROWS_AS(enumerate_threshold_families(6, rat("1/2")), cap_error);
}

namespace {

// Oracle 1: all up-sets on {1..n} by brute force over every family, filtered
// through the realizability LP.
std::set<std::vector<std::uint32_t>> upset_oracle(int n, const Rational& t) {
    std::set<std::vector<std::uint32_t>> out;
    std::uint32_t subsets = 1u << n;
    for (std::uint64_t pick = 0; pick < (1ull << subsets); ++pick) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t m = 0; m < subsets; ++m)
            if (pick & (1ull << m)) members.push_back(m);
        SubsetFamily f = SubsetFamily::from_masks(n, members);
        if (!f.is_up_set()) continue;
        if (realizable(f, t).stakes) out.insert(f.members);
    }
    return out;
}

// Oracle 2: distinct threshold families generated by gridding stake vectors
// with denominators up to max_denom.
std::set<std::vector<std::uint32_t>> grid_oracle(int n, const Rational& t, long max_denom) {
    std::set<std::vector<std::uint32_t>> out;
    std::vector<long> units(static_cast<std::size_t>(n), 0);
    for (long d = 1; d <= max_denom; ++d) {
        auto rec = [&](auto&& self, int i, long remaining, long cap) -> void {
            if (i == n - 1) {
                if (remaining > cap) return;
                units[static_cast<std::size_t>(i)] = remaining;
                std::vector<Rational> coeffs;
                for (long u : units)
                    if (u > 0) coeffs.emplace_back(u, d);
                if (coeffs.empty()) return;
                out.insert(threshold_family(Stakes(std::move(coeffs)), t, n).members);
                return;
            }
            for (long u = std::min(cap, remaining); u * (n - i) >= remaining && u >= 0; --u) {
                units[static_cast<std::size_t>(i)] = u;
                self(self, i + 1, remaining - u, u);
            }
        };
        rec(rec, 0, d, d);
    }
    return out;
}

}  // namespace

TEST_CASE("enumeration matches the plain up-set oracle at n = 3") {
    for (const char* t : {"1/2", "3/5", "1/3"}) {
        auto expected = upset_oracle(3, rat(t));
        auto got = enumerate_threshold_families(3, rat(t));
        std::set<std::vector<std::uint32_t>> got_set;
        for (const auto& [family, witness] : got) {
            got_set.insert(family.members);
            CHECK(threshold_family(*witness.stakes, rat(t), 3) == family);
            CHECK(witness.margin > 0);
        }
        CHECK(got_set == expected);
    }
}

TEST_CASE("enumeration matches the plain up-set oracle at n = 4") {
    auto expected = upset_oracle(4, rat("1/2"));
    auto got = enumerate_threshold_families(4, rat("1/2"));
    std::set<std::vector<std::uint32_t>> got_set;
    for (const auto& [family, witness] : got) got_set.insert(family.members);
    CHECK(got_set == expected);
}

TEST_CASE("enumeration matches the stake-grid oracle at n = 3, t = 1/2") {
    auto grid = grid_oracle(3, rat("1/2"), 60);
    auto got = enumerate_threshold_families(3, rat("1/2"));
    std::set<std::vector<std::uint32_t>> got_set;
    for (const auto& [family, witness] : got) got_set.insert(family.members);
    CHECK(got_set == grid);
    CHECK(got.size() == 4);
    CHECK(got_set.count(star_family(3).members) == 1);
    CHECK(got_set.count(fam(3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}).members) == 1);
}

TEST_CASE("canonical_only deduplicates permutation twins") {
    EnumerateOptions opts;
    opts.canonical_only = true;
    auto plain = enumerate_threshold_families(3, rat("1/2"));
    auto dedup = enumerate_threshold_families(3, rat("1/2"), opts);
    CHECK(dedup.size() <= plain.size());
    CHECK(!dedup.empty());
}

TEST_CASE("every enumerated family round-trips through its witness") {
    std::mt19937_64 gen(34);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 2 + static_cast<int>(gen() % 3);
        Rational t = random_unit_rational(gen, 12);
        if (t.sign() == 0) continue;
        for (const auto& [family, witness] : enumerate_threshold_families(n, t)) {
            REQUIRE(witness.stakes);
            CHECK(threshold_family(*witness.stakes, t, n) == family);
        }
    }
}

TEST_CASE("interval union bound") {
    CHECK(verify_interval_union(IntervalFamily{10, {{0, 3}, {5, 3}}}));
    CHECK(verify_interval_union(IntervalFamily{10, {{4, 3}}}));
    CHECK_THROWS_AS(verify_interval_union(IntervalFamily{4, {{0, 2}, {2, 2}}}), regime_error);
    CHECK_THROWS_AS(verify_interval_union(IntervalFamily{10, {{0, 3}, {5, 4}}}),
                    std::invalid_argument);
    CHECK(scan_interval_union(7) == 0);
}

TEST_CASE("cross-intersecting bound") {
    // n=7, k=2: any G of length-3 intervals meeting both intervals of F.
    CHECK(verify_cross_intersecting(7, 2, 3, {0, 1, 6}, {0, 1}));
    CHECK(verify_cross_intersecting(7, 2, 3, {}, {0, 3}));  // empty G
    CHECK_THROWS_AS(verify_cross_intersecting(7, 2, 3, {4}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_cross_intersecting(7, 2, 3, {0}, {0}), std::invalid_argument);
    CHECK(verify_cross_intersecting(7, 2, 3, {0, 1, 2, 3}));  // quantified over every F
    CHECK(scan_cross_intersecting(7) == 0);
}

TEST_CASE("interval masks wrap around") {
    CHECK(interval_mask(5, 3, 3) == 0b11001u);  // {3,4,0}
    CHECK(interval_mask(5, 0, 2) == 0b00011u);
    CHECK_THROWS_AS(interval_mask(5, 0, 5), std::invalid_argument);
}

TEST_CASE("measure intersection bound") {
    // Two subsets of size 8 in a 10-point space intersect in >= 6 points.
    std::vector<Rational> ones(10, Rational(1));
    CHECK(verify_measure_intersection(ones, {0b0011111111u, 0b1111111100u}, Rational(8)));
    CHECK(verify_measure_intersection(ones, {0b0011111111u}, Rational(8)));  // k = 1
    CHECK_THROWS_AS(verify_measure_intersection(ones, {0b1u}, Rational(8)),
                    std::invalid_argument);

    std::mt19937_64 gen(35);
    for (int trial = 0; trial < 2000; ++trial) {
        int ground = 4 + static_cast<int>(gen() % 13);
        std::vector<Rational> weights(static_cast<std::size_t>(ground), Rational(1));
        int k = 1 + static_cast<int>(gen() % 4);
        std::vector<std::uint32_t> subsets;
        long min_size = ground;
        for (int i = 0; i < k; ++i) {
            std::uint32_t v = static_cast<std::uint32_t>(gen()) & ((1u << ground) - 1);
            subsets.push_back(v);
            min_size = std::min<long>(min_size, std::popcount(v));
        }
        CHECK(verify_measure_intersection(weights, subsets, Rational(min_size)));
    }
}

TEST_CASE("weighted measure instance") {
    std::vector<Rational> w{rat("1/2"), rat("1/4"), rat("1/8"), rat("1/8")};
    // Both subsets measure >= 5/8; intersection {1} measures 1/2 >= 2*(5/8) - 1.
    CHECK(verify_measure_intersection(w, {0b0011u, 0b1101u}, rat("5/8")));
}
