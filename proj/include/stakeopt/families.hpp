#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stakeopt/stakes.hpp"

namespace stakeopt {

inline constexpr int kGroundCap = 24;
inline constexpr int kRealizableGroundCap = 12;
inline constexpr int kEnumerateCap = 5;

// A family of subsets of {1..n}, each subset encoded as an n-bit mask with
// bit i-1 standing for element i. Members are kept sorted and unique.
struct SubsetFamily {
    int ground_size = 0;
    std::vector<std::uint32_t> members;

    static SubsetFamily from_masks(int n, std::vector<std::uint32_t> masks);
    static SubsetFamily from_index_sets(int n, const std::vector<std::vector<int>>& sets);

    bool contains(std::uint32_t mask) const;
    std::vector<std::vector<int>> to_index_sets() const;  // 1-based, sorted

    bool is_up_set() const;  // superset-closed
    // Members with no proper subset in the family / non-members with no
    // proper superset outside the family (the latter assumes an up-set).
    std::vector<std::uint32_t> minimal_members() const;
    std::vector<std::uint32_t> maximal_non_members() const;

    friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;
};

// All sets containing `element` / all sets of size > n/2 — the two
// intersecting-family weight maximizers.
SubsetFamily star_family(int n, int element = 1);
SubsetFamily majority_family(int n);

// F = { V : sum of stakes over V >= t } on ground {1..ground_size}; missing
// coordinates count as stake 0 (ground_size defaults to the stake count).
SubsetFamily threshold_family(const Stakes& stakes, const Rational& t, int ground_size = 0);

// Sum of p^|V| (1-p)^(n-|V|) over members.
Rational family_weight(const SubsetFamily& family, const Rational& p);

// True iff every two members share an element (a family containing the empty
// set is never intersecting).
bool is_intersecting(const SubsetFamily& family);

// Maximum number of pairwise disjoint members; the empty set counts as
// disjoint from everything.
int matching_number(const SubsetFamily& family);

// Maximum weight over ALL intersecting families on {1..n}, by exhaustive
// search over maximal intersecting families (adding a set only adds weight,
// and a maximal intersecting family picks exactly one of each complementary
// pair {V, V^c}).
Rational max_intersecting_weight(int n, const Rational& p);

struct FishburnResult {
    SubsetFamily family;
    Rational weight;
    std::optional<SubsetFamily> tied_family;  // set when p = 1/2 makes both candidates optimal
};

// The intersecting family maximizing weight: the star for p <= 1/2, the
// majority family for p >= 1/2 with n odd. Refuses p > 1/2 with even n.
FishburnResult fishburn_max(int n, const Rational& p);

struct RealizabilityWitness {
    std::optional<Stakes> stakes;
    Rational margin;  // best achievable gap t - max(non-member sum); 0 when absent
};

// Decides whether an up-set is a threshold family at threshold t for some
// canonical stake vector, by maximizing the violation margin with an exact
// rational LP. Strictly positive optimal margin <=> realizable.
RealizabilityWitness realizable(const SubsetFamily& family, const Rational& t,
                                int ground_cap = kRealizableGroundCap);

struct EnumerateOptions {
    int cap = kEnumerateCap;
    bool allow_large = false;     // permit n beyond the cap (slow)
    bool canonical_only = false;  // deduplicate up to ground-set permutation
};

// Every realizable threshold family on {1..n} at threshold t, with a witness
// each. Enumerates candidate up-sets closed under the sorted-stakes
// domination order, then filters through the realizability LP.
std::vector<std::pair<SubsetFamily, RealizabilityWitness>> enumerate_threshold_families(
    int n, const Rational& t, const EnumerateOptions& options = {});

// Intervals [b, b+a) in Z/nZ.
struct IntervalFamily {
    int modulus = 0;
    std::vector<std::pair<int, int>> intervals;  // (start, length)
};

std::uint32_t interval_mask(int n, int start, int length);

// Checks |union of k distinct length-a intervals| >= k + a - 1; requires the
// union to be a proper subset of Z/nZ and all lengths equal.
bool verify_interval_union(const IntervalFamily& family);

// With F a family of k distinct length-k intervals (given by starts) and G a
// family of length-a intervals cross-intersecting with F, checks |G| <= a.
bool verify_cross_intersecting(int n, int k, int a, const std::vector<int>& g_starts,
                               const std::vector<int>& f_starts);
// Same bound quantified over every possible F.
bool verify_cross_intersecting(int n, int k, int a, const std::vector<int>& g_starts);

// Counting/weighted measure instance of the intersection bound
// mu(V_1 cap ... cap V_k) >= k*t - (k-1)*mu(ground).
bool verify_measure_intersection(const std::vector<Rational>& element_measures,
                                 const std::vector<std::uint32_t>& subsets, const Rational& t);

// Exhaustive scans used by the acceptance suite; each returns the number of
// violations found (zero means the inequality held everywhere).
long scan_interval_union(int n_max, int max_intervals = 3);
long scan_cross_intersecting(int n_max);

}  // namespace stakeopt
