#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stakeopt/families.hpp"
#include "stakeopt/tail.hpp"

namespace stakeopt {

enum class SearchMethod { exhaustive_families, local_search, averages_only };
std::string_view to_string(SearchMethod m);

struct SearchReport {
    StrategyValue best;                 // canonical representative of the maximum
    std::vector<Stakes> all_maximizers; // deduplicated; fewest stakes first, then lex-largest
    SearchMethod method;
    int n_cap;
    std::optional<std::string> certificate;  // set when an average attains the maximum
};

struct ExhaustiveOptions {
    int cap = kEnumerateCap;
    bool allow_large = false;
};

// Exact maximum of P(S >= t) over every stake vector with at most n entries.
// The tail value depends on the stakes only through their threshold family,
// so scoring each realizable family is exhaustive over the whole class.
// Requires p <= t.
SearchReport optimize_exhaustive(const Params& params, int n, const ExhaustiveOptions& = {});

struct LocalSearchOptions {
    long denominator_cap = 60;  // stake entries are multiples of 1/denominator_cap
    int restarts = 20;          // random restarts beyond the deterministic average starts
    std::uint64_t seed = 0;
};

// Seeded hill climb over the integer simplex of stake vectors with bounded
// denominator: unit transfers between coordinates, exact evaluation via
// tail_dp, starts at every k-average plus random restarts. Yields a lower
// bound on the restricted maximum. Requires p <= t.
SearchReport optimize_local(const Params& params, int n, const LocalSearchOptions& = {});

struct ConjectureVerdict {
    bool confirmed = false;  // some average attains the searched-class maximum
    long optimal_k = 0;      // smallest such k when confirmed
    bool bold = false;       // optimal_k == floor(1/t)
    Rational value;          // the maximum over the searched class
    std::optional<Stakes> counterexample;  // set when refuted within the class
    int n_cap = 0;
    SearchReport report;
};

// Runs the exhaustive search at n_max and checks whether an average attains
// the maximum. Values are maxima over stake vectors with at most n_max
// entries, not the global supremum.
ConjectureVerdict csoka_check(const Params& params, int n_max, const ExhaustiveOptions& = {});

}  // namespace stakeopt
