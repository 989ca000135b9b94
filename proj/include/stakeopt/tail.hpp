#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "stakeopt/stakes.hpp"

namespace stakeopt {

enum class TailMethod { enumeration, convolution, monte_carlo };
std::string_view to_string(TailMethod m);

// P(S >= t) for S the weighted Bernoulli sum of a stake vector. Exact
// methods carry no standard error; Monte Carlo always does.
struct TailResult {
    Rational value;
    TailMethod method;
    std::optional<double> stderr_estimate;
};

inline constexpr int kEnumCap = 24;
inline constexpr std::size_t kSupportCap = std::size_t{1} << 22;

// Exact tail by subset enumeration (with sum-based pruning). The threshold
// comparison is the closed inequality sum >= t throughout.
TailResult tail_enum(const Stakes& stakes, const Params& params, int cap = kEnumCap);

// Exact tail by successive convolution of the distribution of the weighted
// sum; support points equal as rationals are merged.
TailResult tail_dp(const Stakes& stakes, const Params& params,
                   std::size_t support_cap = kSupportCap);

// Seeded unbiased frequency estimate; per-sample threshold comparison is
// exact integer arithmetic over a common denominator.
TailResult tail_mc(const Stakes& stakes, const Params& params, std::uint64_t samples,
                   std::uint64_t seed);

// Exact P(Bin(trials, p) >= at_least).
Rational binomial_tail(long trials, const Rational& p, long at_least);

enum class StrategyKind { bold, average, general };

struct StrategyValue {
    StrategyKind kind;
    long bets = 0;                 // k for bold / average
    std::optional<Stakes> stakes;  // populated for general
    Rational value;
};

// Bold play: 1/k on k = floor(1/t) bets; value 1 - (1-p)^k. Requires t > 0.
StrategyValue bold_play(const Params& params);

// Average play: 1/k on k bets; value P(Bin(k,p) >= k*t).
StrategyValue average_play(long k, const Params& params);

}  // namespace stakeopt
