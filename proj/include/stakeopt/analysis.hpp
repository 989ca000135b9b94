#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "stakeopt/tail.hpp"

namespace stakeopt {

// Bounds on the maximal tail probability along the diagonal t = p. The lower
// bound is exact (bold play); the two upper bounds involve sqrt(3) and a
// fixed constant, so they live in extended-precision floating point and are
// compared with explicit tolerances only.
struct HypotenuseBounds {
    Rational p;
    Rational lower;
    long double upper_pz;
    long double upper_feige;
    long double upper;  // min of the two
};

// 1 - (2*sqrt(3) - 3) / max(3, 1/(p(1-p)) - 3), for 0 < p < 1.
long double pz_upper(const Rational& p);
// 0.8202 + 0.1798 p, for 0 <= p <= 1.
long double feige_upper(const Rational& p);
// 1 - (1-p)^k with k = floor(1/p) (so 1/(k+1) < p <= 1/k), for 0 < p <= 1.
Rational bold_lower_hyp(const Rational& p);

HypotenuseBounds hypotenuse_bounds(const Rational& p);
std::vector<HypotenuseBounds> bounds_table(int resolution);  // p = i/res, 0 < i < res

enum class RegionStatus { bold_optimal, bold_not_optimal, unknown, sup_is_one };

// Which settled result the classifier applied. Names describe the regime:
//   below_diagonal          t < p: the supremum is 1 (no strategy attains it)
//   threshold_half          p <= t = 1/2
//   high_threshold          p <= 1/2 < t
//   favorable_block         k/(k+1) < p <= (k+1)/(k+2) < t
//   favorable_diagonal      p = t = (k+1)/(k+2), k >= 2
//   triple_average_diagonal p = t = 2/3: the 3-average beats bold play
//   favorable_block_edge    p = (2k+1)/(2k+3), t = (k+1)/(k+2), k >= 2
//   unfavorable_block       p < 1/(2k+1), t > 1/(k+1)
//   reciprocal_third        t = 1/3, p = 1/b for an integer b >= 3
//   majority_average        1/2 < p <= t <= 2/3: an odd average beats bold play
enum class RegionRule {
    none,
    below_diagonal,
    threshold_half,
    high_threshold,
    favorable_block,
    favorable_diagonal,
    triple_average_diagonal,
    favorable_block_edge,
    unfavorable_block,
    reciprocal_third,
    majority_average,
};

std::string_view to_string(RegionStatus s);
std::string_view to_string(RegionRule r);

struct RegionVerdict {
    RegionStatus status;
    RegionRule rule = RegionRule::none;
    long k = 0;                           // block index where the rule carries one
    std::optional<StrategyValue> witness; // for bold_not_optimal: the better average
};

// Applies the settled results in a fixed order and reports the first match;
// points covered by no result classify as unknown (boundary segments between
// regimes are deliberately left unknown rather than interpolated).
RegionVerdict classify(const Params& params);

// Exact hypothesis predicates, exposed for the grid consistency checks.
bool threshold_half_applies(const Params& params);          // p <= t = 1/2
bool high_threshold_applies(const Params& params);          // p <= 1/2 < t
std::optional<long> favorable_block_k(const Params& params);    // k/(k+1) < p <= (k+1)/(k+2) < t
std::optional<long> unfavorable_block_k(const Params& params);  // p < 1/(2k+1), 1/(k+1) < t

// The settled bold-play region as a union of axis-aligned rectangles with
// lower-right vertices (k/(k+1), k/(k+1)) and (1/(2k+1), 1/(k+1)):
//   - the k = 1 corner block {p <= 1/2, t >= 1/2} is closed;
//   - blocks with corner v = k/(k+1), k >= 2 are open along t = v, except
//     that the corner point itself is included for k >= 3 (at (2/3, 2/3) the
//     3-average strictly beats bold play, so that corner is excluded);
//   - the unfavorable rectangles {p < 1/(2k+1), t > 1/(k+1)} are open.
// Isolated settled points off these rectangles (favorable_block_edge,
// reciprocal_third) are not part of the union.
bool settled_rectangle_covers(const Params& params);

struct GridPoint {
    Rational p, t;
    RegionVerdict verdict;
};

// classify() on {i/res} x {j/res} restricted to p <= t, ordered by (p, t).
std::vector<GridPoint> region_grid(int resolution);

// The only candidate bet counts for the best average at threshold t:
// floor(n/t) for n = 1..n_max, deduplicated, ascending.
std::vector<long> candidate_ks(const Rational& t, long n_max);

struct BestAverage {
    StrategyValue best;            // smallest maximizing k
    std::vector<long> maximizers;  // every k attaining the maximum
};

// Maximizes average_play over candidate_ks(t, n_max); exact comparisons.
BestAverage best_average(const Params& params, long n_max);

// P(Bin(k*a, p) >= k) for k = 1..k_max.
std::vector<Rational> pepys_sequence(long a, const Rational& p, long k_max);

// Verifies the sequence above is strictly decreasing; requires 0 < p <= 1/a
// (the regime where the monotone decrease is established).
bool chaundy_bullard_check(long a, long k_max, const Rational& p);

}  // namespace stakeopt
