#include "stakeopt/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "stakeopt/errors.hpp"

namespace stakeopt {

long double pz_upper(const Rational& p) {
    if (p.sign() <= 0 || p >= 1) throw regime_error("pz_upper needs 0 < p < 1");
    long double pf = p.to_long_double();
    long double denom = std::max(3.0L, 1.0L / (pf * (1.0L - pf)) - 3.0L);
    return 1.0L - (2.0L * std::sqrt(3.0L) - 3.0L) / denom;
}

long double feige_upper(const Rational& p) {
    if (p.sign() < 0 || p > 1) throw std::invalid_argument("feige_upper needs 0 <= p <= 1");
    return 0.8202L + 0.1798L * p.to_long_double();
}

Rational bold_lower_hyp(const Rational& p) {
    if (p.sign() <= 0 || p > 1) throw regime_error("bold_lower_hyp needs 0 < p <= 1");
    long k = (Rational(1) / p).floor().convert_to<long>();
    return Rational(1) - (Rational(1) - p).pow(k);
}

HypotenuseBounds hypotenuse_bounds(const Rational& p) {
    HypotenuseBounds b;
    b.p = p;
    b.lower = bold_lower_hyp(p);
    b.upper_pz = pz_upper(p);
    b.upper_feige = feige_upper(p);
    b.upper = std::min(b.upper_pz, b.upper_feige);
    return b;
}

std::vector<HypotenuseBounds> bounds_table(int resolution) {
    if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
    std::vector<HypotenuseBounds> rows;
    rows.reserve(static_cast<std::size_t>(resolution) - 1);
    for (int i = 1; i < resolution; ++i) rows.push_back(hypotenuse_bounds(Rational(i, resolution)));
    return rows;
}

std::string_view to_string(RegionStatus s) {
    switch (s) {
        case RegionStatus::bold_optimal: return "bold_optimal";
        case RegionStatus::bold_not_optimal: return "bold_not_optimal";
        case RegionStatus::unknown: return "unknown";
        case RegionStatus::sup_is_one: return "sup_is_one";
    }
    return "?";
}

std::string_view to_string(RegionRule r) {
    switch (r) {
        case RegionRule::none: return "";
        case RegionRule::below_diagonal: return "below_diagonal";
        case RegionRule::threshold_half: return "threshold_half";
        case RegionRule::high_threshold: return "high_threshold";
        case RegionRule::favorable_block: return "favorable_block";
        case RegionRule::favorable_diagonal: return "favorable_diagonal";
        case RegionRule::triple_average_diagonal: return "triple_average_diagonal";
        case RegionRule::favorable_block_edge: return "favorable_block_edge";
        case RegionRule::unfavorable_block: return "unfavorable_block";
        case RegionRule::reciprocal_third: return "reciprocal_third";
        case RegionRule::majority_average: return "majority_average";
    }
    return "?";
}

bool threshold_half_applies(const Params& params) {
    return params.t == Rational(1, 2) && params.p <= params.t;
}

bool high_threshold_applies(const Params& params) {
    return params.p <= Rational(1, 2) && params.t > Rational(1, 2);
}

std::optional<long> favorable_block_k(const Params& params) {
    // The intervals (k/(k+1), (k+1)/(k+2)] tile (1/2, 1), so at most one k
    // fits; the loop bound ceil(1/(1-p)) + 1 covers it.
    if (params.p <= Rational(1, 2) || params.p >= 1) return std::nullopt;
    long limit = ((Rational(1) / (Rational(1) - params.p)).ceil() + 1).convert_to<long>();
    for (long k = 1; k <= limit; ++k) {
        if (Rational(k, k + 1) < params.p && params.p <= Rational(k + 1, k + 2) &&
            Rational(k + 1, k + 2) < params.t)
            return k;
    }
    return std::nullopt;
}

std::optional<long> unfavorable_block_k(const Params& params) {
    if (params.t.sign() <= 0) return std::nullopt;
    long limit = ((Rational(1) / params.t).ceil() + 1).convert_to<long>();
    for (long k = 1; k <= limit; ++k) {
        if (params.p < Rational(1, 2 * k + 1) && Rational(1, k + 1) < params.t) return k;
    }
    return std::nullopt;
}

namespace {

// If r equals (k+1)/(k+2) for an integer k >= 1, returns k.
std::optional<long> diagonal_index(const Rational& r) {
    if (r < Rational(2, 3) || r >= 1) return std::nullopt;
    Rational k = (Rational(2) * r - Rational(1)) / (Rational(1) - r);
    if (!k.is_integer()) return std::nullopt;
    long kk = k.num().convert_to<long>();
    return kk >= 1 ? std::optional<long>(kk) : std::nullopt;
}

StrategyValue majority_witness(const Params& params) {
    // Largest k with t <= (k+1)/(2k+1); the (2k+1)-average then counts
    // majorities and strictly beats the single bold bet.
    Rational num = Rational(1) - params.t;
    Rational den = Rational(2) * params.t - Rational(1);
    long k = (num / den).floor().convert_to<long>();
    return average_play(2 * k + 1, params);
}

}  // namespace

RegionVerdict classify(const Params& params) {
    const Rational& p = params.p;
    const Rational& t = params.t;
    const Rational half(1, 2), two_thirds(2, 3);

    if (t < p) return {RegionStatus::sup_is_one, RegionRule::below_diagonal, 0, std::nullopt};
    if (threshold_half_applies(params))
        return {RegionStatus::bold_optimal, RegionRule::threshold_half, 1, std::nullopt};
    if (high_threshold_applies(params))
        return {RegionStatus::bold_optimal, RegionRule::high_threshold, 1, std::nullopt};
    if (auto k = favorable_block_k(params))
        return {RegionStatus::bold_optimal, RegionRule::favorable_block, *k, std::nullopt};
    if (p == t) {
        if (auto k = diagonal_index(p)) {
            if (*k == 1)
                return {RegionStatus::bold_not_optimal, RegionRule::triple_average_diagonal, 1,
                        average_play(3, params)};
            return {RegionStatus::bold_optimal, RegionRule::favorable_diagonal, *k, std::nullopt};
        }
    }
    if (auto k = diagonal_index(t)) {
        if (*k >= 2 && p == Rational(2 * *k + 1, 2 * *k + 3))
            return {RegionStatus::bold_optimal, RegionRule::favorable_block_edge, *k, std::nullopt};
    }
    if (auto k = unfavorable_block_k(params))
        return {RegionStatus::bold_optimal, RegionRule::unfavorable_block, *k, std::nullopt};
    if (t == Rational(1, 3) && p.num() == 1 && p.den() >= 3)
        return {RegionStatus::bold_optimal, RegionRule::reciprocal_third,
                p.den().convert_to<long>(), std::nullopt};
    if (half < p && p <= t && t <= two_thirds)
        return {RegionStatus::bold_not_optimal, RegionRule::majority_average, 0,
                majority_witness(params)};
    return {RegionStatus::unknown, RegionRule::none, 0, std::nullopt};
}

bool settled_rectangle_covers(const Params& params) {
    const Rational& p = params.p;
    const Rational& t = params.t;
    const Rational half(1, 2);

    if (p <= half && t >= half) return true;
    if (p < 1) {
        // Smallest k with p <= k/(k+1), i.e. k >= p/(1-p).
        Rational ratio = p / (Rational(1) - p);
        long k1 = std::max<long>(1, ratio.ceil().convert_to<long>());
        if (t > Rational(k1, k1 + 1)) return true;
        if (p == t && ratio.is_integer()) {
            long k = ratio.num().convert_to<long>();
            if (k >= 3) return true;  // closed corner (k/(k+1), k/(k+1))
        }
    }
    if (t.sign() > 0) {
        // Smallest k with 1/(k+1) < t is floor(1/t); larger k only shrink
        // the admissible p-range.
        long k2 = (Rational(1) / t).floor().convert_to<long>();
        if (p < Rational(1, 2 * k2 + 1)) return true;
    }
    return false;
}

std::vector<GridPoint> region_grid(int resolution) {
    if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
    std::vector<GridPoint> out;
    for (int i = 0; i <= resolution; ++i) {
        for (int j = i; j <= resolution; ++j) {
            Params params(Rational(i, resolution), Rational(j, resolution));
            out.push_back({params.p, params.t, classify(params)});
        }
    }
    return out;
}

std::vector<long> candidate_ks(const Rational& t, long n_max) {
    if (t.sign() <= 0 || t > 1) throw regime_error("candidate bet counts need 0 < t <= 1");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    std::vector<long> ks;
    for (long n = 1; n <= n_max; ++n) {
        long k = (Rational(n) / t).floor().convert_to<long>();
        if (ks.empty() || ks.back() != k) ks.push_back(k);
    }
    return ks;
}

BestAverage best_average(const Params& params, long n_max) {
    params.require_p_at_most_t();
    if (params.t.sign() == 0) throw regime_error("best average needs t > 0");
    BestAverage out;
    bool first = true;
    for (long k : candidate_ks(params.t, n_max)) {
        StrategyValue v = average_play(k, params);
        if (first || v.value > out.best.value) {
            out.best = v;
            out.maximizers.assign(1, k);
            first = false;
        } else if (v.value == out.best.value) {
            out.maximizers.push_back(k);
        }
    }
    return out;
}

std::vector<Rational> pepys_sequence(long a, const Rational& p, long k_max) {
    if (a < 2) throw std::invalid_argument("needs a >= 2");
    if (k_max < 1) throw std::invalid_argument("needs k_max >= 1");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k_max));
    for (long k = 1; k <= k_max; ++k) out.push_back(binomial_tail(k * a, p, k));
    return out;
}

bool chaundy_bullard_check(long a, long k_max, const Rational& p) {
    if (a < 2) throw std::invalid_argument("needs a >= 2");
    if (p.sign() <= 0 || p > Rational(1, a))
        throw regime_error("monotone decrease is only established for 0 < p <= 1/a");
    std::vector<Rational> seq = pepys_sequence(a, p, k_max);
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (!(seq[i] < seq[i - 1])) return false;
    return true;
}

}  // namespace stakeopt
