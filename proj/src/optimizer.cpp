#include "stakeopt/optimizer.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "stakeopt/errors.hpp"

namespace stakeopt {

namespace {

// Fewest nonzero stakes first, then lexicographically largest coefficients.
bool representative_before(const Stakes& a, const Stakes& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (long i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

StrategyValue make_best(const Stakes& rep, const Rational& value) {
    if (rep.is_average()) return {StrategyKind::average, rep.size(), std::nullopt, value};
    return {StrategyKind::general, 0, rep, value};
}

// The threshold family of the k-average on ground n: sets holding at least
// ceil(k*t) of the first k elements.
SubsetFamily average_family(long k, int n, const Rational& t) {
    long need = (Rational(k) * t).ceil().convert_to<long>();
    std::uint32_t low = k >= 32 ? ~0u : ((1u << k) - 1);
    std::vector<std::uint32_t> members;
    std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (std::popcount(m & low) >= need) members.push_back(m);
        if (m == full) break;
    }
    return SubsetFamily::from_masks(n, std::move(members));
}

}  // namespace

std::string_view to_string(SearchMethod m) {
    switch (m) {
        case SearchMethod::exhaustive_families: return "exhaustive_families";
        case SearchMethod::local_search: return "local_search";
        case SearchMethod::averages_only: return "averages_only";
    }
    return "?";
}

SearchReport optimize_exhaustive(const Params& params, int n, const ExhaustiveOptions& options) {
    params.require_p_at_most_t();
    EnumerateOptions enum_options;
    enum_options.cap = options.cap;
    enum_options.allow_large = options.allow_large;
    auto families = enumerate_threshold_families(n, params.t, enum_options);

    Rational best_weight = 0;
    bool first = true;
    std::vector<std::size_t> argmax;
    std::vector<Rational> weights(families.size());
    for (std::size_t i = 0; i < families.size(); ++i) {
        weights[i] = family_weight(families[i].first, params.p);
        if (first || weights[i] > best_weight) {
            best_weight = weights[i];
            argmax.assign(1, i);
            first = false;
        } else if (weights[i] == best_weight) {
            argmax.push_back(i);
        }
    }

    SearchReport report;
    report.method = SearchMethod::exhaustive_families;
    report.n_cap = n;

    std::vector<Stakes> maximizers;
    std::optional<long> average_k;
    for (std::size_t i : argmax) {
        maximizers.push_back(*families[i].second.stakes);
        // Prefer the average representative when the family is an average's.
        for (long k = 1; k <= n; ++k) {
            if (families[i].first == average_family(k, n, params.t)) {
                maximizers.push_back(Stakes::average(k));
                if (!average_k || k < *average_k) average_k = k;
                break;
            }
        }
    }
    std::sort(maximizers.begin(), maximizers.end(), representative_before);
    maximizers.erase(std::unique(maximizers.begin(), maximizers.end()), maximizers.end());
    if (maximizers.empty())
        throw std::logic_error("threshold-family enumeration produced no candidates");

    report.all_maximizers = std::move(maximizers);
    report.best = make_best(report.all_maximizers.front(), best_weight);
    if (average_k)
        report.certificate = "maximum over the <=" + std::to_string(n) +
                             "-stake class is attained by the " + std::to_string(*average_k) +
                             "-average";
    return report;
}

SearchReport optimize_local(const Params& params, int n, const LocalSearchOptions& options) {
    params.require_p_at_most_t();
    if (n < 1) throw std::invalid_argument("need n >= 1");
    const long d = options.denominator_cap;
    if (d < 1) throw std::invalid_argument("denominator cap must be >= 1");

    std::map<std::vector<long>, Rational> cache;
    auto evaluate = [&](const std::vector<long>& units) -> const Rational& {
        auto it = cache.find(units);
        if (it != cache.end()) return it->second;
        std::vector<Rational> coeffs;
        for (long u : units)
            if (u > 0) coeffs.emplace_back(u, d);
        Rational v = tail_dp(Stakes(std::move(coeffs)), params).value;
        return cache.emplace(units, std::move(v)).first->second;
    };
    auto canon = [](std::vector<long> units) {
        std::sort(units.begin(), units.end(), std::greater<>());
        return units;
    };

    Rational best_value;
    std::vector<Stakes> best_stakes;
    bool have_best = false;
    auto record = [&](const std::vector<long>& units, const Rational& value) {
        std::vector<Rational> coeffs;
        for (long u : units)
            if (u > 0) coeffs.emplace_back(u, d);
        Stakes s{std::move(coeffs)};
        if (!have_best || value > best_value) {
            best_value = value;
            best_stakes.assign(1, std::move(s));
            have_best = true;
        } else if (value == best_value &&
                   std::find(best_stakes.begin(), best_stakes.end(), s) == best_stakes.end()) {
            best_stakes.push_back(std::move(s));
        }
    };

    auto climb = [&](std::vector<long> units) {
        units = canon(std::move(units));
        Rational value = evaluate(units);
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t i = 0; i < units.size() && !improved; ++i) {
                if (units[i] == 0) continue;
                for (std::size_t j = 0; j < units.size() && !improved; ++j) {
                    if (i == j) continue;
                    std::vector<long> next = units;
                    --next[i];
                    ++next[j];
                    next = canon(std::move(next));
                    if (next == units) continue;
                    const Rational& v = evaluate(next);
                    if (v > value) {
                        units = std::move(next);
                        value = v;
                        improved = true;
                    }
                }
            }
        }
        record(units, value);
    };

    // Deterministic portfolio: every k-average start (rounded onto the
    // integer simplex), then seeded random compositions.
    for (int k = 1; k <= n; ++k) {
        std::vector<long> units(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < k; ++i) units[static_cast<std::size_t>(i)] = d / k + (i < d % k ? 1 : 0);
        climb(units);
    }
    std::mt19937_64 gen(options.seed);
    for (int r = 0; r < options.restarts; ++r) {
        std::vector<long> cuts{0, d};
        for (int i = 1; i < n; ++i) cuts.push_back(static_cast<long>(gen() % (d + 1)));
        std::sort(cuts.begin(), cuts.end());
        std::vector<long> units;
        for (std::size_t i = 1; i < cuts.size(); ++i) units.push_back(cuts[i] - cuts[i - 1]);
        climb(units);
    }

    std::sort(best_stakes.begin(), best_stakes.end(), representative_before);
    SearchReport report;
    report.method = SearchMethod::local_search;
    report.n_cap = n;
    report.all_maximizers = std::move(best_stakes);
    report.best = make_best(report.all_maximizers.front(), best_value);
    if (report.best.kind == StrategyKind::average)
        report.certificate = "best vector found is the " + std::to_string(report.best.bets) +
                             "-average (local search, not a proof of optimality)";
    return report;
}

ConjectureVerdict csoka_check(const Params& params, int n_max, const ExhaustiveOptions& options) {
    ConjectureVerdict verdict;
    verdict.n_cap = n_max;
    verdict.report = optimize_exhaustive(params, n_max, options);
    verdict.value = verdict.report.best.value;

    for (long k = 1; k <= n_max; ++k) {
        if (average_play(k, params).value == verdict.value) {
            verdict.confirmed = true;
            verdict.optimal_k = k;
            break;
        }
    }
    if (verdict.confirmed) {
        verdict.bold = params.t.sign() > 0 &&
                       verdict.optimal_k == (Rational(1) / params.t).floor().convert_to<long>();
    } else {
        verdict.counterexample = verdict.report.all_maximizers.front();
    }
    return verdict;
}

}  // namespace stakeopt
